#pragma once

#include <vector>

#include "eulersum/prec_real.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/sum_spec.hpp"

namespace eulersum {

// Term budget for direct summation and exact partial sums. Reads
// EULERSUM_MAX_TERMS when set, otherwise 10^6.
long default_term_budget();

struct EvalOptions {
  long max_terms = default_term_budget();
};

// zeta_n(order, arg)^exponent, where zeta_n(l, x) = sum_{k<=n} x^k / k^l.
struct PartialSumFactor {
  int order = 1;
  Rational arg{1};
  int exponent = 1;
};

// sum_{n>=1} outer^n * prod(factors) / n^power
struct GeneralSeries {
  std::vector<PartialSumFactor> factors;
  int power = 1;
  Rational outer{1};
};

struct SeriesValue {
  PrecReal value;
  PrecReal error;  // |difference| against the re-evaluation at digits + 10
  long terms = 0;  // direct terms used by the final evaluation
};

// Exact partial sums. H-type order k is zeta_n(k), L-type is L_n(k).
Rational partial_sum(FactorKind kind, int order, long n, const EvalOptions& opts = {});
// zeta_n(order, x) for x in [-1, 1].
Rational partial_sum(int order, long n, const Rational& x, const EvalOptions& opts = {});

bool converges(const SumSpec& spec);
bool converges(const GeneralSeries& series);

// A SumSpec equals sign * (the returned general series).
struct SignedSeries {
  int sign = 1;
  GeneralSeries series;
};
SignedSeries to_general(const SumSpec& spec);

SeriesValue eval_series(const GeneralSeries& series, int digits, const EvalOptions& opts = {});
SeriesValue eval_sum_detailed(const SumSpec& spec, int digits, const EvalOptions& opts = {});
PrecReal eval_sum(const SumSpec& spec, int digits, const EvalOptions& opts = {});

PrecReal zeta_value(int k, int digits);
// Alternating zeta; k = 1 gives ln 2.
PrecReal zeta_bar_value(int k, int digits);
PrecReal ln2_value(int digits);
PrecReal eval_polylog(int p, const Rational& x, int digits, const EvalOptions& opts = {});
// ln(1 - x) for x < 1.
PrecReal log_one_minus(const Rational& x, int digits);
// Integral from 0 to x of t^(n-1) Li_q(t) dt, through its integration by parts form.
PrecReal polylog_moment(long n, int q, const Rational& x, int digits, const EvalOptions& opts = {});
// I_{p,q}(x) = integral_0^x Li_p(t) Li_q(t) / t dt
PrecReal eval_I(int p, int q, const Rational& x, int digits, const EvalOptions& opts = {});
// R_{p,q}(x) = integral_0^x Li_p(-t) Li_q(t) / t dt
PrecReal eval_R(int p, int q, const Rational& x, int digits, const EvalOptions& opts = {});
inline PrecReal eval_R(int p, int q, int digits, const EvalOptions& opts = {}) {
  return eval_R(p, q, Rational(-1), digits, opts);
}

}  // namespace eulersum
