// Euler sums are evaluated as a direct sum over n <= N plus the sum over
// n > N of the asymptotic expansion of the summand. Every partial-sum factor
// expands as a combination of (-1)^(sigma n) * ln^b(n) * n^(-s) terms; tails of
// those terms come from Euler-Maclaurin (sigma = 0) or Boole summation
// (sigma = 1).

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "eulersum/bernoulli.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

namespace {

// (oscillating, ln power)
using TermKey = std::pair<int, int>;

class Expansion {
 public:
  Expansion(int cap, int digits) : cap_(cap), digits_(digits) {}

  static Expansion constant(const PrecReal& c, int cap, int digits) {
    Expansion e(cap, digits);
    e.coeff(0, 0, 0) = c;
    return e;
  }

  PrecReal& coeff(int oscillating, int log_power, int s) {
    auto it = terms_.find({oscillating, log_power});
    if (it == terms_.end()) {
      it = terms_.emplace(TermKey{oscillating, log_power},
                          std::vector<PrecReal>(static_cast<std::size_t>(cap_ + 1), PrecReal(digits_)))
               .first;
    }
    return it->second[static_cast<std::size_t>(s)];
  }

  Expansion times(const Expansion& o) const {
    Expansion r(cap_, digits_);
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : o.terms_) {
        int osc = ka.first ^ kb.first;
        int lp = ka.second + kb.second;
        for (int i = 0; i <= cap_; ++i) {
          if (ca[static_cast<std::size_t>(i)].is_zero()) continue;
          for (int j = 0; i + j <= cap_; ++j) {
            if (cb[static_cast<std::size_t>(j)].is_zero()) continue;
            r.coeff(osc, lp, i + j) += ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)];
          }
        }
      }
    }
    return r;
  }

  const std::map<TermKey, std::vector<PrecReal>>& terms() const { return terms_; }

 private:
  int cap_;
  int digits_;
  std::map<TermKey, std::vector<PrecReal>> terms_;
};

// Sums over n > N of ln^b(n) / n^s and (-1)^n ln^b(n) / n^s.
class TailSums {
 public:
  TailSums(long n_cut, int digits)
      : n_cut_(n_cut), digits_(digits), eps_(ten_to(-digits - 8, digits)) {}

  PrecReal get(bool oscillating, int s, int b) {
    auto key = std::make_tuple(oscillating, s, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    PrecReal v = oscillating ? boole(s, b) : euler_maclaurin(s, b);
    cache_.emplace(key, v);
    return v;
  }

 private:
  // Derivatives of x^(-a) ln^c(x), stored as coefficients of ln^c times x^(-a)
  // and divided by j! as they go.
  struct ScaledDerivative {
    std::vector<PrecReal> coeffs;
    long a;

    void step(long j) {
      std::vector<PrecReal> next(coeffs.size(), PrecReal(coeffs[0].digits()));
      for (std::size_t c = 0; c < coeffs.size(); ++c) {
        next[c] = coeffs[c] * (-a);
        if (c + 1 < coeffs.size()) next[c] += coeffs[c + 1] * static_cast<long>(c + 1);
        next[c] /= j;
      }
      coeffs = std::move(next);
      ++a;
    }
  };

  PrecReal evaluate(const ScaledDerivative& d, const std::vector<PrecReal>& log_pow, long at) const {
    PrecReal acc(digits_);
    for (std::size_t c = 0; c < d.coeffs.size(); ++c) acc += d.coeffs[c] * log_pow[c];
    return acc * inverse_power(at, d.a, digits_);
  }

  std::vector<PrecReal> log_powers(long at, int b) const {
    PrecReal l = real_ln(PrecReal(at, digits_), digits_);
    std::vector<PrecReal> pw{PrecReal(1, digits_)};
    for (int c = 1; c <= b; ++c) pw.push_back(pw.back() * l);
    return pw;
  }

  PrecReal euler_maclaurin(int s, int b) const {
    if (s < 2) throw DivergentSeries("non-oscillating tail term with n^-" + std::to_string(s));
    auto lp = log_powers(n_cut_, b);
    // integral from N to infinity of x^-s ln^b x
    PrecReal integral(digits_);
    PrecReal falling(1, digits_);
    PrecReal denom(s - 1, digits_);
    for (int j = 0; j <= b; ++j) {
      integral += falling * lp[static_cast<std::size_t>(b - j)] / denom;
      falling *= static_cast<long>(b - j);
      denom *= static_cast<long>(s - 1);
    }
    integral *= inverse_power(n_cut_, s - 1, digits_);
    ScaledDerivative d{std::vector<PrecReal>(static_cast<std::size_t>(b + 1), PrecReal(digits_)), s};
    d.coeffs[static_cast<std::size_t>(b)] = PrecReal(1, digits_);
    PrecReal val = integral - evaluate(d, lp, n_cut_) / 2;
    PrecReal last(digits_);
    int growing = 0;
    for (long j = 1;; ++j) {
      d.step(j);
      if (j % 2 == 0) continue;
      long k2 = j + 1;
      PrecReal term = PrecReal(bernoulli(static_cast<int>(k2)), digits_) / k2 * evaluate(d, lp, n_cut_);
      val -= term;
      PrecReal mag = abs(term);
      if (mag < eps_) break;
      if (j > 1 && mag > last && ++growing > 3) throw AccelerationFailure("Euler-Maclaurin tail diverged");
      last = mag;
      if (j > 8L * digits_ + 200) throw AccelerationFailure("Euler-Maclaurin tail did not settle");
    }
    return val;
  }

  PrecReal boole(int s, int b) const {
    const long m = n_cut_ + 1;
    auto lp = log_powers(m, b);
    ScaledDerivative d{std::vector<PrecReal>(static_cast<std::size_t>(b + 1), PrecReal(digits_)), s};
    d.coeffs[static_cast<std::size_t>(b)] = PrecReal(1, digits_);
    PrecReal val = evaluate(d, lp, m);
    PrecReal last(digits_);
    int growing = 0;
    for (long j = 1;; ++j) {
      d.step(j);
      if (j > 1 && j % 2 == 0) continue;  // E_j(0) vanishes for even j >= 2
      PrecReal term = PrecReal(euler_polynomial_at_zero(static_cast<int>(j)), digits_) * evaluate(d, lp, m);
      val += term;
      PrecReal mag = abs(term);
      if (mag < eps_) break;
      if (j > 1 && mag > last && ++growing > 3) throw AccelerationFailure("Boole tail diverged");
      last = mag;
      if (j > 8L * digits_ + 200) throw AccelerationFailure("Boole tail did not settle");
    }
    val /= 2;
    return (n_cut_ % 2 == 0) ? -val : val;  // (-1)^(N+1)
  }

  long n_cut_;
  int digits_;
  PrecReal eps_;
  std::map<std::tuple<bool, int, int>, PrecReal> cache_;
};

Expansion factor_expansion(const PartialSumFactor& f, int cap, int wd, const EvalOptions& opts) {
  const int k = f.order;
  Expansion e(cap, wd);
  if (f.arg.is_zero()) return e;
  if (f.arg == Rational(1) && k == 1) {
    e.coeff(0, 1, 0) = PrecReal(1, wd);
    e.coeff(0, 0, 0) = euler_gamma(wd);
    if (cap >= 1) e.coeff(0, 0, 1) = PrecReal(Rational(1, 2), wd);
    for (int i = 1; 2 * i <= cap; ++i) e.coeff(0, 0, 2 * i) = PrecReal(-bernoulli(2 * i) / Rational(2 * i), wd);
  } else if (f.arg == Rational(1)) {
    e.coeff(0, 0, 0) = zeta_value(k, wd);
    if (k - 1 <= cap) e.coeff(0, 0, k - 1) -= PrecReal(Rational(1, k - 1), wd);
    if (k <= cap) e.coeff(0, 0, k) += PrecReal(Rational(1, 2), wd);
    // rising factorial (k)_(2i-1) / (2i)!
    Rational r(k, 2);
    for (int i = 1; k + 2 * i - 1 <= cap; ++i) {
      e.coeff(0, 0, k + 2 * i - 1) -= PrecReal(bernoulli(2 * i) * r, wd);
      r *= Rational(static_cast<long>(k + 2 * i - 1) * (k + 2 * i), static_cast<long>(2 * i + 1) * (2 * i + 2));
    }
  } else if (f.arg == Rational(-1)) {
    // zeta_n(k,-1) = -zetabar(k) + (-1)^n phi_k(n)
    e.coeff(0, 0, 0) = -zeta_bar_value(k, wd);
    if (k <= cap) e.coeff(1, 0, k) += PrecReal(1, wd);
    for (int j = 0; k + j <= cap; ++j) {
      Rational c = euler_polynomial_at_zero(j) * binomial_exact(k + j - 1, j) / Rational(2);
      if (j % 2 == 1) c = -c;
      e.coeff(1, 0, k + j) -= PrecReal(c, wd);
    }
  } else {
    e.coeff(0, 0, 0) = eval_polylog(k, f.arg, wd, opts);
  }
  Expansion r = e;
  for (int i = 1; i < f.exponent; ++i) r = r.times(e);
  return r;
}

double log10_rational_abs(const Rational& x) {
  return std::log10(std::fabs(mpq_class(x.value()).get_d()));
}

int total_degree(const GeneralSeries& s) {
  int d = 0;
  for (const auto& f : s.factors) d += f.exponent;
  return d;
}

// Direct sum of the first n_cut terms.
PrecReal direct_sum(const GeneralSeries& s, long n_cut, int wd, const PrecReal* stop_eps) {
  std::vector<PrecReal> partial(s.factors.size(), PrecReal(wd));
  std::vector<PrecReal> arg_pow(s.factors.size(), PrecReal(1, wd));
  std::vector<PrecReal> args;
  for (const auto& f : s.factors) args.emplace_back(f.arg, wd);
  PrecReal outer(s.outer, wd);
  PrecReal outer_pow(1, wd);
  PrecReal total(wd);
  const int deg = total_degree(s);
  PrecReal abs_outer = abs(outer);
  PrecReal geometric_scale = stop_eps ? PrecReal(1, wd) / ((PrecReal(1, wd) - abs_outer) * (PrecReal(1, wd) - abs_outer))
                                      : PrecReal(1, wd);
  for (long n = 1; n <= n_cut; ++n) {
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      arg_pow[i] *= args[i];
      partial[i] += arg_pow[i] * inverse_power(n, s.factors[i].order, wd);
    }
    outer_pow *= outer;
    PrecReal term = outer_pow * inverse_power(n, s.power, wd);
    for (std::size_t i = 0; i < s.factors.size(); ++i) term *= pow(partial[i], s.factors[i].exponent);
    total += term;
    if (stop_eps) {
      // factors are bounded by 1 + ln n; the rest decays geometrically
      double growth = std::pow(2.0 + std::log(2.0 * static_cast<double>(n) + 2.0), deg);
      PrecReal bound = abs(outer_pow) * abs_outer * geometric_scale * PrecReal(static_cast<long>(std::ceil(growth)), wd);
      if (bound < *stop_eps) return total;
      if (n == n_cut) throw BudgetExceeded("geometric series exceeds term budget");
    }
  }
  return total;
}

struct Evaluation {
  PrecReal value;
  long terms;
};

Evaluation evaluate_at(const GeneralSeries& s, int wd, const EvalOptions& opts) {
  if (s.outer.is_zero()) return {PrecReal(wd), 0};
  for (const auto& f : s.factors) {
    if (f.arg.is_zero()) return {PrecReal(wd), 0};
  }
  const int deg = total_degree(s);

  if (s.outer.abs() < Rational(1)) {
    PrecReal eps = ten_to(-wd - 5, wd);
    PrecReal v = direct_sum(s, opts.max_terms, wd, &eps);
    return {v, 0};
  }

  long n_cut = wd + 20;
  for (const auto& f : s.factors) {
    if (f.arg.abs() == Rational(1)) continue;
    double a = f.arg.abs() == Rational(1) ? 0.0 : log10_rational_abs(f.arg);
    double one_minus = std::log10(1.0 - std::pow(10.0, a));
    double need = (wd + 8 - 2.0 * one_minus + 2.0 * deg) / -a;
    n_cut = std::max(n_cut, static_cast<long>(std::ceil(need)));
  }
  if (n_cut > opts.max_terms) {
    throw BudgetExceeded("series needs " + std::to_string(n_cut) + " direct terms, budget is " +
                         std::to_string(opts.max_terms));
  }
  // expansion order: smallest cap with cap! / (pi N)^cap below the target
  int cap = 8;
  const double lpn = std::log10(3.14159265358979 * static_cast<double>(n_cut));
  while (std::lgamma(cap + 1.0) / std::log(10.0) - cap * lpn > -(wd + 5)) ++cap;
  cap += 4;

  Expansion ex = Expansion::constant(PrecReal(1, wd), cap, wd);
  for (const auto& f : s.factors) ex = ex.times(factor_expansion(f, cap, wd, opts));
  const bool outer_oscillates = s.outer == Rational(-1);

  PrecReal total = direct_sum(s, n_cut, wd, nullptr);
  TailSums tails(n_cut, wd);
  const PrecReal negligible = ten_to(-wd - 8, wd);
  for (const auto& [key, coeffs] : ex.terms()) {
    bool osc = (key.first != 0) != outer_oscillates;
    for (int i = 0; i <= cap; ++i) {
      const PrecReal& c = coeffs[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      int s_pow = i + s.power;
      if (!osc && s_pow < 2) {
        if (abs(c) < negligible) continue;
        throw DivergentSeries("summand decays too slowly");
      }
      total += c * tails.get(osc, s_pow, key.second);
    }
  }
  return {total, n_cut};
}

}  // namespace

bool converges(const GeneralSeries& s) {
  for (const auto& f : s.factors) {
    if (f.arg.abs() > Rational(1)) return false;
    if (f.order < 1 || f.exponent < 1) return false;
  }
  if (s.outer.is_zero()) return true;
  for (const auto& f : s.factors) {
    if (f.arg.is_zero()) return true;
  }
  Rational a = s.outer.abs();
  if (a > Rational(1)) return false;
  if (a < Rational(1)) return true;
  if (s.outer == Rational(-1)) return s.power >= 1;
  return s.power >= 2;
}

bool converges(const SumSpec& spec) { return spec.alternating() ? spec.power() >= 1 : spec.power() >= 2; }

SignedSeries to_general(const SumSpec& spec) {
  SignedSeries out;
  out.series.power = spec.power();
  for (const auto& f : spec.factors()) {
    if (f.kind == FactorKind::H) {
      out.series.factors.push_back({f.order, Rational(1), f.exponent});
    } else {
      // L_n(k) = -zeta_n(k, -1)
      out.series.factors.push_back({f.order, Rational(-1), f.exponent});
      if (f.exponent % 2 == 1) out.sign = -out.sign;
    }
  }
  if (spec.alternating()) {
    out.series.outer = Rational(-1);
    out.sign = -out.sign;  // (-1)^(n-1) = -(-1)^n
  } else {
    out.series.outer = Rational(1);
  }
  return out;
}

SeriesValue eval_series(const GeneralSeries& s, int digits, const EvalOptions& opts) {
  if (digits < 1) throw ParameterError("digits must be positive");
  if (!converges(s)) throw DivergentSeries("series does not converge");
  Evaluation first = evaluate_at(s, digits + kGuardDigits, opts);
  Evaluation second = evaluate_at(s, digits + 10 + kGuardDigits, opts);
  PrecReal err = abs(first.value - second.value);
  PrecReal scale = abs(second.value);
  if (scale < PrecReal(1, scale.digits())) scale = PrecReal(1, scale.digits());
  if (err > ten_to(-digits, digits + kGuardDigits) * scale) {
    throw AccelerationFailure("re-evaluation at higher precision disagrees beyond the certified bound");
  }
  return {second.value.with_digits(digits), err.with_digits(5), second.terms};
}

SeriesValue eval_sum_detailed(const SumSpec& spec, int digits, const EvalOptions& opts) {
  if (!converges(spec)) throw DivergentSeries("sum " + spec.to_string() + " diverges");
  SignedSeries g = to_general(spec);
  SeriesValue v = eval_series(g.series, digits, opts);
  if (g.sign < 0) v.value = -v.value;
  return v;
}

PrecReal eval_sum(const SumSpec& spec, int digits, const EvalOptions& opts) {
  return eval_sum_detailed(spec, digits, opts).value;
}

}  // namespace eulersum
