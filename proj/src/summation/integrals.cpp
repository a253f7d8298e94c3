#include <string>

#include "eulersum/errors.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

PrecReal polylog_moment(long n, int q, const Rational& x, int digits, const EvalOptions& opts) {
  if (n < 1 || q < 1) throw ParameterError("polylog moment needs n >= 1 and q >= 1");
  if (x >= Rational(1) || x < Rational(-1)) throw DomainError("polylog moment argument outside [-1, 1)");
  if (x.is_zero()) return PrecReal(digits);
  const int wd = digits + kGuardDigits;
  PrecReal xn(x.pow(static_cast<int>(n)), wd);
  PrecReal total(wd);
  for (int i = 1; i <= q - 1; ++i) {
    PrecReal t = xn * inverse_power(n, i, wd) * eval_polylog(q + 1 - i, x, wd, opts);
    total += (i % 2 == 1) ? t : -t;
  }
  PrecReal sign_q(q % 2 == 0 ? 1 : -1, wd);
  PrecReal inv_nq = inverse_power(n, q, wd);
  total += sign_q * inv_nq * log_one_minus(x, wd) * (xn - PrecReal(1, wd));
  total -= sign_q * inv_nq * PrecReal(partial_sum(1, n, x, opts), wd);
  return total.with_digits(digits);
}

namespace {

void check_integral_args(int p, int q, const Rational& x) {
  if (p < 1 || q < 1) throw ParameterError("integral orders must be at least 1");
  if (x.abs() > Rational(1)) throw DomainError("integral endpoint outside [-1, 1]");
}

// sum_n zeta_n(j, arg) outer^n / n^w
PrecReal weighted_series(int j, const Rational& arg, int w, const Rational& outer, int wd, const EvalOptions& opts) {
  GeneralSeries s{{{j, arg, 1}}, w, outer};
  return eval_series(s, wd, opts).value;
}

}  // namespace

// The double series sum_{k,m} x^(k+m) / (k^p m^q (k+m)) is grouped along
// k + m = N; partial fractions turn each inner sum into zeta_(N-1)(j) terms.
PrecReal eval_I(int p, int q, const Rational& x, int digits, const EvalOptions& opts) {
  check_integral_args(p, q, x);
  if (x.is_zero()) return PrecReal(digits);
  const int wd = digits + 5;
  const int top = p + q + 1;
  PrecReal total(wd);
  Rational coeff_sum;
  for (int j = 1; j <= p; ++j) {
    Rational a = binomial_exact(p + q - j - 1, p - j);
    coeff_sum += a;
    total += PrecReal(a, wd) * weighted_series(j, Rational(1), top - j, x, wd, opts);
  }
  for (int j = 1; j <= q; ++j) {
    Rational b = binomial_exact(p + q - j - 1, q - j);
    coeff_sum += b;
    total += PrecReal(b, wd) * weighted_series(j, Rational(1), top - j, x, wd, opts);
  }
  total -= PrecReal(coeff_sum, wd) * eval_polylog(top, x, wd, opts);
  return total.with_digits(digits);
}

// Same grouping for sum_{k,m} (-1)^k x^(k+m) / (k^p m^q (k+m)).
PrecReal eval_R(int p, int q, const Rational& x, int digits, const EvalOptions& opts) {
  check_integral_args(p, q, x);
  if (x.is_zero()) return PrecReal(digits);
  const int wd = digits + 5;
  const int top = p + q + 1;
  PrecReal total(wd);
  for (int j = 1; j <= p; ++j) {
    Rational a = binomial_exact(p + q - j - 1, p - j);
    PrecReal part = weighted_series(j, Rational(-1), top - j, x, wd, opts) - eval_polylog(top, -x, wd, opts);
    total += PrecReal(a, wd) * part;
  }
  for (int j = 1; j <= q; ++j) {
    Rational b = binomial_exact(p + q - j - 1, q - j);
    PrecReal part = weighted_series(j, Rational(-1), top - j, -x, wd, opts) - eval_polylog(top, x, wd, opts);
    total += PrecReal(b, wd) * part;
  }
  return total.with_digits(digits);
}

}  // namespace eulersum
