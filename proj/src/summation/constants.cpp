#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "eulersum/bernoulli.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/series.hpp"
#include "eulersum/value_cache.hpp"

namespace eulersum {

namespace {

detail::ValueCache<int> zeta_cache;
detail::ValueCache<std::pair<int, std::string>> polylog_cache;

// zeta(k) for k >= 2 from a truncated sum plus its Euler-Maclaurin tail.
PrecReal zeta_em(int k, int digits) {
  const int wd = digits + 10;
  const long n_cut = std::max(20, wd);
  PrecReal sum(wd);
  for (long n = 1; n < n_cut; ++n) sum += inverse_power(n, k, wd);
  PrecReal tail = inverse_power(n_cut, k - 1, wd) / (k - 1);
  tail += inverse_power(n_cut, k, wd) / 2;
  // p = (k)_(2i-1) / (2i)! * N^(1-k-2i), starting at i = 1
  PrecReal p = inverse_power(n_cut, k + 1, wd) * k / 2;
  PrecReal n_sq(n_cut * n_cut, wd);
  const PrecReal eps = ten_to(-wd - 5, wd);
  for (int i = 1;; ++i) {
    PrecReal term = PrecReal(bernoulli(2 * i), wd) * p;
    tail += term;
    if (abs(term) < eps) break;
    if (i > 4 * wd) throw AccelerationFailure("zeta tail did not settle");
    p *= static_cast<long>(k + 2 * i - 1);
    p *= static_cast<long>(k + 2 * i);
    p /= static_cast<long>((2 * i + 1) * (2 * i + 2));
    p /= n_sq;
  }
  return sum + tail;
}

}  // namespace

PrecReal zeta_value(int k, int digits) {
  if (k < 2) throw DomainError("zeta(" + std::to_string(k) + ") is not a finite value");
  return zeta_cache.get(k, digits, [k](int d) { return zeta_em(k, d); });
}

PrecReal ln2_value(int digits) { return real_ln(PrecReal(2, digits + 5), digits).with_digits(digits); }

PrecReal zeta_bar_value(int k, int digits) {
  if (k < 1) throw DomainError("alternating zeta needs k >= 1");
  if (k == 1) return ln2_value(digits);
  const int wd = digits + 5;
  PrecReal factor = PrecReal(1, wd) - inverse_power(2, k - 1, wd);
  return (factor * zeta_value(k, wd)).with_digits(digits);
}

PrecReal log_one_minus(const Rational& x, int digits) {
  if (x >= Rational(1)) throw DomainError("ln(1 - x) needs x < 1");
  return real_ln(PrecReal(Rational(1) - x, digits + 5), digits);
}

PrecReal eval_polylog(int p, const Rational& x, int digits, const EvalOptions& opts) {
  if (p < 1) throw ParameterError("polylogarithm order must be at least 1");
  if (x.abs() > Rational(1)) throw DomainError("polylogarithm argument outside [-1, 1]");
  if (x == Rational(1)) {
    if (p == 1) throw DivergentSeries("Li_1(1) diverges");
    return zeta_value(p, digits);
  }
  if (x == Rational(-1)) return -zeta_bar_value(p, digits);
  if (x.is_zero()) return PrecReal(digits);
  auto compute = [&](int d) {
    const int wd = d + 10;
    PrecReal xr(x, wd);
    PrecReal ax = abs(xr);
    PrecReal one_minus = PrecReal(1, wd) - ax;
    const PrecReal eps = ten_to(-wd, wd);
    PrecReal sum(wd);
    PrecReal xn(1, wd);
    for (long n = 1;; ++n) {
      if (n > opts.max_terms) throw BudgetExceeded("polylogarithm series exceeds term budget");
      xn *= xr;
      sum += xn * inverse_power(n, p, wd);
      // remaining terms bounded by |x|^(n+1) / ((n+1)^p (1 - |x|))
      PrecReal bound = abs(xn) * ax * inverse_power(n + 1, p, wd) / one_minus;
      if (bound < eps) break;
    }
    return sum.with_digits(d);
  };
  return polylog_cache.get({p, x.to_string()}, digits, compute);
}

}  // namespace eulersum
