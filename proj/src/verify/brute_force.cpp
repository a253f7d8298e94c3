#include "eulersum/errors.hpp"
#include "eulersum/verify.hpp"

namespace eulersum {

namespace {

// integral from m to infinity of ln^b(x) x^(-s), b in {0, 1}
PrecReal tail_integral(const PrecReal& m, const PrecReal& ln_m, int s, bool with_log) {
  const int d = m.digits();
  PrecReal head(d);
  mpfr_ui_div(head.get(), 1, m.get(), MPFR_RNDN);
  head = pow(head, s - 1);
  if (!with_log) return head / (s - 1);
  return head * (ln_m / (s - 1) + PrecReal(Rational(1, (s - 1) * (s - 1)), d));
}

}  // namespace

PrecReal brute_force_linear(int order, int power, int digits, long terms) {
  if (order < 1 || power < 2) throw ParameterError("brute force needs order >= 1 and power >= 2");
  const int wd = digits + 10;
  PrecReal partial(wd);
  PrecReal sum(wd);
  PrecReal t(wd);
  PrecReal nk(wd);
  for (long n = 1; n <= terms; ++n) {
    mpfr_ui_pow_ui(nk.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(order), MPFR_RNDN);
    mpfr_ui_div(t.get(), 1, nk.get(), MPFR_RNDN);
    partial += t;
    mpfr_ui_pow_ui(nk.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(power), MPFR_RNDN);
    mpfr_div(t.get(), partial.get(), nk.get(), MPFR_RNDN);
    sum += t;
  }

  // Midpoint rule from terms + 1/2 on the asymptotic expansion of the partial sum.
  PrecReal m(Rational(2 * terms + 1, 2), wd);
  PrecReal ln_m(wd);
  mpfr_log(ln_m.get(), m.get(), MPFR_RNDN);
  const int q = power;
  PrecReal tail(wd);
  if (order == 1) {
    PrecReal gamma(wd);
    mpfr_const_euler(gamma.get(), MPFR_RNDN);
    tail = tail_integral(m, ln_m, q, true) + gamma * tail_integral(m, ln_m, q, false) +
           tail_integral(m, ln_m, q + 1, false) / 2 - tail_integral(m, ln_m, q + 2, false) / 12;
  } else {
    const int k = order;
    PrecReal zk(wd);
    mpfr_zeta_ui(zk.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    tail = zk * tail_integral(m, ln_m, q, false) - tail_integral(m, ln_m, k + q - 1, false) / (k - 1) +
           tail_integral(m, ln_m, k + q, false) / 2 - tail_integral(m, ln_m, k + q + 1, false) * k / 12;
  }
  return (sum + tail).with_digits(digits);
}

}  // namespace eulersum
