#include <mutex>
#include <stdexcept>

#include "eulersum/algebra.hpp"
#include "eulersum/bernoulli.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

namespace {

SymbolicValue zeta_sv(int k, const Rational& c = Rational(1)) { return SymbolicValue::of(Atom::zeta(k), c); }

SymbolicValue ln2_power(int e, const Rational& c = Rational(1)) {
  return SymbolicValue::of(Monomial(Atom::ln2(), e), c);
}

// Li_2(1/2) = z(2)/2 - ln2^2/2
SymbolicValue li_half_2() { return zeta_sv(2, Rational(1, 2)) + ln2_power(2, Rational(-1, 2)); }

// Li_3(1/2) = 7/8 z(3) - 1/2 z(2) ln2 + 1/6 ln2^3
SymbolicValue li_half_3() {
  return zeta_sv(3, Rational(7, 8)) + SymbolicValue::of(Monomial(Atom::zeta(2)) * Monomial(Atom::ln2()), Rational(-1, 2)) +
         ln2_power(3, Rational(1, 6));
}

PrecReal plain_numeric(const SymbolicValue& v, int digits) {
  PrecReal sum(digits);
  for (const auto& [m, c] : v.terms()) {
    PrecReal t(c, digits);
    for (const auto& [a, e] : m.factors()) {
      PrecReal base = a.kind() == AtomKind::Zeta ? zeta_value(a.order(), digits) : ln2_value(digits);
      t *= pow(base, e);
    }
    sum += t;
  }
  return sum;
}

void check_li_half_rewrites() {
  static std::once_flag once;
  std::call_once(once, [] {
    constexpr int kDigits = 30;
    const PrecReal tol = ten_to(-kDigits, kDigits + 10);
    const int digits = kDigits + 10;
    if (!agrees(plain_numeric(li_half_2(), digits), eval_polylog(2, Rational(1, 2), digits), tol) ||
        !agrees(plain_numeric(li_half_3(), digits), eval_polylog(3, Rational(1, 2), digits), tol)) {
      throw std::logic_error("Li_k(1/2) rewrite failed its numeric self-check");
    }
  });
}

SymbolicValue rewrite(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::ZetaBar:
      if (a.order() == 1) return SymbolicValue::of(Atom::ln2());
      return zeta_sv(a.order(), Rational(1) - Rational(2).pow(1 - a.order()));
    case AtomKind::LiHalf:
      if (a.order() == 1) return SymbolicValue::of(Atom::ln2());
      if (a.order() == 2) {
        check_li_half_rewrites();
        return li_half_2();
      }
      if (a.order() == 3) {
        check_li_half_rewrites();
        return li_half_3();
      }
      return SymbolicValue::of(a);
    default:
      return SymbolicValue::of(a);
  }
}

// zeta(2k) / pi^(2k)
Rational even_zeta_ratio(int k) { return bernoulli(2 * k).abs() * Rational(2).pow(2 * k - 1) / factorial(2 * k); }

}  // namespace

SymbolicValue normalize(const SymbolicValue& v) {
  SymbolicValue out;
  for (const auto& [m, c] : v.terms()) {
    SymbolicValue term = SymbolicValue::constant(c);
    for (const auto& [a, e] : m.factors()) {
      SymbolicValue r = rewrite(a);
      for (int i = 0; i < e; ++i) term = term * r;
    }
    out += term;
  }
  return out;
}

SymbolicValue fold_even_zeta(const SymbolicValue& v) {
  SymbolicValue out;
  for (const auto& [m, c] : v.terms()) {
    Monomial rest;
    Rational coeff = c;
    int even_count = 0;
    int half_weight = 0;
    for (const auto& [a, e] : m.factors()) {
      if (a.kind() == AtomKind::Zeta && a.order() % 2 == 0) {
        even_count += e;
        half_weight += e * a.order() / 2;
        coeff *= even_zeta_ratio(a.order() / 2).pow(e);
      } else {
        rest = rest * Monomial(a, e);
      }
    }
    if (even_count < 2) {
      out.add_term(m, c);
      continue;
    }
    out.add_term(rest * Monomial(Atom::zeta(2 * half_weight)), coeff / even_zeta_ratio(half_weight));
  }
  return out;
}

}  // namespace eulersum
