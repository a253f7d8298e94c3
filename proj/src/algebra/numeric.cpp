#include <string>

#include "eulersum/algebra.hpp"
#include "eulersum/series.hpp"
#include "eulersum/value_cache.hpp"

namespace eulersum {

namespace {

PrecReal compute_atom(const Atom& a, int digits) {
  switch (a.kind()) {
    case AtomKind::Zeta: return zeta_value(a.order(), digits);
    case AtomKind::ZetaBar: return zeta_bar_value(a.order(), digits);
    case AtomKind::Ln2: return ln2_value(digits);
    case AtomKind::LiHalf: return eval_polylog(a.order(), Rational(1, 2), digits);
    case AtomKind::Linear: return eval_sum(a.spec(), digits);
  }
  return PrecReal(digits);
}

}  // namespace

PrecReal atom_numeric(const Atom& a, int digits) {
  static detail::ValueCache<std::string> cache;
  return cache.get(a.to_string(), digits, [&a](int d) { return compute_atom(a, d); });
}

PrecReal sv_numeric(const SymbolicValue& v, int digits) {
  const int wd = digits + kGuardDigits;
  PrecReal sum(wd);
  for (const auto& [m, c] : v.terms()) {
    PrecReal t(c, wd);
    for (const auto& [a, e] : m.factors()) t *= pow(atom_numeric(a, wd), e);
    sum += t;
  }
  return sum.with_digits(digits);
}

}  // namespace eulersum
