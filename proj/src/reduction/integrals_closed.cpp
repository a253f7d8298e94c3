#include "eulersum/errors.hpp"
#include "eulersum/reduction.hpp"

namespace eulersum {

namespace {

SymbolicValue z(int k) { return SymbolicValue::of(Atom::zeta(k)); }
SymbolicValue zb(int k) { return SymbolicValue::of(Atom::zeta_bar(k)); }
SymbolicValue z_or_zero(int k) { return k == 1 ? SymbolicValue() : z(k); }
Rational sign_of(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

SymbolicValue integral_I_closed(int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("integral_I_closed needs p, q >= 1");
  SymbolicValue v;
  for (int i = 1; i <= q - 1; ++i) v += (z(q + 1 - i) * z(p + i)) * sign_of(i - 1);
  v += z(p + q + 1) * (sign_of(q - 1) * (Rational(1) + Rational(p + q, 2)));
  for (int k = 1; k <= p + q - 2; ++k) v -= (z(k + 1) * z_or_zero(p + q - k)) * (sign_of(q - 1) * Rational(1, 2));
  return v;
}

SymbolicValue integral_at_minus1(IntegralFamily family, int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("integral_at_minus1 needs p, q >= 1");
  const SymbolicValue ln2 = SymbolicValue::of(Atom::ln2());
  SymbolicValue v;
  if (family == IntegralFamily::I) {
    // Li(-1) Li(-1) products, ln(1-x)(Li(-1) - zeta) and the residual series
    for (int i = 1; i <= q - 1; ++i) v += (zb(p + i) * zb(q + 1 - i)) * sign_of(i - 1);
    v -= (ln2 * (zb(p + q) + z(p + q))) * sign_of(q);
    v += SymbolicValue::of(Atom::linear(SumSpec::linear(FactorKind::L, 1, p + q, false))) * sign_of(q);
  } else {
    for (int i = 1; i <= q - 1; ++i) v -= (z(p + i) * zb(q + 1 - i)) * sign_of(i - 1);
    v += (ln2 * (z(p + q) + zb(p + q))) * sign_of(q);
    v += SymbolicValue::of(Atom::linear(SumSpec::linear(FactorKind::L, 1, p + q, true))) * sign_of(q + 1);
  }
  return normalize(v);
}

std::string IntegralTerm::to_string() const {
  return std::string(family == IntegralFamily::I ? "I(" : "R(") + std::to_string(p) + "," + std::to_string(q) + ")@" +
         x.to_string();
}

}  // namespace eulersum
