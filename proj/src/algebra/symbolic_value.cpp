#include "eulersum/algebra.hpp"

namespace eulersum {

SymbolicValue SymbolicValue::constant(const Rational& c) { return of(Monomial(), c); }

SymbolicValue SymbolicValue::of(const Atom& a, const Rational& c) { return of(Monomial(a), c); }

SymbolicValue SymbolicValue::of(const Monomial& m, const Rational& c) {
  SymbolicValue v;
  v.add_term(m, c);
  return v;
}

Rational SymbolicValue::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolicValue::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymbolicValue& SymbolicValue::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

SymbolicValue sv_mul(const SymbolicValue& a, const SymbolicValue& b) {
  SymbolicValue r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

std::optional<int> weight_of(const SymbolicValue& v) {
  std::optional<int> w;
  for (const auto& [m, c] : v.terms()) {
    if (!w) {
      w = m.weight();
    } else if (*w != m.weight()) {
      return std::nullopt;
    }
  }
  return w;
}

}  // namespace eulersum
