#include <algorithm>
#include <stdexcept>
#include <string>

#include "eulersum/algebra.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

Atom Atom::zeta(int k) {
  if (k < 2) throw DomainError("zeta(" + std::to_string(k) + ") is not a basis constant");
  return Atom(AtomKind::Zeta, k, std::nullopt);
}

Atom Atom::zeta_bar(int k) {
  if (k < 1) throw DomainError("alternating zeta needs k >= 1");
  return Atom(AtomKind::ZetaBar, k, std::nullopt);
}

Atom Atom::ln2() { return Atom(AtomKind::Ln2, 1, std::nullopt); }

Atom Atom::li_half(int k) {
  if (k < 1) throw DomainError("Li_k(1/2) needs k >= 1");
  return Atom(AtomKind::LiHalf, k, std::nullopt);
}

Atom Atom::linear(const SumSpec& spec) {
  if (spec.degree() != 1) throw ParameterError("linear atom needs a single-factor sum, got " + spec.to_string());
  return Atom(AtomKind::Linear, spec.weight(), spec);
}

const SumSpec& Atom::spec() const {
  if (!spec_) throw std::logic_error("atom has no sum spec");
  return *spec_;
}

std::string Atom::to_string() const {
  switch (kind_) {
    case AtomKind::Zeta: return "z(" + std::to_string(order_) + ")";
    case AtomKind::ZetaBar: return "zb(" + std::to_string(order_) + ")";
    case AtomKind::Ln2: return "ln2";
    case AtomKind::LiHalf: return "lih(" + std::to_string(order_) + ")";
    case AtomKind::Linear: return "LS{" + spec_->to_string() + "}";
  }
  return {};
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  if (a.kind_ != AtomKind::Linear) return std::strong_ordering::equal;
  int c = a.spec_->to_string().compare(b.spec_->to_string());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Monomial::Monomial(const Atom& a, int exponent) {
  if (exponent < 0) throw ParameterError("negative atom exponent");
  if (exponent > 0) factors_.emplace_back(a, exponent);
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& [a, e] : factors_) w += a.weight() * e;
  return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [a, e] : factors_) {
    if (!out.empty()) out += "*";
    out += a.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                b.factors_.end(), [](const auto& x, const auto& y) {
                                                  if (auto c = x.first <=> y.first; c != 0) return c;
                                                  return x.second <=> y.second;
                                                });
}

}  // namespace eulersum
