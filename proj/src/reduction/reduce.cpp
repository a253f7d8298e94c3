#include "eulersum/errors.hpp"
#include "eulersum/reduction.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

int term_weight(const LhsTerm& term) {
  return std::visit([](const auto& t) { return t.weight(); }, term);
}

std::string term_to_string(const LhsTerm& term) {
  return std::visit([](const auto& t) { return t.to_string(); }, term);
}

bool weight_homogeneous(const Identity& id) {
  std::optional<int> w = weight_of(id.rhs);
  if (!w && !id.rhs.is_zero()) return false;
  for (const auto& t : id.lhs) {
    const int tw = term_weight(t.term);
    if (!w) w = tw;
    if (*w != tw) return false;
  }
  return true;
}

nlohmann::json Identity::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : lhs) {
    if (const auto* spec = std::get_if<SumSpec>(&t.term)) {
      terms.push_back({{"spec", spec->to_string()}, {"coeff", t.coeff.to_string()}});
    } else {
      const auto& in = std::get<IntegralTerm>(t.term);
      terms.push_back({{"integral", in.family == IntegralFamily::I ? "I" : "R"},
                       {"p", in.p},
                       {"q", in.q},
                       {"x", in.x.to_string()},
                       {"coeff", t.coeff.to_string()}});
    }
  }
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  return {{"provenance", provenance}, {"lhs", terms}, {"rhs", rhs.to_json()}, {"parameters", params}};
}

SymbolicValue reduce_quadratic(const SumSpec& spec) {
  if (spec.degree() == 1) return linear_value(spec);
  const auto& f = spec.factors();
  const bool shape = spec.degree() == 2 && f.size() == 2 && spec.power() == 1 && spec.alternating() &&
                     f[0].kind == f[1].kind && f[0].order >= 2 && (f[1].order - f[0].order) % 2 == 1;
  if (!shape) {
    throw UncoveredSpec("no reduction for " + spec.to_string() +
                        "; covered: h(p)*h(p+2m+1)/n alt and l(p)*l(p+2m+1)/n alt with p >= 2, m >= 0, "
                        "and degree-1 sums");
  }
  const int p = f[0].order;
  const int m = (f[1].order - p - 1) / 2;
  const Rational s(p % 2 == 0 ? 1 : -1);
  // The symmetric relation holds the quadratic sum plus a pair whose sum is
  // fixed by the pair relation.
  if (f[0].kind == FactorKind::H) return canonicalize(symmetric_zeta(p, m).rhs - alternating_harmonic_pair(p, m).rhs * s);
  return canonicalize(symmetric_alternating(p, m).rhs + alternating_double_pair(p, m).rhs * s);
}

}  // namespace eulersum
