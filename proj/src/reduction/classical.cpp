#include <mutex>
#include <stdexcept>
#include <utility>

#include "eulersum/reduction.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

namespace {

constexpr std::pair<const char*, const char*> kClassical[] = {
    {"h(1)/n^2 alt", "5/8*z(3)"},
    {"l(1)/n^2", "-1/4*z(3) + 3/2*z(2)*ln2"},
    {"l(1)/n^2 alt", "-5/8*z(3) + 3/2*z(2)*ln2"},
    {"h(2)/n alt", "z(3) - 1/2*z(2)*ln2"},
    {"l(2)/n alt", "13/8*z(3) - z(2)*ln2"},
    {"h(1)/n^3 alt", "11/4*z(4) - 7/4*z(3)*ln2 + 1/2*z(2)*ln2^2 - 1/12*ln2^4 - 2*lih(4)"},
    {"l(1)/n^3", "-5/16*z(4) + 7/4*z(3)*ln2"},
    {"l(1)/n^3 alt", "3/2*z(4) + 1/2*z(2)*ln2^2 - 1/12*ln2^4 - 2*lih(4)"},
    {"h(2)/n^2 alt", "-51/16*z(4) + 7/2*z(3)*ln2 - z(2)*ln2^2 + 1/6*ln2^4 + 4*lih(4)"},
    {"l(2)/n^2", "85/16*z(4) - 7/2*z(3)*ln2 + z(2)*ln2^2 - 1/6*ln2^4 - 4*lih(4)"},
    {"l(2)/n^2 alt", "13/16*z(4)"},
    {"h(3)/n alt", "19/16*z(4) - 3/4*z(3)*ln2"},
    {"l(3)/n alt", "-1/2*z(4) + 3/4*z(3)*ln2 - 1/2*z(2)*ln2^2 + 1/12*ln2^4 + 2*lih(4)"},
    {"h(1)/n^4 alt", "59/32*z(5) - 1/2*z(2)*z(3)"},
    {"l(1)/n^4", "-17/16*z(5) + 3/8*z(2)*z(3) + 15/8*z(4)*ln2"},
    {"l(1)/n^4 alt", "-59/32*z(5) + 3/4*z(2)*z(3) + 15/8*z(4)*ln2"},
    {"h(2)/n^3 alt", "-11/32*z(5) + 5/8*z(2)*z(3)"},
    {"l(2)/n^3", "51/32*z(5) - 1/4*z(2)*z(3)"},
    {"l(2)/n^3 alt", "83/16*z(5) - 9/4*z(2)*z(3)"},
    {"h(3)/n^2 alt", "-21/32*z(5) + 3/4*z(2)*z(3)"},
    {"l(3)/n^2", "41/32*z(5) + 1/8*z(2)*z(3)"},
    {"l(3)/n^2 alt", "-67/16*z(5) + 21/8*z(2)*z(3)"},
    {"h(4)/n alt", "2*z(5) - 3/8*z(2)*z(3) - 7/8*z(4)*ln2"},
    {"l(4)/n alt", "91/32*z(5) - 3/4*z(2)*z(3) - z(4)*ln2"},
    {"l(1)/n^5", "-49/64*z(6) + 31/16*z(5)*ln2 + 9/32*z(3)^2"},
};

std::map<SumSpec, SymbolicValue> build_table() {
  std::map<SumSpec, SymbolicValue> table;
  for (const auto& [spec, value] : kClassical) table.emplace(parse_sumspec(spec), SymbolicValue::parse(value));
  constexpr int kDigits = 30;
  const PrecReal tol = ten_to(-kDigits, kDigits + 10);
  for (const auto& [spec, value] : table) {
    if (!agrees(eval_sum(spec, kDigits + 10), sv_numeric(value, kDigits + 10), tol))
      throw std::logic_error("classical closed form for " + spec.to_string() + " failed its numeric check");
  }
  return table;
}

SymbolicValue replacement(const Atom& atom) {
  if (atom.kind() != AtomKind::Linear) return SymbolicValue::of(atom);
  const SumSpec& spec = atom.spec();
  const auto& table = classical_linear_table();
  if (auto it = table.find(spec); it != table.end()) return it->second;
  const Factor& f = spec.factors().front();
  const int p = f.order;
  const int q = spec.power();
  if (f.kind == FactorKind::H && spec.alternating() && p >= 2 && p >= q) {
    return SymbolicValue::of(Atom::zeta(p)) * SymbolicValue::of(Atom::zeta_bar(q)) +
           SymbolicValue::of(Atom::zeta_bar(p + q)) -
           SymbolicValue::of(Atom::linear(SumSpec::linear(FactorKind::L, q, p, false)));
  }
  return SymbolicValue::of(atom);
}

SymbolicValue substitute(const SymbolicValue& v) {
  SymbolicValue out;
  for (const auto& [m, c] : v.terms()) {
    SymbolicValue term = SymbolicValue::constant(c);
    for (const auto& [a, e] : m.factors()) {
      SymbolicValue r = replacement(a);
      for (int i = 0; i < e; ++i) term = term * r;
    }
    out += term;
  }
  return out;
}

}  // namespace

const std::map<SumSpec, SymbolicValue>& classical_linear_table() {
  static const std::map<SumSpec, SymbolicValue> table = build_table();
  return table;
}

SymbolicValue canonicalize(const SymbolicValue& v) {
  SymbolicValue current = v;
  for (int pass = 0; pass < 4; ++pass) {
    SymbolicValue next = substitute(current);
    if (next == current) break;
    current = std::move(next);
  }
  return fold_even_zeta(normalize(current));
}

}  // namespace eulersum
