#include <map>
#include <mutex>
#include <stdexcept>

#include "eulersum/errors.hpp"
#include "eulersum/reduction.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

namespace {

SymbolicValue z(int k) { return SymbolicValue::of(Atom::zeta(k)); }

// zeta(k), with zeta(1) read as 0
SymbolicValue z_or_zero(int k) { return k == 1 ? SymbolicValue() : z(k); }

const std::map<SumSpec, SymbolicValue>& weight_four_table() {
  static const std::map<SumSpec, SymbolicValue> table = {
      {parse_sumspec("h(1)/n^3 alt"),
       SymbolicValue::parse("-2*lih(4) + 11/4*z(4) + 1/2*z(2)*ln2^2 - 1/12*ln2^4 - 7/4*z(3)*ln2")},
      {parse_sumspec("l(1)/n^3 alt"), SymbolicValue::parse("3/2*z(4) + 1/2*z(2)*ln2^2 - 1/12*ln2^4 - 2*lih(4)")},
      {parse_sumspec("l(2)/n^2"),
       SymbolicValue::parse("85/16*z(4) - 4*lih(4) + z(2)*ln2^2 - 1/6*ln2^4 - 7/2*z(3)*ln2")},
      {parse_sumspec("h(2)/n^2 alt"),
       SymbolicValue::parse("-51/16*z(4) + 4*lih(4) + 7/2*ln2*z(3) - z(2)*ln2^2 + 1/6*ln2^4")},
  };
  static std::once_flag checked;
  std::call_once(checked, [] {
    constexpr int kDigits = 25;
    const PrecReal tol = ten_to(-kDigits, kDigits + 10);
    for (const auto& [spec, value] : table) {
      if (!agrees(eval_sum(spec, kDigits + 10), sv_numeric(value, kDigits + 10), tol))
        throw std::logic_error("closed form for " + spec.to_string() + " failed its numeric check");
    }
  });
  return table;
}

}  // namespace

PartialFractions pf_coeffs(int s, int t) {
  if (s < 0 || t < 0 || s + t < 1) throw ParameterError("pf_coeffs needs s, t >= 0 and s + t >= 1");
  // C(-1, 0) = 1 covers the top coefficient when the other exponent is 0.
  auto choose = [](long n, long k) { return k == 0 ? Rational(1) : binomial_exact(n, k); };
  PartialFractions pf;
  for (int j = 1; j <= s; ++j) pf.a.push_back(choose(s + t - j - 1, s - j));
  for (int j = 1; j <= t; ++j) pf.b.push_back(choose(s + t - j - 1, t - j));
  return pf;
}

SymbolicValue euler_linear(int k) {
  if (k < 2) throw ParameterError("euler_linear needs k >= 2");
  SymbolicValue v = z(k + 1) * Rational(k + 2, 2);
  for (int i = 1; i <= k - 2; ++i) v -= (z(k - i) * z(i + 1)) * Rational(1, 2);
  return v;
}

SymbolicValue fs_odd_linear(int p, int q) {
  if (p < 1 || q < 2) throw ParameterError("fs_odd_linear needs p >= 1 and q >= 2");
  if ((p + q) % 2 == 0) throw ParameterError("fs_odd_linear needs odd weight p + q");
  const int m = p + q;
  const Rational sign(p % 2 == 0 ? 1 : -1);
  SymbolicValue v = z_or_zero(m) * (Rational(1, 2) - sign * Rational(1, 2) * binomial_exact(m - 1, p) -
                                    sign * Rational(1, 2) * binomial_exact(m - 1, q));
  for (int k = 1; k <= p / 2; ++k) v += (z(2 * k) * z_or_zero(m - 2 * k)) * (sign * binomial_exact(m - 2 * k - 1, q - 1));
  v += (z_or_zero(p) * z(q)) * ((Rational(1) - sign) / Rational(2));
  for (int k = 1; k <= q / 2; ++k) v += (z(2 * k) * z_or_zero(m - 2 * k)) * (sign * binomial_exact(m - 2 * k - 1, p - 1));
  return v;
}

std::optional<SymbolicValue> linear_lookup(const SumSpec& spec) {
  if (spec.degree() != 1 || !converges(spec)) return std::nullopt;
  const Factor& f = spec.factors().front();
  if (f.kind == FactorKind::H && !spec.alternating()) {
    if (f.order == 1) return euler_linear(spec.power());
    if ((f.order + spec.power()) % 2 == 1) return fs_odd_linear(f.order, spec.power());
  }
  const auto& table = weight_four_table();
  if (auto it = table.find(spec); it != table.end()) return it->second;
  return std::nullopt;
}

SymbolicValue linear_value(const SumSpec& spec) {
  if (!converges(spec)) throw DivergentSeries(spec.to_string() + " diverges");
  if (auto v = linear_lookup(spec)) return *v;
  return SymbolicValue::of(Atom::linear(spec));
}

}  // namespace eulersum
