#include <map>

#include "eulersum/errors.hpp"
#include "eulersum/reduction.hpp"

namespace eulersum {

namespace {

SymbolicValue z(int k) { return SymbolicValue::of(Atom::zeta(k)); }
SymbolicValue zb(int k) { return SymbolicValue::of(Atom::zeta_bar(k)); }
SymbolicValue ln2() { return SymbolicValue::of(Atom::ln2()); }
Rational sign_of(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

SymbolicValue ls(FactorKind kind, int order, int power, bool alt) {
  return linear_value(SumSpec::linear(kind, order, power, alt));
}

SumSpec pair(FactorKind k1, int o1, FactorKind k2, int o2, int power, bool alt) {
  return SumSpec({{k1, o1, 1}, {k2, o2, 1}}, power, alt);
}

SymbolicValue I1(int p, int q) { return integral_I_closed(p, q); }
SymbolicValue Im1(int p, int q) { return integral_at_minus1(IntegralFamily::I, p, q); }
SymbolicValue Rm1(int p, int q) { return integral_at_minus1(IntegralFamily::R, p, q); }

// sum_n { sum_{j=2}^{jhi} zeta_n(j)/n^(wbase-j) + 2 H_n/n^hpow } (alt)
SymbolicValue inner_h(int jhi, int wbase, int hpow, bool alt) {
  SymbolicValue v;
  for (int j = 2; j <= jhi; ++j) v += ls(FactorKind::H, j, wbase - j, alt);
  v += ls(FactorKind::H, 1, hpow, alt) * Rational(2);
  return v;
}

// sum_n { L_n(1)/n^l1pow alt - sum_{j=1}^{jhi} L_n(j)/n^(wbase-j) }
SymbolicValue inner_l(int jhi, int wbase, int l1pow) {
  SymbolicValue v = ls(FactorKind::L, 1, l1pow, true);
  for (int j = 1; j <= jhi; ++j) v -= ls(FactorKind::L, j, wbase - j, false);
  return v;
}

std::string tag(const std::string& name, const std::vector<std::pair<std::string, int>>& params) {
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += params[i].first + "=" + std::to_string(params[i].second);
  }
  return out + ")";
}

Identity make_identity(const std::string& name, std::vector<std::pair<std::string, int>> params,
                       const std::vector<std::pair<SumSpec, Rational>>& lhs, const SymbolicValue& rhs) {
  std::map<SumSpec, Rational> merged;
  for (const auto& [spec, c] : lhs) merged[spec] += c;
  Identity id;
  id.provenance = tag(name, params);
  id.parameters = std::move(params);
  for (const auto& [spec, c] : merged) {
    if (!c.is_zero()) id.lhs.push_back({spec, c});
  }
  id.rhs = normalize(rhs);
  return id;
}

void require_pm(int p, int m, int min_p) {
  if (p < min_p || m < 0)
    throw ParameterError("needs p >= " + std::to_string(min_p) + " and m >= 0, got p=" + std::to_string(p) +
                         ", m=" + std::to_string(m));
}

}  // namespace

Identity harmonic_pair(int p, int m) {
  require_pm(p, m, 2);
  const int P = p + 2 * m;
  const Rational s = sign_of(p);
  SymbolicValue r = I1(p - 1, P + 2) * Rational(P + 2) + I1(p, P + 1) * Rational(2 * m + 1) - I1(p + 1, P) * Rational(p + 1);
  for (int i = 1; i <= P; ++i) r += z(P + 2 - i) * inner_h(p - 1, p + i, p - 1 + i, false) * sign_of(i - 1);
  for (int i = 1; i <= P - 1; ++i) r += z(P + 1 - i) * inner_h(p, p + i + 1, p + i, false) * sign_of(i - 1);
  for (int i = 1; i <= p - 2; ++i) r -= z(p - i) * inner_h(P + 1, P + i + 2, P + 1 + i, false) * sign_of(i - 1);
  for (int i = 1; i <= p - 1; ++i) r -= z(p + 1 - i) * inner_h(P, P + i + 1, P + i, false) * sign_of(i - 1);
  return make_identity("harmonic-pair", {{"p", p}, {"m", m}},
                       {{pair(FactorKind::H, 1, FactorKind::H, P + 1, p, false), s},
                        {pair(FactorKind::H, 1, FactorKind::H, p, P + 1, false), s}},
                       r);
}

Identity alternating_harmonic_pair(int p, int m) {
  require_pm(p, m, 2);
  const int P = p + 2 * m;
  const Rational s = sign_of(p);
  SymbolicValue r =
      Im1(p + 1, P) * Rational(p + 1) - Im1(p, P + 1) * Rational(2 * m + 1) - Im1(p - 1, P + 2) * Rational(P + 2);
  SymbolicValue both;
  for (bool alt : {true, false}) both += ls(FactorKind::H, P + 1, p, alt) + ls(FactorKind::H, p, P + 1, alt);
  r += ln2() * both * s;
  for (int i = 1; i <= p - 1; ++i) r += zb(p + 1 - i) * inner_h(P, P + 1 + i, P + i, true) * sign_of(i - 1);
  for (int i = 1; i <= p - 2; ++i) r += zb(p - i) * inner_h(P + 1, P + 2 + i, P + 1 + i, true) * sign_of(i - 1);
  for (int i = 1; i <= P - 1; ++i) r -= zb(P + 1 - i) * inner_h(p, p + 1 + i, p + i, true) * sign_of(i - 1);
  for (int i = 1; i <= P; ++i) r -= zb(P + 2 - i) * inner_h(p - 1, p + i, p + i - 1, true) * sign_of(i - 1);
  return make_identity("alternating-harmonic-pair", {{"p", p}, {"m", m}},
                       {{pair(FactorKind::H, P + 1, FactorKind::L, 1, p, false), s},
                        {pair(FactorKind::H, p, FactorKind::L, 1, P + 1, false), s}},
                       r);
}

Identity cubic_integral_relation(int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("cubic-integral needs s, t >= 1");
  std::vector<std::pair<SumSpec, Rational>> lhs;
  SymbolicValue first;
  SymbolicValue second;
  auto harmonic_times = [](int j, int power) { return pair(FactorKind::H, 1, FactorKind::H, j, power, false); };

  // Li_s^2 expanded, times Li_t / x
  const PartialFractions square = pf_coeffs(s, s);
  Rational square_total(0);
  for (int j = 1; j <= s; ++j) {
    const Rational a = square.a[j - 1] * Rational(2);
    square_total += square.a[j - 1];
    for (int i = 1; i <= t - 1; ++i) first += z(t + 1 - i) * ls(FactorKind::H, j, 2 * s + i - j, false) * (a * sign_of(i - 1));
    lhs.emplace_back(harmonic_times(j, 2 * s + t - j), a * sign_of(t - 1));
  }
  first -= I1(2 * s, t) * (square_total * Rational(2));

  // Li_s Li_t expanded, times Li_s / x
  const PartialFractions mixed = pf_coeffs(s, t);
  Rational mixed_total(0);
  auto mixed_block = [&](const std::vector<Rational>& coeffs) {
    for (int j = 1; j <= static_cast<int>(coeffs.size()); ++j) {
      mixed_total += coeffs[j - 1];
      lhs.emplace_back(harmonic_times(j, 2 * s + t - j), -coeffs[j - 1] * sign_of(s - 1));
      for (int i = 1; i <= s - 1; ++i)
        second += z(s + 1 - i) * ls(FactorKind::H, j, s + t + i - j, false) * (coeffs[j - 1] * sign_of(i - 1));
    }
  };
  mixed_block(mixed.a);
  mixed_block(mixed.b);
  second -= I1(s, s + t) * mixed_total;
  return make_identity("cubic-integral", {{"s", s}, {"t", t}}, lhs, second - first);
}

Identity harmonic_difference(int p, int m) {
  require_pm(p, m, 2);
  const int P = p + 2 * m;
  const Rational s = sign_of(p);
  SymbolicValue r;
  for (int i = 1; i <= P + 1; ++i) r += z(P + 3 - i) * inner_h(p - 1, p + i, p - 1 + i, false) * sign_of(i - 1);
  for (int i = 1; i <= P; ++i) r += z(P + 2 - i) * inner_h(p, p + i + 1, p + i, false) * sign_of(i - 1);
  for (int i = 1; i <= p - 2; ++i) r -= z(p - i) * inner_h(P + 2, P + i + 3, P + 2 + i, false) * sign_of(i - 1);
  for (int i = 1; i <= p - 1; ++i) r -= z(p + 1 - i) * inner_h(P + 1, P + i + 2, P + i + 1, false) * sign_of(i - 1);
  r += I1(p - 1, P + 3) * Rational(P + 3) + I1(p, P + 2) * Rational(2 * m + 2) - I1(p + 1, P + 1) * Rational(p + 1);
  return make_identity("harmonic-difference", {{"p", p}, {"m", m}},
                       {{pair(FactorKind::H, 1, FactorKind::H, P + 2, p, false), s},
                        {pair(FactorKind::H, 1, FactorKind::H, p, P + 2, false), -s}},
                       r);
}

Identity alternating_double_pair(int p, int m) {
  require_pm(p, m, 2);
  const int P = p + 2 * m;
  const Rational s = sign_of(p);
  SymbolicValue r = Im1(P + 2, p - 1) * Rational(P + 1) + Rm1(P + 2, p - 1) - Im1(p, P + 1) * Rational(p - 1) -
                    Rm1(p, P + 1) + Im1(P + 1, p) * Rational(P) + Rm1(P + 1, p) - Im1(p + 1, P) * Rational(p) -
                    Rm1(p + 1, P);
  SymbolicValue both;
  for (bool alt : {true, false}) both -= ls(FactorKind::L, P + 1, p, alt) + ls(FactorKind::L, p, P + 1, alt);
  r += ln2() * both * s;
  for (int i = 1; i <= p - 1; ++i) r += zb(p + 1 - i) * inner_l(P, P + 1 + i, P + i) * sign_of(i - 1);
  for (int i = 1; i <= p - 2; ++i) r += zb(p - i) * inner_l(P + 1, P + 2 + i, P + 1 + i) * sign_of(i - 1);
  for (int i = 1; i <= P; ++i) r -= zb(P + 2 - i) * inner_l(p - 1, p + i, p + i - 1) * sign_of(i - 1);
  for (int i = 1; i <= P - 1; ++i) r -= zb(P + 1 - i) * inner_l(p, p + 1 + i, p + i) * sign_of(i - 1);
  // The left side carries (-1)^n, so each alternating sum enters with -(-1)^p.
  return make_identity("alternating-double-pair", {{"p", p}, {"m", m}},
                       {{pair(FactorKind::L, 1, FactorKind::L, P + 1, p, true), -s},
                        {pair(FactorKind::L, 1, FactorKind::L, p, P + 1, true), -s}},
                       r);
}

Identity symmetric_zeta(int p, int m) {
  require_pm(p, m, 2);
  const int P = p + 2 * m;
  SymbolicValue r = ls(FactorKind::H, p, P + 2, true) + ls(FactorKind::L, 1, p + P + 1, false) +
                    ls(FactorKind::H, P + 1, p + 1, true) + ln2() * z(P + 1) * z(p) - zb(p + P + 2);
  return make_identity("symmetric-zeta", {{"p", p}, {"m", m}},
                       {{pair(FactorKind::H, P + 1, FactorKind::L, 1, p, false), Rational(1)},
                        {pair(FactorKind::H, p, FactorKind::L, 1, P + 1, false), Rational(1)},
                        {pair(FactorKind::H, p, FactorKind::H, P + 1, 1, true), Rational(1)}},
                       r);
}

Identity symmetric_alternating(int p, int m) {
  require_pm(p, m, 1);
  const int P = p + 2 * m;
  SymbolicValue r = ls(FactorKind::L, p, P + 2, false) + ls(FactorKind::L, 1, p + P + 1, false) +
                    ls(FactorKind::L, P + 1, p + 1, false) + ln2() * zb(P + 1) * zb(p) - zb(p + P + 2);
  return make_identity("symmetric-alternating", {{"p", p}, {"m", m}},
                       {{pair(FactorKind::L, 1, FactorKind::L, P + 1, p, true), Rational(1)},
                        {pair(FactorKind::L, 1, FactorKind::L, p, P + 1, true), Rational(1)},
                        {pair(FactorKind::L, p, FactorKind::L, P + 1, 1, true), Rational(1)}},
                       r);
}

SeriesIdentity harmonic_pair_generating(int p, int m) {
  require_pm(p, m, 2);
  const int P = p + 2 * m;
  const Rational s = sign_of(p);
  const Argument x = Argument::variable(0);
  const Argument one = Argument::constant(Rational(1));
  SeriesIdentity id;
  id.name = "harmonic-pair-generating";
  id.variables = {"x"};
  id.domain = "x in [-1,1)";
  id.parameters = {{"p", p}, {"m", m}};

  auto pair_series = [&](const Argument& outer, bool with_log_sum) {
    std::vector<SeriesFactor> out;
    for (auto [order, power] : {std::pair{P + 1, p}, std::pair{p, P + 1}}) {
      SeriesFactor f{{{order, one, 1}}, power, outer};
      if (with_log_sum) f.partials.push_back({1, x, 1});
      out.push_back(f);
    }
    return out;
  };
  for (const auto& f : pair_series(one, true)) id.lhs.push_back({s, {f}});

  auto integral = [&](int a, int b, const Rational& c) {
    id.rhs.push_back({c, {IntegralFactor{false, a, b, x}}});
  };
  integral(p - 1, P + 2, Rational(P + 2));
  integral(p, P + 1, Rational(2 * m + 1));
  integral(p + 1, P, Rational(-(p + 1)));
  for (const auto& f : pair_series(x, false)) id.rhs.push_back({s, {LogFactor{x}, f}});
  for (const auto& f : pair_series(one, false)) id.rhs.push_back({-s, {LogFactor{x}, f}});

  // Li_order(x) * sum_n { sum_{j=2}^{jhi} zeta_n(j)/n^(wbase-j) + 2 H_n/n^hpow } x^n
  auto li_inner = [&](int order, int jhi, int wbase, int hpow, const Rational& c) {
    for (int j = 2; j <= jhi; ++j)
      id.rhs.push_back({c, {PolylogFactor{order, x}, SeriesFactor{{{j, one, 1}}, wbase - j, x}}});
    id.rhs.push_back({c * Rational(2), {PolylogFactor{order, x}, SeriesFactor{{{1, one, 1}}, hpow, x}}});
  };
  for (int i = 1; i <= P; ++i) li_inner(P + 2 - i, p - 1, p + i, p + i - 1, sign_of(i - 1));
  for (int i = 1; i <= P - 1; ++i) li_inner(P + 1 - i, p, p + 1 + i, p + i, sign_of(i - 1));
  for (int i = 1; i <= p - 2; ++i) li_inner(p - i, P + 1, P + 2 + i, P + 1 + i, -sign_of(i - 1));
  for (int i = 1; i <= p - 1; ++i) li_inner(p + 1 - i, P, P + 1 + i, P + i, -sign_of(i - 1));
  return id;
}

SeriesIdentity symmetric_relation(int l1, int l2, int m) {
  if (l1 < 1 || l2 < 1 || m < 1) throw ParameterError("symmetric relation needs l1, l2, m >= 1");
  const Argument x = Argument::variable(0);
  const Argument y = Argument::variable(1);
  const Argument zv = Argument::variable(2);
  SeriesIdentity id;
  id.name = "symmetric";
  id.variables = {"x", "y", "z"};
  id.domain = "x, y, z in [-1,1] with every constituent series convergent";
  id.parameters = {{"l1", l1}, {"l2", l2}, {"m", m}};
  const Rational one(1);
  id.lhs.push_back({one, {SeriesFactor{{{l1, x, 1}, {l2, y, 1}}, m, zv}}});
  id.lhs.push_back({one, {SeriesFactor{{{l1, x, 1}, {m, zv, 1}}, l2, y}}});
  id.lhs.push_back({one, {SeriesFactor{{{l2, y, 1}, {m, zv, 1}}, l1, x}}});
  id.rhs.push_back({one, {SeriesFactor{{{m, zv, 1}}, l1 + l2, x * y}}});
  id.rhs.push_back({one, {SeriesFactor{{{l1, x, 1}}, m + l2, y * zv}}});
  id.rhs.push_back({one, {SeriesFactor{{{l2, y, 1}}, l1 + m, x * zv}}});
  id.rhs.push_back({one, {PolylogFactor{m, zv}, PolylogFactor{l1, x}, PolylogFactor{l2, y}}});
  id.rhs.push_back({-one, {PolylogFactor{l1 + l2 + m, x * y * zv}}});
  return id;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "harmonic-pair",  "alternating-harmonic-pair", "cubic-integral", "harmonic-difference",
      "alternating-double-pair", "symmetric-zeta", "symmetric-alternating", "product",
      "harmonic-pair-generating", "symmetric"};
  return names;
}

FamilyInstance identity_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw ParameterError(name + " takes " + std::to_string(n) + " parameters, got " + std::to_string(params.size()));
  };
  if (name == "symmetric") {
    need(3);
    return symmetric_relation(params[0], params[1], params[2]);
  }
  need(2);
  const int a = params[0];
  const int b = params[1];
  if (name == "harmonic-pair") return harmonic_pair(a, b);
  if (name == "alternating-harmonic-pair") return alternating_harmonic_pair(a, b);
  if (name == "cubic-integral") return cubic_integral_relation(a, b);
  if (name == "harmonic-difference") return harmonic_difference(a, b);
  if (name == "alternating-double-pair") return alternating_double_pair(a, b);
  if (name == "symmetric-zeta") return symmetric_zeta(a, b);
  if (name == "symmetric-alternating") return symmetric_alternating(a, b);
  if (name == "product") return product_expand(a, b);
  if (name == "harmonic-pair-generating") return harmonic_pair_generating(a, b);
  throw ParameterError("unknown identity family '" + name + "'");
}

}  // namespace eulersum
