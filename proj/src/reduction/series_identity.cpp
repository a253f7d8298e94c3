#include "eulersum/series_identity.hpp"

#include "eulersum/errors.hpp"
#include "eulersum/reduction.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

Argument operator*(const Argument& a, const Argument& b) {
  Argument r{a.scale * b.scale, {}};
  for (std::size_t i = 0; i < r.powers.size(); ++i) r.powers[i] = a.powers[i] + b.powers[i];
  return r;
}

Rational Argument::at(const std::vector<Rational>& vars) const {
  Rational v = scale;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] == 0) continue;
    if (i >= vars.size()) throw ParameterError("series identity needs " + std::to_string(i + 1) + " arguments");
    v *= vars[i].pow(powers[i]);
  }
  return v;
}

std::string Argument::to_string(const std::vector<std::string>& names) const {
  std::string vars;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (int k = 0; k < powers[i]; ++k) vars += i < names.size() ? names[i] : "?";
  }
  if (vars.empty()) return scale.to_string();
  if (scale == Rational(1)) return vars;
  if (scale == Rational(-1)) return "-" + vars;
  return scale.to_string() + "*" + vars;
}

namespace {

Rational checked(const Argument& arg, const std::vector<Rational>& vars) {
  Rational v = arg.at(vars);
  if (v.abs() > Rational(1)) throw DomainError("argument " + v.to_string() + " outside [-1,1]");
  return v;
}

PrecReal factor_value(const FormalFactor& factor, const std::vector<Rational>& vars, int digits) {
  if (const auto* f = std::get_if<PolylogFactor>(&factor)) return eval_polylog(f->order, checked(f->arg, vars), digits);
  if (const auto* f = std::get_if<LogFactor>(&factor)) {
    Rational x = checked(f->arg, vars);
    if (x == Rational(1)) throw DivergentSeries("ln(1 - x) at x = 1");
    return log_one_minus(x, digits);
  }
  if (const auto* f = std::get_if<IntegralFactor>(&factor)) {
    Rational x = checked(f->arg, vars);
    return f->alternating_first ? eval_R(f->p, f->q, x, digits) : eval_I(f->p, f->q, x, digits);
  }
  const auto& s = std::get<SeriesFactor>(factor);
  GeneralSeries series;
  series.power = s.power;
  series.outer = checked(s.outer, vars);
  bool vanishes = series.outer.is_zero();
  for (const auto& p : s.partials) {
    Rational a = checked(p.arg, vars);
    vanishes = vanishes || a.is_zero();
    series.factors.push_back({p.order, a, p.exponent});
  }
  if (!converges(series)) throw DivergentSeries("constituent series diverges at the given arguments");
  if (vanishes) return PrecReal(digits);
  return eval_series(series, digits).value;
}

std::string factor_string(const FormalFactor& factor, const std::vector<std::string>& names) {
  if (const auto* f = std::get_if<PolylogFactor>(&factor))
    return "Li_" + std::to_string(f->order) + "(" + f->arg.to_string(names) + ")";
  if (const auto* f = std::get_if<LogFactor>(&factor)) return "ln(1 - " + f->arg.to_string(names) + ")";
  if (const auto* f = std::get_if<IntegralFactor>(&factor))
    return std::string(f->alternating_first ? "R_" : "I_") + std::to_string(f->p) + "," + std::to_string(f->q) + "(" +
           f->arg.to_string(names) + ")";
  const auto& s = std::get<SeriesFactor>(factor);
  std::string out = "sum[";
  for (std::size_t i = 0; i < s.partials.size(); ++i) {
    const auto& p = s.partials[i];
    if (i > 0) out += "*";
    out += "z_n(" + std::to_string(p.order) + "," + p.arg.to_string(names) + ")";
    if (p.exponent != 1) out += "^" + std::to_string(p.exponent);
  }
  if (s.partials.empty()) out += "1";
  out += "/n^" + std::to_string(s.power) + " * (" + s.outer.to_string(names) + ")^n]";
  return out;
}

}  // namespace

PrecReal evaluate_side(const std::vector<FormalTerm>& side, const std::vector<Rational>& vars, int digits) {
  const int wd = digits + 5;
  PrecReal sum(wd);
  for (const auto& term : side) {
    PrecReal t(term.coeff, wd);
    for (const auto& f : term.factors) t *= factor_value(f, vars, wd);
    sum += t;
  }
  return sum.with_digits(digits);
}

std::string side_to_string(const std::vector<FormalTerm>& side, const std::vector<std::string>& names) {
  if (side.empty()) return "0";
  std::string out;
  for (const auto& term : side) {
    if (!out.empty()) out += " + ";
    out += term.coeff.to_string();
    for (const auto& f : term.factors) out += "*" + factor_string(f, names);
  }
  return out;
}

SeriesIdentity product_expand(int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("product_expand needs s, t >= 1");
  const Argument x = Argument::variable(0);
  const Argument one = Argument::constant(Rational(1));
  SeriesIdentity id;
  id.name = "product";
  id.variables = {"x"};
  id.domain = "x in [-1,1), and x = 1 when s + t > 2";
  id.parameters = {{"s", s}, {"t", t}};
  id.lhs.push_back({Rational(1), {PolylogFactor{s, x}, PolylogFactor{t, x}}});
  const PartialFractions pf = pf_coeffs(s, t);
  Rational total(0);
  auto add_block = [&](const std::vector<Rational>& coeffs) {
    for (std::size_t j = 1; j <= coeffs.size(); ++j) {
      const int order = static_cast<int>(j);
      id.rhs.push_back({coeffs[j - 1], {SeriesFactor{{{order, one, 1}}, s + t - order, x}}});
      total += coeffs[j - 1];
    }
  };
  add_block(pf.a);
  add_block(pf.b);
  id.rhs.push_back({-total, {PolylogFactor{s + t, x}}});
  return id;
}

}  // namespace eulersum
