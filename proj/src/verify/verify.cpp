#include <cctype>
#include <iomanip>
#include <sstream>

#include "eulersum/errors.hpp"
#include "eulersum/verify.hpp"

namespace eulersum {

namespace {

using Clock = std::chrono::steady_clock;

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "fail";
}

VerificationReport inconclusive(std::string provenance, int digits, const std::string& why,
                                std::chrono::duration<double> elapsed) {
  VerificationReport r;
  r.provenance = std::move(provenance);
  r.lhs_value = PrecReal(digits);
  r.rhs_value = PrecReal(digits);
  r.abs_diff = PrecReal(digits);
  r.digits_requested = digits;
  r.outcome = Outcome::Inconclusive;
  r.note = why;
  r.elapsed = elapsed;
  return r;
}

}  // namespace

VerificationReport make_report(std::string provenance, const PrecReal& lhs, const PrecReal& rhs, int digits,
                               std::chrono::duration<double> elapsed) {
  VerificationReport r;
  r.provenance = std::move(provenance);
  r.abs_diff = abs(lhs - rhs);
  PrecReal scale = abs(lhs);
  if (scale < PrecReal(1, digits)) scale = PrecReal(1, digits);
  r.pass = r.abs_diff < ten_to(3 - digits, digits + 5) * scale;
  r.outcome = r.pass ? Outcome::Pass : Outcome::Fail;
  r.digits_agreed = digits_of_agreement(lhs, rhs, digits);
  r.lhs_value = lhs.with_digits(digits);
  r.rhs_value = rhs.with_digits(digits);
  r.digits_requested = digits;
  r.elapsed = elapsed;
  return r;
}

PrecReal evaluate_lhs(const Identity& id, int digits, const EvalOptions& opts) {
  PrecReal sum(digits);
  for (const auto& t : id.lhs) {
    PrecReal v(digits);
    if (const auto* spec = std::get_if<SumSpec>(&t.term)) {
      v = eval_sum(*spec, digits, opts);
    } else {
      const auto& in = std::get<IntegralTerm>(t.term);
      v = in.family == IntegralFamily::I ? eval_I(in.p, in.q, in.x, digits, opts) : eval_R(in.p, in.q, in.x, digits, opts);
    }
    sum += v * PrecReal(t.coeff, digits);
  }
  return sum;
}

VerificationReport verify(const Identity& id, int digits, const EvalOptions& opts) {
  const auto start = Clock::now();
  const int wd = digits + 5;
  try {
    PrecReal lhs = evaluate_lhs(id, wd, opts);
    PrecReal rhs = sv_numeric(id.rhs, wd);
    return make_report(id.provenance, lhs, rhs, digits, Clock::now() - start);
  } catch (const BudgetExceeded& e) {
    return inconclusive(id.provenance, digits, e.what(), Clock::now() - start);
  }
}

VerificationReport verify(const SeriesIdentity& id, const std::vector<Rational>& args, int digits) {
  if (args.size() != id.variables.size())
    throw ParameterError(id.name + " takes " + std::to_string(id.variables.size()) + " arguments");
  std::string tag = id.name + "(";
  for (std::size_t i = 0; i < id.parameters.size(); ++i)
    tag += (i ? "," : "") + id.parameters[i].first + "=" + std::to_string(id.parameters[i].second);
  tag += ")@";
  for (std::size_t i = 0; i < args.size(); ++i) tag += (i ? "," : "") + id.variables[i] + "=" + args[i].to_string();
  const auto start = Clock::now();
  const int wd = digits + 5;
  try {
    PrecReal lhs = evaluate_side(id.lhs, args, wd);
    PrecReal rhs = evaluate_side(id.rhs, args, wd);
    return make_report(tag, lhs, rhs, digits, Clock::now() - start);
  } catch (const BudgetExceeded& e) {
    return inconclusive(tag, digits, e.what(), Clock::now() - start);
  }
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j{{"provenance", provenance},
                   {"lhs", lhs_value.to_string()},
                   {"rhs", rhs_value.to_string()},
                   {"abs_diff", abs_diff.to_string(6)},
                   {"digits_requested", digits_requested},
                   {"digits_agreed", digits_agreed},
                   {"pass", pass},
                   {"outcome", outcome_name(outcome)},
                   {"negative_control", negative_control},
                   {"elapsed_ms", elapsed.count() * 1000.0}};
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string VerificationReport::to_line() const {
  std::ostringstream out;
  std::string mark = outcome == Outcome::Pass ? "PASS" : (outcome == Outcome::Fail ? "FAIL" : "INCONCLUSIVE");
  if (negative_control) mark += as_expected() ? " (expected)" : " (control not detected)";
  out << std::left << std::setw(24) << mark << std::setw(48) << provenance << " agreed " << digits_agreed << "/"
      << digits_requested << "  |diff| " << abs_diff.to_string(3) << "  " << std::fixed << std::setprecision(1)
      << elapsed.count() * 1000.0 << " ms";
  if (!note.empty()) out << "  (" << note << ")";
  return out.str();
}

int PrintedConstant::printed_decimals() const {
  auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

PrecReal PrintedConstant::compute(int digits) const {
  return spec ? eval_sum(*spec, digits) : eval_polylog(4, Rational(1, 2), digits);
}

const std::vector<PrintedConstant>& printed_constants() {
  static const std::vector<PrintedConstant> table = {
      {"Li_4(1/2)", std::nullopt, "0.5174790616738993863307581618988629456"},
      {"l(1)/n^5 alt", parse_sumspec("l(1)/n^5 alt"), "0.987441426403299713771650007985"},
      {"l(2)/n^4", parse_sumspec("l(2)/n^4"), "1.06358224101814909880154833539"},
      {"h(2)/n^4 alt", parse_sumspec("h(2)/n^4 alt"), "0.934707899349253255197542851216"},
      {"h(1)/n^5 alt", parse_sumspec("h(1)/n^5 alt"), "0.959151942504318157165421137321"},
      {"l(1)/n^5", parse_sumspec("l(1)/n^5"), "1.02005194570145237930331996837"},
      {"l(1)*h(2)/n^3", parse_sumspec("l(1)*h(2)/n^3"), "1.15935334356951415975457027807"},
      {"l(1)*h(3)/n^2", parse_sumspec("l(1)*h(3)/n^2"), "1.47723102170162037670053143416"},
  };
  return table;
}

FamilyInstance find_identity(const std::string& tag) {
  for (auto& id : regression_identities()) {
    if (id.provenance == tag) return id;
  }
  const auto open = tag.find('(');
  if (open == std::string::npos || tag.back() != ')') throw ParameterError("unknown identity '" + tag + "'");
  const std::string name = tag.substr(0, open);
  std::vector<int> params;
  std::stringstream inner(tag.substr(open + 1, tag.size() - open - 2));
  std::string item;
  while (std::getline(inner, item, ',')) {
    if (auto eq = item.find('='); eq != std::string::npos) item = item.substr(eq + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad identity parameter '" + item + "'", open + 1);
    }
    if (used != item.size()) throw ParseError("bad identity parameter '" + item + "'", open + 1);
    params.push_back(v);
  }
  return identity_family(name, params);
}

}  // namespace eulersum
