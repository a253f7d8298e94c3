#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/verify.hpp"

namespace {

using eulersum::PrecReal;
using nlohmann::json;

enum class Format { Text, Json };

enum ExitCode : int { kOk = 0, kUsage = 1, kUncovered = 2, kVerifyFailed = 3 };

struct Request {
  std::string spec;
  std::string id;
  std::string at;
  int digits = 30;
  Format format = Format::Text;
  long max_terms = 0;
};

void emit(json j) {
  j["v"] = 1;
  std::cout << j.dump() << "\n";
}

std::vector<eulersum::Rational> parse_args(const std::string& text) {
  std::vector<eulersum::Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(eulersum::Rational::parse(item));
  return out;
}

int run_eval(const Request& req) {
  const auto spec = eulersum::parse_sumspec(req.spec);
  const auto result = eulersum::eval_sum_detailed(spec, req.digits);
  const std::string value = result.value.to_string(req.digits);
  if (req.format == Format::Json) {
    emit({{"command", "eval"},
          {"spec", spec.to_string()},
          {"digits", req.digits},
          {"value", value},
          {"error_bound", result.error.to_string(3)},
          {"terms", result.terms}});
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

int run_reduce(const Request& req) {
  const auto spec = eulersum::parse_sumspec(req.spec);
  const auto reduced = eulersum::reduce_quadratic(spec);
  const PrecReal direct = eulersum::eval_sum(spec, req.digits + 5);
  const PrecReal delta = abs(eulersum::sv_numeric(reduced, req.digits + 5) - direct);
  if (req.format == Format::Json) {
    emit({{"command", "reduce"},
          {"spec", spec.to_string()},
          {"digits", req.digits},
          {"value", reduced.to_json()},
          {"text", reduced.to_string()},
          {"delta", delta.to_string(3)}});
  } else {
    std::cout << reduced.to_string() << "\n";
    std::cout << "check: |reduced - direct| = " << delta.to_string(3) << " at " << req.digits << " digits\n";
  }
  return kOk;
}

int run_verify(const Request& req) {
  const auto instance = eulersum::find_identity(req.id);
  eulersum::VerificationReport report;
  if (const auto* id = std::get_if<eulersum::Identity>(&instance)) {
    if (!req.at.empty()) throw eulersum::ParameterError(req.id + " takes no --at arguments");
    report = eulersum::verify(*id, req.digits);
  } else {
    const auto& series = std::get<eulersum::SeriesIdentity>(instance);
    if (req.at.empty()) throw eulersum::ParameterError(series.name + " needs --at with its " + series.domain);
    report = eulersum::verify(series, parse_args(req.at), req.digits);
  }
  if (req.format == Format::Json) {
    emit(report.to_json());
  } else {
    std::cout << report.to_line() << "\n";
  }
  return report.as_expected() ? kOk : kVerifyFailed;
}

int run_constants(const Request& req) {
  json rows = json::array();
  for (const auto& c : eulersum::printed_constants()) {
    const std::string value = c.compute(req.digits).to_string(req.digits);
    if (req.format == Format::Json) {
      rows.push_back({{"label", c.label}, {"value", value}, {"printed", c.printed}});
    } else {
      std::cout << c.label << std::string(c.label.size() < 16 ? 16 - c.label.size() : 1, ' ') << value << "\n";
    }
  }
  if (req.format == Format::Json) emit({{"command", "constants"}, {"digits", req.digits}, {"constants", rows}});
  return kOk;
}

int run_suite(const Request& req) {
  const auto reports = eulersum::run_suite(req.digits);
  std::size_t good = 0;
  for (const auto& r : reports) {
    good += r.as_expected() ? 1 : 0;
    if (req.format == Format::Json) {
      emit(r.to_json());
    } else {
      std::cout << r.to_line() << "\n";
    }
  }
  if (req.format == Format::Text) std::cout << good << "/" << reports.size() << " entries as expected\n";
  return good == reports.size() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Request req;
  CLI::App app{"Euler sum evaluation, reduction and verification"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--digits", req.digits, "significant digits")->check(CLI::Range(5, 100000));
    cmd->add_option("--format", req.format, "text or json")->transform(CLI::CheckedTransformer(formats));
    cmd->add_option("--max-terms", req.max_terms, "term budget (overrides EULERSUM_MAX_TERMS)")
        ->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "evaluate a sum");
  eval->add_option("spec", req.spec, "sum, e.g. \"h(2)*h(3)/n alt\"")->required();
  auto* reduce = app.add_subcommand("reduce", "reduce a sum to constants");
  reduce->add_option("spec", req.spec, "sum")->required();
  auto* verify = app.add_subcommand("verify", "verify one identity");
  verify->add_option("--id", req.id, "identity tag, e.g. l1-zeta-pair-6 or symmetric-zeta(p=2,m=1)")->required();
  verify->add_option("--at", req.at, "comma-separated rational arguments for series identities");
  auto* constants = app.add_subcommand("constants", "the printed constant table");
  auto* suite = app.add_subcommand("suite", "full regression report");
  for (auto* cmd : {eval, reduce, verify, constants, suite}) common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (req.max_terms > 0) setenv("EULERSUM_MAX_TERMS", std::to_string(req.max_terms).c_str(), 1);

  try {
    if (eval->parsed()) return run_eval(req);
    if (reduce->parsed()) return run_reduce(req);
    if (verify->parsed()) return run_verify(req);
    if (constants->parsed()) return run_constants(req);
    return run_suite(req);
  } catch (const eulersum::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const eulersum::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const eulersum::DivergentSeries& e) {
    std::cerr << "divergent: " << e.what() << "\n";
    return kUncovered;
  } catch (const eulersum::UncoveredSpec& e) {
    std::cerr << "uncovered: " << e.what() << "\n";
    return kUncovered;
  } catch (const eulersum::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUncovered;
  } catch (const eulersum::BudgetExceeded& e) {
    std::cerr << "term budget exceeded: " << e.what() << "\n";
    return kUncovered;
  } catch (const eulersum::AccelerationFailure& e) {
    std::cerr << "no certified value: " << e.what() << "\n";
    return kUncovered;
  }
}
