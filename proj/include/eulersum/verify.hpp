#pragma once

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "eulersum/prec_real.hpp"
#include "eulersum/reduction.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

enum class Outcome { Pass, Fail, Inconclusive };

struct VerificationReport {
  std::string provenance;
  PrecReal lhs_value;
  PrecReal rhs_value;
  PrecReal abs_diff;
  int digits_requested = 0;
  int digits_agreed = 0;
  bool pass = false;
  Outcome outcome = Outcome::Fail;
  // Negative controls count as correct when they fail.
  bool negative_control = false;
  std::string note;
  std::chrono::duration<double> elapsed{};

  bool as_expected() const { return negative_control ? outcome == Outcome::Fail : outcome == Outcome::Pass; }
  nlohmann::json to_json() const;
  std::string to_line() const;
};

// pass = |lhs - rhs| < 10^(3 - digits) * max(1, |lhs|)
VerificationReport make_report(std::string provenance, const PrecReal& lhs, const PrecReal& rhs, int digits,
                               std::chrono::duration<double> elapsed);

PrecReal evaluate_lhs(const Identity& id, int digits, const EvalOptions& opts = {});

// A term budget overrun yields an inconclusive report; divergence throws.
VerificationReport verify(const Identity& id, int digits, const EvalOptions& opts = {});
VerificationReport verify(const SeriesIdentity& id, const std::vector<Rational>& args, int digits);

// sum zeta_n(order)/n^power by direct summation over n <= terms plus the
// integral of the asymptotic expansion beyond, built on MPFR's own zeta,
// log and Euler constant. Good to about 15 significant digits at 10^5 terms.
PrecReal brute_force_linear(int order, int power, int digits, long terms = 100000);

struct PrintedConstant {
  std::string label;
  std::optional<SumSpec> spec;  // empty for Li_4(1/2)
  std::string printed;
  int printed_decimals() const;
  PrecReal compute(int digits) const;
};
// The printed numeric table: Li_4(1/2) and seven weight-6 sums.
const std::vector<PrintedConstant>& printed_constants();

// Looks up a regression identity by tag, or instantiates a family written as
// "name(p=2,m=0)" or "name(2,0)".
FamilyInstance find_identity(const std::string& tag);

std::vector<VerificationReport> run_suite(int digits);

}  // namespace eulersum
