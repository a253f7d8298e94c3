#include "eulersum/verify.hpp"

namespace eulersum {

namespace {

using Clock = std::chrono::steady_clock;

// Table values are only trusted to two digits short of their printed length.
VerificationReport check_constant(const PrintedConstant& c, int digits) {
  const int d = std::min(digits, c.printed_decimals() - 2);
  const auto start = Clock::now();
  PrecReal ours = c.compute(d + 5);
  PrecReal printed = PrecReal::parse(c.printed, d + 5);
  return make_report("constant " + c.label, ours, printed, d, Clock::now() - start);
}

VerificationReport check_symbolic(std::string tag, const PrecReal& lhs, const SymbolicValue& rhs, int digits,
                                  Clock::time_point start) {
  return make_report(std::move(tag), lhs, sv_numeric(rhs, lhs.digits()), digits, Clock::now() - start);
}

}  // namespace

std::vector<VerificationReport> run_suite(int digits) {
  std::vector<VerificationReport> out;
  for (const auto& c : printed_constants()) out.push_back(check_constant(c, digits));

  const auto regression = regression_identities();
  for (const auto& id : regression) out.push_back(verify(id, digits));

  const int wd = digits + 5;
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto start = Clock::now();
    out.push_back(check_symbolic("integral-closed(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")",
                                 eval_I(p, q, Rational(1), wd), integral_I_closed(p, q), digits, start));
  }

  // Brute force carries about 15 digits.
  const int bd = std::min(digits, 12);
  for (int k = 2; k <= 8; ++k) {
    const auto start = Clock::now();
    out.push_back(check_symbolic("euler-linear(q=" + std::to_string(k) + ")", brute_force_linear(1, k, bd + 5),
                                 euler_linear(k), bd, start));
  }
  for (auto [p, q] : {std::pair{2, 3}, {3, 2}, {2, 5}, {4, 3}}) {
    const auto start = Clock::now();
    out.push_back(check_symbolic("odd-weight-linear(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")",
                                 brute_force_linear(p, q, bd + 5), fs_odd_linear(p, q), bd, start));
  }

  for (auto [s, t] : {std::pair{1, 2}, {2, 1}, {2, 2}}) out.push_back(verify(cubic_integral_relation(s, t), digits));

  for (const auto& id : regression) {
    if (id.provenance != "l1-zeta-pair-6") continue;
    Identity broken = id;
    broken.provenance = "l1-zeta-pair-6 with 3/5*z(3)^2";
    broken.rhs += SymbolicValue::parse("-3/20*z(3)^2");
    auto r = verify(broken, digits);
    r.negative_control = true;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace eulersum
