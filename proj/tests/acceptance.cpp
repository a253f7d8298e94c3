// Acceptance checks. Usage: acceptance [criterion...]; prints one line per criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/verify.hpp"

using namespace eulersum;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

// |a - b| < 10^(-digits) * max(1, |b|)
bool within(const PrecReal& a, const PrecReal& b, int digits) {
  PrecReal scale = abs(b);
  if (scale < PrecReal(1, b.digits())) scale = PrecReal(1, b.digits());
  return abs(a - b) < ten_to(-digits, digits + 10) * scale;
}

std::string sci(const PrecReal& x) { return x.to_string(3); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Printed table constants, every digit except the last two.
Result printed_constants_match() {
  constexpr int kRequested = 28;
  constexpr double kBudgetSeconds = 60.0;
  Result out;
  const auto start = std::chrono::steady_clock::now();
  int matched = 0;
  for (const auto& c : printed_constants()) {
    const int places = c.printed_decimals() - 2;
    const int digits = std::max(kRequested, places + 3);
    const PrecReal ours = c.compute(digits);
    const PrecReal printed = PrecReal::parse(c.printed, digits + 5);
    const PrecReal diff = abs(ours - printed);
    const bool ok = diff < ten_to(-places, digits + 5);
    matched += ok ? 1 : 0;
    out.require(ok, c.label + ": |ours - printed| = " + sci(diff) + " >= 1e-" + std::to_string(places) + "; ours " +
                        ours.to_string(places + 3) + ", printed " + c.printed);
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < kBudgetSeconds, "runtime " + std::to_string(elapsed) + " s");
  out.detail = std::to_string(matched) + "/" + std::to_string(printed_constants().size()) + " constants match, " +
               std::to_string(elapsed) + " s";
  return out;
}

Result printed_identities_hold() {
  constexpr int kDigits = 25;
  Result out;
  const PrecReal tol = ten_to(-22, kDigits + 10);
  int held = 0;
  const auto ids = regression_identities();
  for (const auto& id : ids) {
    const auto r = verify(id, kDigits);
    const bool ok = r.pass && r.abs_diff < tol;
    held += ok ? 1 : 0;
    out.require(ok, id.provenance + ": |diff| = " + sci(r.abs_diff));
  }
  out.detail = std::to_string(held) + "/" + std::to_string(ids.size()) + " identities, |diff| < 1e-22 at 25 digits";
  return out;
}

Result euler_formula_matches_brute_force() {
  constexpr int kDigits = 12;
  Result out;
  for (int k = 2; k <= 8; ++k) {
    const PrecReal closed = sv_numeric(euler_linear(k), 30);
    const PrecReal brute = brute_force_linear(1, k, 20);
    out.require(within(brute, closed, kDigits), "k=" + std::to_string(k) + ": |diff| = " + sci(abs(brute - closed)));
  }
  out.detail = "k = 2..8 to 12 digits";
  return out;
}

Result odd_weight_formula() {
  Result out;
  for (auto [p, q] : {std::pair{2, 3}, {3, 2}, {2, 5}, {4, 3}}) {
    const PrecReal closed = sv_numeric(fs_odd_linear(p, q), 30);
    const PrecReal brute = brute_force_linear(p, q, 20);
    out.require(within(brute, closed, 12),
                "(" + std::to_string(p) + "," + std::to_string(q) + "): |diff| = " + sci(abs(brute - closed)));
  }
  for (int q : {2, 4, 6}) {
    const PrecReal a = sv_numeric(fs_odd_linear(1, q), 35);
    const PrecReal b = sv_numeric(euler_linear(q), 35);
    out.require(within(a, b, 25), "p=1, q=" + std::to_string(q) + ": |diff| = " + sci(abs(a - b)));
  }
  out.detail = "4 pairs to 12 digits against brute force, p = 1 consistent to 25 digits";
  return out;
}

Result integral_closed_forms() {
  Result out;
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      const PrecReal series = eval_I(p, q, Rational(1), 30);
      const PrecReal closed = sv_numeric(integral_I_closed(p, q), 30);
      out.require(within(closed, series, 12),
                  "I(" + std::to_string(p) + "," + std::to_string(q) + "): |diff| = " + sci(abs(closed - series)));
      const PrecReal swapped = eval_I(q, p, Rational(1), 30);
      out.require(abs(series - swapped) < ten_to(-12, 30),
                  "symmetry (" + std::to_string(p) + "," + std::to_string(q) + "): " + sci(abs(series - swapped)));
    }
  }
  out.detail = "p, q <= 4 to 12 digits, symmetric to 1e-12";
  return out;
}

Result quadratic_driver() {
  Result out;
  Identity printed;
  for (auto& id : regression_identities()) {
    if (id.provenance == "zeta-quadratic-2-3") printed = id;
  }
  const SymbolicValue reduced = reduce_quadratic(parse_sumspec("h(2)*h(3)/n alt"));
  out.require(reduced == normalize(printed.rhs), "h(2)*h(3)/n alt: got " + reduced.to_string());
  for (const char* text : {"h(2)*h(5)/n alt", "h(3)*h(4)/n alt", "l(2)*l(5)/n alt", "l(3)*l(4)/n alt"}) {
    const SumSpec spec = parse_sumspec(text);
    const PrecReal value = sv_numeric(reduce_quadratic(spec), 25);
    const PrecReal direct = eval_sum(spec, 25);
    out.require(within(value, direct, 18), std::string(text) + ": |diff| = " + sci(abs(value - direct)));
  }
  out.detail = "printed instance term for term, four unprinted instances to 18 digits";
  return out;
}

std::vector<Identity> generated_identities() {
  std::vector<Identity> ids = regression_identities();
  for (int p = 2; p <= 5; ++p) {
    for (int m = 0; m <= 2; ++m) {
      for (auto* family : {harmonic_pair, alternating_harmonic_pair, harmonic_difference, alternating_double_pair,
                           symmetric_zeta, symmetric_alternating}) {
        ids.push_back(family(p, m));
      }
    }
  }
  for (int m = 0; m <= 2; ++m) ids.push_back(symmetric_alternating(1, m));
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) ids.push_back(cubic_integral_relation(s, t));
  }
  return ids;
}

std::string random_spec_text(std::mt19937& rng) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto space = [&]() { return pick(0, 3) == 0 ? std::string(" ") : std::string(); };
  std::string text;
  const int count = pick(0, 3);
  if (count == 0) text = "1";
  for (int i = 0; i < count; ++i) {
    if (i) text += space() + "*" + space();
    text += (pick(0, 1) ? "h" : "l") + space() + "(" + space() + std::to_string(pick(1, 7)) + space() + ")";
    if (pick(0, 2) == 0) text += space() + "^" + space() + std::to_string(pick(1, 4));
  }
  text += space() + "/" + space() + "n";
  const int power = pick(1, 8);
  if (power > 1 || pick(0, 1)) text += space() + "^" + space() + std::to_string(power);
  if (pick(0, 1)) text += " alt";
  return text;
}

Result structural_properties() {
  Result out;

  std::mt19937 rng(20260315);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  int points = 0;
  while (points < 20) {
    const Rational x(num(rng), den(rng));
    if (x.is_zero() || x == Rational(1)) continue;
    ++points;
    for (int s = 0; s <= 6; ++s) {
      for (int t = 0; t <= 6; ++t) {
        if (s + t < 1) continue;
        const auto pf = pf_coeffs(s, t);
        Rational sum;
        for (int j = 1; j <= s; ++j) sum += pf.a[static_cast<std::size_t>(j - 1)] * x.pow(-j);
        for (int j = 1; j <= t; ++j) sum += pf.b[static_cast<std::size_t>(j - 1)] * (Rational(1) - x).pow(-j);
        const Rational expect = x.pow(-s) * (Rational(1) - x).pow(-t);
        out.require(sum == expect, "partial fractions (" + std::to_string(s) + "," + std::to_string(t) + ") at " +
                                       x.to_string());
      }
    }
  }

  const auto ids = generated_identities();
  for (const auto& id : ids) out.require(weight_homogeneous(id), "weight: " + id.provenance);

  Identity control;
  for (auto& id : regression_identities()) {
    if (id.provenance == "l1-zeta-pair-6") control = id;
  }
  control.rhs += SymbolicValue::parse("-3/20*z(3)^2");
  const auto r = verify(control, 25);
  out.require(!r.pass && r.digits_agreed <= 2, "negative control passed with " + sci(r.abs_diff));

  int round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_spec_text(rng);
    try {
      const SumSpec spec = parse_sumspec(text);
      const std::string printed = spec.to_string();
      const bool ok = parse_sumspec(printed) == spec && parse_sumspec(printed).to_string() == printed;
      round_trips += ok ? 1 : 0;
      out.require(ok, "round trip: " + text);
    } catch (const ParseError& e) {
      out.require(false, "round trip: '" + text + "' " + e.what());
    }
  }

  out.detail = "partial fractions at 20 points, " + std::to_string(ids.size()) +
               " identities homogeneous, control detected, " + std::to_string(round_trips) + "/500 round trips";
  return out;
}

Result precision_stable() {
  constexpr int kDigits = 25;
  Result out;
  const auto base = run_suite(kDigits);
  const auto wide = run_suite(kDigits + 10);
  out.require(base.size() == wide.size(), "suite sizes differ");
  std::size_t stable = 0;
  for (std::size_t i = 0; i < std::min(base.size(), wide.size()); ++i) {
    const auto& a = base[i];
    const auto& b = wide[i];
    const int d = a.digits_requested;
    const bool ok = a.provenance == b.provenance && a.outcome == b.outcome && within(a.lhs_value, b.lhs_value, d) &&
                    within(a.rhs_value, b.rhs_value, d);
    stable += ok ? 1 : 0;
    out.require(ok, a.provenance + ": " + a.lhs_value.to_string() + " vs " + b.lhs_value.to_string(d + 2));
  }
  out.detail = std::to_string(stable) + "/" + std::to_string(base.size()) + " entries stable from 25 to 35 digits";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"printed constants", printed_constants_match},
      {"printed identities", printed_identities_hold},
      {"euler formula vs brute force", euler_formula_matches_brute_force},
      {"odd weight formula", odd_weight_formula},
      {"integral closed forms", integral_closed_forms},
      {"quadratic reduction driver", quadratic_driver},
      {"structural properties", structural_properties},
      {"precision stability", precision_stable},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }

  bool all = true;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    const auto& [name, run] = criteria[static_cast<std::size_t>(n - 1)];
    Result o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << ": " << o.detail << "\n";
    for (const auto& note : o.notes) std::cout << "    " << note << "\n";
  }
  return all ? 0 : 1;
}
