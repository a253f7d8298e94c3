#include <doctest.h>

#include "eulersum/errors.hpp"
#include "eulersum/reduction.hpp"
#include "eulersum/series.hpp"
#include "eulersum/verify.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

SymbolicValue sv(const char* text) { return SymbolicValue::parse(text); }

bool holds(const Identity& id, int digits) { return verify(id, digits).outcome == Outcome::Pass; }

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("partial fraction coefficients") {
  auto pf = pf_coeffs(1, 1);
  CHECK(pf.a == std::vector<Rational>{1});
  CHECK(pf.b == std::vector<Rational>{1});
  pf = pf_coeffs(2, 3);
  CHECK(pf.a == std::vector<Rational>{3, 1});
  CHECK(pf.b == std::vector<Rational>{3, 2, 1});
}

TEST_CASE("euler linear sums") {
  CHECK(euler_linear(2) == sv("2*z(3)"));
  CHECK(euler_linear(3) == sv("5/2*z(4) - 1/2*z(2)^2"));
  CHECK_THROWS_AS(euler_linear(1), ParameterError);
  for (int k = 2; k <= 6; ++k) {
    CHECK(oracle::close(sv_numeric(euler_linear(k), 30), brute_force_linear(1, k, 14), 12));
  }
}

TEST_CASE("odd weight linear sums") {
  CHECK_THROWS_AS(fs_odd_linear(2, 2), ParameterError);
  for (int q : {2, 4, 6}) CHECK(oracle::close(sv_numeric(fs_odd_linear(1, q), 30), sv_numeric(euler_linear(q), 30), 25));
  // sum zeta_n(2)/n^3 = 3 zeta(2) zeta(3) - 9/2 zeta(5)
  CHECK(oracle::close(sv_numeric(fs_odd_linear(2, 3), 30),
                      oracle::zeta(2, 40) * oracle::zeta(3, 40) * 3 - oracle::zeta(5, 40) * 9 / 2, 28));
}

TEST_CASE("linear values") {
  CHECK(linear_value(parse_sumspec("h(1)/n^2")) == sv("2*z(3)"));
  CHECK(linear_value(parse_sumspec("h(3)/n^3")) == sv("LS{h(3)/n^3}"));
  CHECK_THROWS_AS(linear_value(parse_sumspec("h(1)/n")), DivergentSeries);
  const auto table = classical_linear_table();
  CHECK(table.size() >= 20);
  for (const auto& [spec, value] : table) CHECK(oracle::close(sv_numeric(value, 25), eval_sum(spec, 30), 23));
}

TEST_CASE("integral closed form") {
  CHECK(integral_I_closed(1, 1) == sv("2*z(3)"));
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(oracle::close(sv_numeric(integral_I_closed(p, q), 30), eval_I(p, q, Rational(1), 30), 25));
    }
  }
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      CHECK(oracle::close(sv_numeric(integral_at_minus1(IntegralFamily::I, p, q), 25), eval_I(p, q, Rational(-1), 30), 23));
      CHECK(oracle::close(sv_numeric(integral_at_minus1(IntegralFamily::R, p, q), 25), eval_R(p, q, 30), 23));
    }
  }
}

TEST_CASE("generated family identities hold at 20 digits") {
  for (int p = 2; p <= 4; ++p) {
    for (int m = 0; m <= 2; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      CHECK(holds(harmonic_pair(p, m), 20));
      CHECK(holds(alternating_harmonic_pair(p, m), 20));
      CHECK(holds(harmonic_difference(p, m), 20));
      CHECK(holds(alternating_double_pair(p, m), 20));
      CHECK(holds(symmetric_zeta(p, m), 20));
      CHECK(holds(symmetric_alternating(p, m), 20));
    }
  }
  CHECK(holds(symmetric_alternating(1, 0), 20));
  CHECK_THROWS_AS(symmetric_zeta(1, 0), ParameterError);
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; t <= 3; ++t) CHECK(holds(cubic_integral_relation(s, t), 20));
  }
}

TEST_CASE("series identities hold at sample points") {
  const std::vector<Rational> points{Rational(1, 2), Rational(-1), Rational(-1, 3)};
  for (const auto& x : points) {
    CHECK(verify(product_expand(1, 1), {x}, 20).pass);
    CHECK(verify(product_expand(2, 3), {x}, 20).pass);
    CHECK(verify(harmonic_pair_generating(2, 0), {x}, 20).pass);
    CHECK(verify(harmonic_pair_generating(3, 1), {x}, 20).pass);
  }
  CHECK(verify(symmetric_relation(1, 1, 2), {Rational(1, 2), Rational(1, 3), Rational(-1, 2)}, 20).pass);
  CHECK(verify(symmetric_relation(2, 3, 1), {Rational(-1, 2), Rational(2, 3), Rational(1, 4)}, 20).pass);
  CHECK_THROWS_AS(verify(symmetric_relation(1, 1, 2), {Rational(-1), Rational(1), Rational(1)}, 20), DivergentSeries);
  CHECK_THROWS_AS(verify(product_expand(1, 1), {Rational(2)}, 20), DomainError);
}

TEST_CASE("identity families by name") {
  for (const auto& name : family_names()) CHECK_FALSE(name.empty());
  CHECK(std::holds_alternative<Identity>(identity_family("symmetric-zeta", {2, 1})));
  CHECK(std::holds_alternative<SeriesIdentity>(identity_family("symmetric", {1, 1, 2})));
  CHECK_THROWS_AS(identity_family("symmetric-zeta", {2}), ParameterError);
  CHECK_THROWS_AS(identity_family("nothing", {2, 0}), ParameterError);
}

TEST_CASE("quadratic reduction") {
  const SymbolicValue expected = sv(
      "-161/64*z(6) + 31/16*z(5)*ln2 + 9/32*z(3)^2 + 3/8*z(2)*z(3)*ln2 + 2*z(2)*lih(4) - 5/4*z(4)*ln2^2 "
      "+ 1/12*z(2)*ln2^4 + LS{h(2)/n^4 alt} - LS{l(3)/n^3}");
  CHECK(reduce_quadratic(parse_sumspec("h(2)*h(3)/n alt")) == expected);
  for (const char* text : {"h(2)*h(5)/n alt", "h(3)*h(4)/n alt", "l(2)*l(3)/n alt", "l(2)*l(5)/n alt", "l(3)*l(4)/n alt"}) {
    CAPTURE(text);
    const SumSpec spec = parse_sumspec(text);
    const SymbolicValue reduced = reduce_quadratic(spec);
    CHECK(weight_of(reduced) == spec.weight());
    CHECK(oracle::close(sv_numeric(reduced, 30), eval_sum(spec, 30), 25));
  }
  CHECK(reduce_quadratic(parse_sumspec("h(1)/n^2")) == sv("2*z(3)"));
  CHECK_THROWS_AS(reduce_quadratic(parse_sumspec("h(2)*h(4)/n alt")), UncoveredSpec);
  CHECK_THROWS_AS(reduce_quadratic(parse_sumspec("h(2)*h(3)/n^2")), UncoveredSpec);
  CHECK_THROWS_AS(reduce_quadratic(parse_sumspec("h(1)*h(2)/n alt")), UncoveredSpec);
}

TEST_CASE("printed identities are weight homogeneous") {
  const auto ids = regression_identities();
  CHECK(ids.size() == 13);
  for (const auto& id : ids) {
    CAPTURE(id.provenance);
    CHECK(weight_homogeneous(id));
  }
  CHECK_FALSE(weight_homogeneous(Identity{"mixed", {{parse_sumspec("h(1)/n^2"), Rational(1)}}, sv("z(4)"), {}}));
}

TEST_CASE("identity json") {
  const auto j = symmetric_zeta(2, 0).to_json();
  CHECK(j["parameters"]["p"] == 2);
  CHECK(j["lhs"].is_array());
  CHECK(j["rhs"].contains("terms"));
}

}  // TEST_SUITE
