#include <doctest.h>

#include "eulersum/algebra.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/series.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

SymbolicValue sv(const char* text) { return SymbolicValue::parse(text); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("text form") {
  const SymbolicValue v = sv("7/4*z(6) + 3/4*z(3)^2");
  CHECK(v.to_string() == "3/4*z(3)^2 + 7/4*z(6)");
  CHECK(sv("z(3)*z(3)") == sv("z(3)^2"));
  CHECK(sv("1/2 - 1/2").is_zero());
  CHECK(sv("0").to_string() == "0");
  CHECK(sv("-2*lih(4) + LS{h(2)/n^4 alt}").to_string() == "-2*lih(4) + 1*LS{h(2)/n^4 alt}");
  CHECK(sv("3").to_string() == "3");
}

TEST_CASE("text and json round trips are exact") {
  const SymbolicValue v = sv("-161/64*z(6) + 31/16*z(5)*ln2 + 9/32*z(3)^2 + 2*z(2)*lih(4) - 5/4*z(4)*ln2^2 "
                             "+ 1/12*z(2)*ln2^4 + LS{h(2)/n^4 alt} - LS{l(3)/n^3} + zb(3)");
  CHECK(SymbolicValue::parse(v.to_string()) == v);
  CHECK(SymbolicValue::from_json(v.to_json()) == v);
  const auto j = sv("3/4*z(3)^2 + 7/4*z(6)").to_json();
  CHECK(j["weight"] == 6);
  CHECK(j["terms"][0]["coeff"] == "3/4");
  CHECK(j["terms"][0]["atoms"][0] == nlohmann::json::array({"z", 3, 2}));
}

TEST_CASE("malformed values") {
  CHECK_THROWS_AS(sv("3/4*"), ParseError);
  CHECK_THROWS_AS(sv("y(3)"), ParseError);
  CHECK_THROWS_AS(sv("LS{h(0)/n}"), ParseError);
  CHECK_THROWS_AS(SymbolicValue::from_json(nlohmann::json::parse(R"({"terms":[{"coeff":1}]})")), ParseError);
}

TEST_CASE("arithmetic") {
  CHECK(sv("z(2) + ln2") * sv("z(2) - ln2") == sv("z(2)^2 - ln2^2"));
  CHECK(sv("z(3)") * Rational(0) == SymbolicValue());
  CHECK(-sv("z(3) - 1") == sv("1 - z(3)"));
}

TEST_CASE("weight") {
  CHECK(weight_of(sv("z(2)*z(3) + ln2*lih(4)")) == 5);
  CHECK(weight_of(sv("LS{h(1)/n^3 alt} + z(4)")) == 4);
  CHECK_FALSE(weight_of(sv("z(2) + z(3)")).has_value());
  CHECK(weight_of(sv("1/2")) == 0);
}

TEST_CASE("normalization rewrites") {
  CHECK(normalize(sv("zb(1)")) == sv("ln2"));
  CHECK(normalize(sv("zb(4)")) == sv("7/8*z(4)"));
  CHECK(normalize(sv("lih(1)")) == sv("ln2"));
  CHECK(normalize(sv("lih(2)")) == sv("1/2*z(2) - 1/2*ln2^2"));
  CHECK(normalize(sv("lih(3)")) == sv("7/8*z(3) - 1/2*z(2)*ln2 + 1/6*ln2^3"));
  CHECK(normalize(sv("lih(4)")) == sv("lih(4)"));
  CHECK(normalize(sv("z(2)^2")) == sv("z(2)^2"));
}

TEST_CASE("even zeta products fold") {
  // zeta(2)^2 = 5/2 zeta(4), zeta(2) zeta(4) = 7/4 zeta(6), zeta(2)^3 = 35/8 zeta(6)
  CHECK(fold_even_zeta(sv("z(2)^2")) == sv("5/2*z(4)"));
  CHECK(fold_even_zeta(sv("z(2)*z(4)*ln2")) == sv("7/4*z(6)*ln2"));
  CHECK(fold_even_zeta(sv("z(2)^3")) == sv("35/8*z(6)"));
  CHECK(fold_even_zeta(sv("z(2)*z(3)")) == sv("z(2)*z(3)"));
  const PrecReal pi = oracle::pi(50);
  CHECK(oracle::close(sv_numeric(sv("z(2)^2"), 40), pow(pi, 4) / 36, 40));
}

TEST_CASE("numeric values of atoms") {
  const int d = 35;
  CHECK(oracle::close(sv_numeric(sv("ln2"), d), oracle::ln2(d + 10), d));
  CHECK(oracle::close(sv_numeric(sv("lih(2)"), d), oracle::dilog(Rational(1, 2), d + 10), d));
  CHECK(oracle::close(sv_numeric(sv("lih(5)"), d), oracle::li_half(5, d + 10), d));
  CHECK(oracle::close(sv_numeric(sv("zb(3)"), d), oracle::zeta(3, d + 10) * 3 / 4, d));
  CHECK(oracle::close(sv_numeric(sv("LS{h(1)/n^2}"), d), oracle::zeta(3, d + 10) * 2, d));
  CHECK(oracle::close(sv_numeric(sv("2*z(3) - 1/3*ln2^2"), d),
                      oracle::zeta(3, d + 10) * 2 - oracle::ln2(d + 10) * oracle::ln2(d + 10) / 3, d));
}

}  // TEST_SUITE
