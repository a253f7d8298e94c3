#include <doctest.h>

#include "eulersum/errors.hpp"
#include "eulersum/series.hpp"
#include "eulersum/sum_spec.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

// Direct sum of a convergent series with a geometric outer argument; no tail needed.
PrecReal geometric_oracle(int order, int power, const Rational& x, int digits) {
  PrecReal sum(digits + 10);
  PrecReal inner(digits + 10);
  PrecReal xn(1, digits + 10);
  const PrecReal ratio(x, digits + 10);
  const PrecReal eps = ten_to(-digits - 8, digits + 10);
  for (long n = 1;; ++n) {
    inner += inverse_power(n, order, digits + 10);
    xn *= ratio;
    PrecReal term = xn * inner * inverse_power(n, power, digits + 10);
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum;
}

}  // namespace

TEST_SUITE("summation") {

TEST_CASE("parsing follows the grammar") {
  const SumSpec a = parse_sumspec("h(2)*h(3)/n alt");
  REQUIRE(a.factors().size() == 2);
  CHECK(a.factors()[0].kind == FactorKind::H);
  CHECK(a.factors()[0].order == 2);
  CHECK(a.factors()[1].order == 3);
  CHECK(a.power() == 1);
  CHECK(a.alternating());
  CHECK(a.weight() == 6);
  CHECK(a.degree() == 2);

  const SumSpec b = parse_sumspec("h(1)^2/n^4");
  REQUIRE(b.factors().size() == 1);
  CHECK(b.factors()[0].exponent == 2);
  CHECK(b.power() == 4);
  CHECK_FALSE(b.alternating());

  CHECK(parse_sumspec(" l( 1 ) * h(2) / n ^ 3 ").to_string() == "h(2)*l(1)/n^3");
  CHECK(parse_sumspec("h(2)*h(2)/n^2") == parse_sumspec("h(2)^2/n^2"));
  CHECK(parse_sumspec("1/n^2").degree() == 0);
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_sumspec("x(2)/n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 0);
  }
  CHECK_THROWS_AS(parse_sumspec("h(0)/n"), ParseError);
  CHECK_THROWS_AS(parse_sumspec("h(2)^0/n"), ParseError);
  CHECK_THROWS_AS(parse_sumspec("h(2)/m"), ParseError);
  CHECK_THROWS_AS(parse_sumspec("h(2)/n^2 alternating"), ParseError);
  CHECK_THROWS_AS(parse_sumspec(""), ParseError);
}

TEST_CASE("exact partial sums") {
  CHECK(partial_sum(FactorKind::H, 1, 4) == Rational(25, 12));
  CHECK(partial_sum(FactorKind::L, 1, 4) == Rational(7, 12));
  CHECK(partial_sum(FactorKind::H, 2, 3) == Rational(49, 36));
  CHECK(partial_sum(2, 2, Rational(1, 2)) == Rational(1, 2) + Rational(1, 16));
  EvalOptions tight;
  tight.max_terms = 10;
  CHECK_THROWS_AS(partial_sum(FactorKind::H, 1, 11, tight), BudgetExceeded);
}

TEST_CASE("convergence test") {
  CHECK_FALSE(converges(parse_sumspec("h(1)/n")));
  CHECK_FALSE(converges(parse_sumspec("1/n")));
  CHECK(converges(parse_sumspec("1/n alt")));
  CHECK(converges(parse_sumspec("h(1)/n alt")));
  CHECK(converges(parse_sumspec("h(1)^3/n^2")));
  CHECK_THROWS_AS(eval_sum(parse_sumspec("h(1)/n"), 20), DivergentSeries);
}

TEST_CASE("zero-factor sums are zeta values") {
  CHECK(oracle::close(eval_sum(parse_sumspec("1/n^3"), 40), oracle::zeta(3, 50), 40));
  CHECK(oracle::close(eval_sum(parse_sumspec("1/n alt"), 40), oracle::ln2(50), 40));
}

TEST_CASE("linear sums against classical values") {
  const int d = 40;
  // sum H_n/n^2 = 2 zeta(3), sum zeta_n(2)/n^2 = 7/4 zeta(4)
  CHECK(oracle::close(eval_sum(parse_sumspec("h(1)/n^2"), d), oracle::zeta(3, d + 10) * 2, d));
  CHECK(oracle::close(eval_sum(parse_sumspec("h(2)/n^2"), d), oracle::zeta(4, d + 10) * 7 / 4, d));
  // sum (-1)^(n-1) H_n/n = zeta(2)/2 - ln^2(2)/2
  const PrecReal l2 = oracle::ln2(d + 10);
  CHECK(oracle::close(eval_sum(parse_sumspec("h(1)/n alt"), d), (oracle::zeta(2, d + 10) - l2 * l2) / 2, d));
  // sum H_n^2/n^2 = 17/4 zeta(4)
  CHECK(oracle::close(eval_sum(parse_sumspec("h(1)^2/n^2"), d), oracle::zeta(4, d + 10) * 17 / 4, d));
}

TEST_CASE("result carries the requested digits and an error estimate") {
  const SeriesValue v = eval_sum_detailed(parse_sumspec("l(2)/n^3 alt"), 30);
  CHECK(v.value.digits() == 30);
  CHECK(v.error < ten_to(-30, 30));
  CHECK(eval_sum(parse_sumspec("h(1)/n^2"), 25).to_string().size() == 26);
}

TEST_CASE("general series at interior arguments") {
  for (const Rational& x : {Rational(1, 2), Rational(-1, 3), Rational(2, 3)}) {
    GeneralSeries s;
    s.factors = {{1, Rational(1), 1}};
    s.power = 2;
    s.outer = x;
    CHECK(oracle::close(eval_series(s, 30).value, geometric_oracle(1, 2, x, 30), 30));
  }
}

TEST_CASE("polylog integrals") {
  const int d = 30;
  // I_{1,1}(1) = 2 zeta(3), I_{2,1}(1) = 5/4 zeta(4)
  CHECK(oracle::close(eval_I(1, 1, Rational(1), d), oracle::zeta(3, d + 10) * 2, d));
  CHECK(oracle::close(eval_I(2, 1, Rational(1), d), oracle::zeta(4, d + 10) * 5 / 4, d));
  // I_{2,2}(1) = 2 zeta(2) zeta(3) - 3 zeta(5)
  CHECK(oracle::close(eval_I(2, 2, Rational(1), d),
                      oracle::zeta(2, d + 10) * oracle::zeta(3, d + 10) * 2 - oracle::zeta(5, d + 10) * 3, d - 2));
  for (int p = 1; p <= 3; ++p) {
    for (int q = p + 1; q <= 4; ++q) CHECK(oracle::close(eval_I(p, q, Rational(1), d), eval_I(q, p, Rational(1), d), d - 3));
  }
  // I_{1,1}(1/2) = integral of ln^2(1 - t)/t from 0 to 1/2 = zeta(3)/4 - ln^3(2)/3
  const PrecReal l2 = oracle::ln2(d + 10);
  CHECK(oracle::close(eval_I(1, 1, Rational(1, 2), d), oracle::zeta(3, d + 10) / 4 - l2 * l2 * l2 / 3, d - 2));
}

}  // TEST_SUITE
