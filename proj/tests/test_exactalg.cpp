#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hsg/divdiff.hpp"
#include "hsg/ratfun.hpp"
#include "hsg/series.hpp"
#include "support.hpp"

using namespace hsg;
using testsupport::vec;

namespace {

RingPtr ua_ring() { return make_ring({{"u", 1, VarKind::U}, {"b1", 1, VarKind::B}}); }

MultiPoly random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms, int max_exp) {
  MultiPoly p(ring);
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    Mono m = MultiPoly::zero_mono();
    for (std::size_t i = 0; i < ring->size(); ++i) m[i] = std::uint8_t(ex(rng));
    p.add_term(m, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(to_string(BigRational(7, 3)) == "7/3");
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(to_integer(BigRational(1, 2)), MathError);
}

TEST_CASE("polynomial parse and print round trip") {
  RingPtr r = a_ring(3);
  MultiPoly p = MultiPoly::parse(r, "2*a1^3 - 6*a1*a2 + 6*a3");
  CHECK(p.to_string() == "2*a1^3 - 6*a1*a2 + 6*a3");
  CHECK(MultiPoly::parse(r, p.to_string()) == p);
  CHECK(MultiPoly::from_json(r, p.to_json()) == p);
  CHECK_THROWS_AS(MultiPoly::parse(r, "a4"), UsageError);
}

TEST_CASE("exact division") {
  RingPtr r = x_ring(2);
  MultiPoly x1 = MultiPoly::variable(r, 0), x2 = MultiPoly::variable(r, 1);
  CHECK(exact_divide(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
  CHECK(exact_divide(x1 - x2, x1 - x2) == MultiPoly::constant(r, 1));
  CHECK_THROWS_WITH_AS(exact_divide(x1 * x1 + x2, x1 - x2), doctest::Contains("pole not cancelled"), MathError);
}

TEST_CASE("the two-point sum on CP1 divides to 2 a1 t") {
  // (1 + a1 t w)/w summed over w = +-(x1 - x2), put over the common denominator x1 - x2.
  RingPtr r = genus_ring(2, 1, true);
  MultiPoly w = MultiPoly::variable(r, 0) - MultiPoly::variable(r, 1);
  MultiPoly a1t = MultiPoly::variable(r, 2) * MultiPoly::variable(r, 3);
  MultiPoly one = MultiPoly::constant(r, 1);
  MultiPoly num = (one + a1t * w) - (one - a1t * w);
  CHECK(exact_divide(num, w) == a1t * BigRational(2));
  CHECK(divide_linear(num, w) == a1t * BigRational(2));
}

TEST_CASE("series inversion") {
  RingPtr r = genus_ring(1, 1, false);
  MultiPoly x = MultiPoly::variable(r, 0), a1 = MultiPoly::variable(r, 1), one = MultiPoly::constant(r, 1);
  CHECK(series_invert(TruncatedSeries(one + a1 * x, 2)).body() == one - a1 * x + a1 * a1 * x * x);
  CHECK(series_invert(TruncatedSeries(one, 5)).body() == one);
  CHECK(series_invert(TruncatedSeries(one + x + x * x, 3)).body() == one - x + x.pow(3));
  CHECK_THROWS_WITH(series_invert(TruncatedSeries(x, 3)), doctest::Contains("zero constant term"));
}

TEST_CASE("series reversion") {
  RingPtr r = ua_ring();
  MultiPoly u = MultiPoly::variable(r, 0), b1 = MultiPoly::variable(r, 1);
  CHECK(series_reversion(TruncatedSeries(u, 4), 0).body() == u);
  MultiPoly expect = u - b1 * u * u + b1 * b1 * u.pow(3) * BigRational(2);
  CHECK(series_reversion(TruncatedSeries(u + b1 * u * u, 3), 0).body() == expect);
  CHECK_THROWS_AS(series_reversion(TruncatedSeries(u * BigRational(2), 3), 0), UsageError);
}

TEST_CASE("reversion agrees with Lagrange inversion") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> c(-4, 4);
  RingPtr r = x_ring(1, "u", VarKind::U);
  for (int trial = 0; trial < 20; ++trial) {
    const int cutoff = 7;
    oracle::Series g(cutoff + 1, 0);
    g[1] = 1;
    MultiPoly body = MultiPoly::variable(r, 0);
    for (int k = 2; k <= cutoff; ++k) {
      g[k] = oracle::frac(c(rng), 1 + (trial % 3));
      body += MultiPoly::variable(r, 0, k) * g[k];
    }
    TruncatedSeries inv = series_reversion(TruncatedSeries(body, cutoff), 0);
    oracle::Series expect = oracle::reversion(g, cutoff);
    for (int k = 1; k <= cutoff; ++k) {
      Mono m = MultiPoly::zero_mono();
      m[0] = std::uint8_t(k);
      CHECK(inv.body().coeff(m) == expect[k]);
    }
  }
}

TEST_CASE("divided difference operator") {
  RingPtr r3 = x_ring(3), r2 = x_ring(2);
  auto x = [](const RingPtr& r, std::size_t i, int e = 1) { return MultiPoly::variable(r, i, e); };
  CHECK(divided_difference_L(x(r3, 0, 2) * x(r3, 1), 0, 3) == MultiPoly::constant(r3, 1));
  CHECK(divided_difference_L(x(r2, 0, 2), 0, 2) == x(r2, 0) + x(r2, 1));
  CHECK(divided_difference_L(x(r3, 0, 2) * x(r3, 1, 2), 0, 3).is_zero());
}

TEST_CASE("evaluation") {
  RingPtr r2 = x_ring(2), r3 = x_ring(3);
  CHECK((MultiPoly::variable(r2, 0) - MultiPoly::variable(r2, 1)).evaluate(vec({3, 2})) == 1);
  CHECK(vandermonde(r3, 0, 3).evaluate(vec({3, 2, 1})) == 2);
  MultiPoly d = MultiPoly::variable(r2, 0) - MultiPoly::variable(r2, 1);
  CHECK_THROWS_WITH_AS(evaluate_quotient(MultiPoly::constant(r2, 1), {d}, vec({2, 2})),
                       doctest::Contains("x1 - x2"), MathError);
}

TEST_CASE("rational functions") {
  RationalFunction f = RationalFunction::parse("u/(1+u^2)");
  CHECK(f.is_normalized());
  CHECK(f.is_odd());
  CHECK(f.evaluate(2) == BigRational(2, 5));
  auto t = f.taylor(5);
  CHECK(t == std::vector<BigRational>{0, 1, 0, -1, 0, 1});
  CHECK_FALSE(RationalFunction::parse("2*u").is_normalized());
  CHECK_THROWS(RationalFunction::parse("u/(u-u)"));
}

TEST_CASE("property: division recovers the quotient") {
  std::mt19937_64 rng(7);
  RingPtr r = x_ring(3);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly a = random_poly(r, rng, 5, 3);
    MultiPoly b = random_poly(r, rng, 3, 2);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("property: a series times its inverse is one") {
  std::mt19937_64 rng(8);
  RingPtr r = genus_ring(2, 2, false);
  for (int trial = 0; trial < 20; ++trial) {
    // Constant term nonzero, everything else of positive degree in x.
    MultiPoly p = random_poly(r, rng, 6, 2) * MultiPoly::variable(r, 0) + MultiPoly::constant(r, 1 + trial);
    TruncatedSeries s(p, 4);
    CHECK((s * series_invert(s)).body() == MultiPoly::constant(r, 1));
  }
}

TEST_CASE("property: L is linear over symmetric polynomials") {
  std::mt19937_64 rng(9);
  RingPtr r = x_ring(3);
  MultiPoly e1 = MultiPoly::variable(r, 0) + MultiPoly::variable(r, 1) + MultiPoly::variable(r, 2);
  MultiPoly e3 = MultiPoly::variable(r, 0) * MultiPoly::variable(r, 1) * MultiPoly::variable(r, 2);
  for (int trial = 0; trial < 15; ++trial) {
    MultiPoly p = random_poly(r, rng, 4, 3);
    MultiPoly sym = e1 * BigRational(trial + 1) + e3;
    CHECK(divided_difference_L(sym * p, 0, 3) == sym * divided_difference_L(p, 0, 3));
    // L(p) equals antisymmetrize(p) / vandermonde.
    CHECK(divided_difference_L(p, 0, 3) * vandermonde(r, 0, 3) == antisymmetrize(p, 0, 3));
  }
}
