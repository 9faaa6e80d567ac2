#include <random>

#include "doctest.h"
#include "dyckhankel/errors.hpp"
#include "dyckhankel/quadeq.hpp"
#include "dyckhankel/ratfun.hpp"
#include "dyckhankel/series.hpp"
#include "oracles.hpp"

using namespace dyckhankel;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree, bool unit_constant = false) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-4, 4);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  if (unit_constant) c[0] = 1;
  return Poly(std::move(c));
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational arithmetic and rendering") {
    CHECK(Rational::parse("3/6").to_string() == "1/2");
    CHECK(Rational::parse("-4/2").to_string() == "-2");
    CHECK(Rational::parse("7").is_integer());
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)) == Rational::parse("1/2"));
    CHECK(Rational(2).pow(-3) == Rational::parse("1/8"));
    CHECK(Rational(-1).pow(5) == Rational(-1));
    CHECK(Rational::parse("-2/3") < Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/"), PreconditionError);
    CHECK_THROWS_AS(Rational::parse("x"), PreconditionError);
  }

  TEST_CASE("big integers do not overflow") {
    Rational f(1);
    for (long i = 1; i <= 30; ++i) f = f * Rational(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
  }

  TEST_CASE("polynomial basics") {
    const Poly p{1, 2, 0, 0};
    CHECK(p.degree() == 1);
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly{0, 0, 3}.valuation() == 2);
    CHECK(p[5] == Rational(0));
    CHECK((Poly{1, 1} * Poly{1, -1}) == Poly{1, 0, -1});
    CHECK(Poly::range_sum(2, 4) == Poly{0, 0, 1, 1, 1});
    CHECK(Poly::range_sum(3, 2).is_zero());
    CHECK(Poly{1, -1, 0, -2}.to_string() == "1 - x - 2*x^3");
    CHECK(Poly{1, 2, 1}.evaluate(Rational(3)) == Rational(16));
  }

  TEST_CASE("division identity against random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      const Poly a = random_poly(rng, 7);
      const Poly b = random_poly(rng, 4);
      if (b.is_zero()) continue;
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divmod(Poly{1}, Poly{}), DivisionByZero);
  }

  TEST_CASE("gcd divides both and is monic") {
    const Poly common{1, 3, 2};  // (1 + x)(1 + 2x)
    const Poly g = gcd(common * Poly{2, 1}, common * Poly{-1, 0, 5});
    CHECK(g == common.monic());
    CHECK(g.lead().is_one());
    CHECK(gcd(Poly{}, Poly{}).is_zero());
  }

  TEST_CASE("rational function normalization") {
    const RatFun f(Poly{1, 0, -1}, Poly{2, 2});  // (1 - x^2) / (2 + 2x) = (1 - x)/2
    CHECK(f == RatFun(Poly{Rational::parse("1/2"), Rational::parse("-1/2")}));
    CHECK(f.is_polynomial());
    const RatFun g(Poly{1}, Poly{0, 0, 3});
    CHECK(g.has_pole_at_origin());
    CHECK(g.valuation() == -2);
    CHECK(g.den() == Poly{0, 0, 1});
    CHECK_THROWS_AS(g.at_zero(), PoleAtOrigin);
    CHECK_THROWS_AS(RatFun(Poly{1}, Poly{}), DivisionByZero);
    CHECK(RatFun::monomial(-2) * RatFun::monomial(3) == RatFun(Poly{0, 1}));
  }

  TEST_CASE("normalization commutes with products") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
      const Poly a = random_poly(rng, 3), b = random_poly(rng, 3, true), c = random_poly(rng, 3),
                 d = random_poly(rng, 3, true);
      const RatFun f(a, b), g(c, d);
      const RatFun prod(a * c, b * d);
      CHECK(f * g == prod);
      CHECK(gcd(prod.num(), prod.den()).degree() <= 0);
    }
  }

  TEST_CASE("signed geometric sums") {
    CHECK(geom_sum(0, 2) == RatFun(Poly{1, 1, 1}));
    CHECK(geom_sum(0, -1).is_zero());
    CHECK(geom_sum(0, -3) == -(RatFun::monomial(-1) + RatFun::monomial(-2)));
    for (int a = -8; a <= 8; ++a)
      for (int b = a; b <= 8; ++b)
        for (int c = b + 1; c <= 8; ++c) REQUIRE(geom_sum(a, b) + geom_sum(b + 1, c) == geom_sum(a, c));
  }

  TEST_CASE("series expansion of reciprocals") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
      const Poly p = random_poly(rng, 5, true);
      for (int n : {0, 5, 16}) {
        const TruncSeries s = series_expand(RatFun(Poly{1}, p), n);
        const TruncSeries back = s * series_expand(RatFun(p), n);
        CHECK(back == TruncSeries::constant(Rational(1), n));
      }
    }
    CHECK_THROWS_AS(series_expand(RatFun::monomial(-1), 4), PoleAtOrigin);
  }

  TEST_CASE("truncated series operations") {
    const TruncSeries a(std::vector<Rational>{1, 2, 3});
    CHECK(a.order() == 2);
    CHECK(a.shifted_up(1) == TruncSeries(std::vector<Rational>{0, 1, 2}));
    CHECK(a.shifted_up(1).shifted_down(1).order() == 1);
    CHECK_THROWS_AS(a.shifted_down(1), PreconditionError);
    CHECK_THROWS_AS(a + TruncSeries(3), OrderMismatch);
    CHECK_THROWS_AS(a[3], InsufficientOrder);
    CHECK(a.with_coeff(0, Rational(5))[0] == Rational(5));
    CHECK(TruncSeries(std::vector<Rational>{0, 0, 4}).valuation() == 2);
    CHECK(TruncSeries(4).is_zero());
    CHECK_THROWS_AS(TruncSeries(std::vector<Rational>{0, 1}).reciprocal(), PreconditionError);
  }

  TEST_CASE("quadratic solver reproduces the Catalan numbers") {
    const QuadEq eq{};  // F = 1 / (1 - x F)
    const TruncSeries c = solve_quadratic(eq, 20);
    const auto expect = oracle::catalan(20);
    for (int i = 0; i <= 20; ++i) CHECK(c[i] == expect[static_cast<std::size_t>(i)]);
    const TruncSeries rhs = TruncSeries::constant(Rational(1), 20) + (c * c).shifted_up(1);
    CHECK(c == rhs);
    CHECK(quadratic_residual(eq, c).is_zero());
  }

  TEST_CASE("quadratic solver is stable under the truncation order") {
    const QuadEq eq = canonicalize(RatFun(Poly{1, 1}), RatFun(Poly{1, -1, 2}), RatFun(Poly{-1, 1}), 1);
    const TruncSeries big = solve_quadratic(eq, 24);
    CHECK(big.truncated(12) == solve_quadratic(eq, 12));
  }

  TEST_CASE("canonical form extracts valuations") {
    // F = x^2 (1 + x) / (1 + x^3 * x F)
    const QuadEq eq = canonicalize(RatFun(Poly{0, 0, 1, 1}), RatFun(1), RatFun::monomial(3), 1);
    CHECK(eq.d == 2);
    CHECK(eq.k == 4);
    CHECK(eq.u == RatFun(Poly{1}, Poly{1, 1}));
    CHECK(solve_quadratic(eq, 10).valuation() == 2);
    QuadEq bad;
    bad.k = 0;
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad = QuadEq{};
    bad.u = RatFun(Poly{0, 1});
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
  }
}
