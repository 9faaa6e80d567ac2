#include <random>

#include "doctest.h"
#include "dyckhankel/errors.hpp"
#include "dyckhankel/genfun.hpp"
#include "dyckhankel/hankel.hpp"
#include "oracles.hpp"

using namespace dyckhankel;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("determinants agree with cofactor expansion") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> a;
      for (int i = 0; i < 12; ++i) a.emplace_back(coeff(rng));
      const TruncSeries s(a);
      for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 1; ++k) CHECK(hankel_det(s, k, n) == oracle::hankel_cofactor(a, k, n));
    }
  }

  TEST_CASE("rational entries and pivoting") {
    std::vector<Rational> m = {Rational(0), Rational(1), Rational(1), Rational(0)};
    CHECK(bareiss_determinant(m, 2) == Rational(-1));
    std::vector<Rational> q = {Rational::parse("1/2"), Rational(1), Rational::parse("1/3"), Rational(2)};
    CHECK(bareiss_determinant(q, 2) == Rational::parse("2/3"));
    std::vector<Rational> singular = {Rational(1), Rational(2), Rational(2), Rational(4)};
    CHECK(bareiss_determinant(singular, 2).is_zero());
    CHECK(bareiss_determinant({}, 0) == Rational(1));
  }

  TEST_CASE("integer input gives integer output") {
    const TruncSeries c = catalan_series(20);
    for (int n = 1; n <= 10; ++n) CHECK(hankel_det(c, 2, n).is_integer());
  }

  TEST_CASE("feasibility") {
    const TruncSeries s(ints({1, 2, 3, 4}));
    CHECK(max_hankel_size(s, 0) == 2);
    CHECK(max_hankel_size(s, 1) == 2);
    CHECK_NOTHROW(hankel_det(s, 0, 2));
    CHECK_THROWS_AS(hankel_det(s, 0, 3), InsufficientOrder);
    CHECK(hankel_det(s, 0, 0) == Rational(1));
  }

  TEST_CASE("catalan sequences are all ones") {
    const TruncSeries c = catalan_series(24);
    for (const auto& h : hankel_sequence(c, 0, 12)) CHECK(h.is_one());
    for (const auto& h : hankel_sequence(c, 1, 12)) CHECK(h.is_one());
  }

  TEST_CASE("periodicity detection") {
    const PeriodReport p = detect_periodicity(ints({1, 0, -1, 1, 0, -1, 1}));
    CHECK(p.confirmed());
    CHECK(p.preperiod == 0);
    CHECK(p.period == 3);
    CHECK(p.star() == "(1,0,-1)*");
    const PeriodReport q = detect_periodicity(ints({5, 1, 2, 1, 2, 1, 2}));
    CHECK(q.preperiod == 1);
    CHECK(q.star() == "(5,(1,2)*)");
    CHECK_FALSE(detect_periodicity(ints({1, 2, 3, 4, 5})).confirmed());
    CHECK_FALSE(detect_periodicity(ints({1, 2, 1})).confirmed());
    CHECK(render_sequence(ints({1, -1})) == "(1,-1)");
  }

  TEST_CASE("two-parameter lemma on hand examples") {
    // G = 0: F = 1/(1 - a x) gives H_1 = 1 and H_n = 0 beyond.
    CHECK(check_ab_lemma(Rational(1), Rational(1), TruncSeries(12), 6).passed);
    CHECK(check_ab_lemma(Rational(0), Rational(1), catalan_series(12), 6).passed);
    CHECK(check_ab_lemma(Rational(-2), Rational(2), TruncSeries(ints({3, -1, 0, 2, 5, 1, 1, 0, 0, 2, 1, 1, 4})), 6)
              .passed);
    CHECK_THROWS_AS(check_ab_lemma(Rational(0), Rational(0), catalan_series(12), 3), PreconditionError);
    CHECK_THROWS_AS(check_ab_lemma(Rational(0), Rational(1), catalan_series(4), 6), InsufficientOrder);
  }

  TEST_CASE("s-fraction product formulas") {
    const std::vector<Rational> b = ints({2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1});
    const std::vector<Rational> a_even_zero = ints({1, 0, -2, 0, 1, 0, 2, 0, -1, 0, 1, 0});
    const std::vector<Rational> a_odd_zero = ints({0, 1, 0, -2, 0, 1, 0, 2, 0, -1, 0, 1});
    CHECK(check_sfraction_products(a_even_zero, b, 5).passed);
    CHECK(check_sfraction_products(a_odd_zero, b, 5).passed);
    // Pure S-fraction with b_i = 1 is the Catalan series.
    const std::vector<Rational> ones(12, Rational(1));
    CHECK(sfraction_series(std::vector<Rational>(12, Rational(0)), ones, 10) == catalan_series(10));
  }

  TEST_CASE("shift identities") {
    for (const auto& s : {HeightSet::finite({}), HeightSet::finite({2}), HeightSet::periodic(2, {1}),
                          HeightSet::periodic(5, {1, 2, 4})})
      CHECK(check_shift_identities(s, 8).passed);
  }

  TEST_CASE("check reports record failures") {
    CheckReport r("demo");
    r.record(true, "a");
    r.record(false, "b");
    CHECK(r.checked == 2);
    CHECK_FALSE(r.passed);
    CHECK(r.failures == std::vector<std::string>{"b"});
  }
}
