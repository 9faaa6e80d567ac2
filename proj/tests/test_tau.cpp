#include "doctest.h"
#include "dyckhankel/errors.hpp"
#include "dyckhankel/genfun.hpp"
#include "dyckhankel/tau.hpp"

using namespace dyckhankel;

TEST_SUITE("tau") {
  TEST_CASE("decomposition of u") {
    const RatFun u(Poly{1, -1, 2, 3}, Poly{1, 1});
    const UDecomposition parts = decompose_u(u, 0);
    CHECK(parts.low.degree() <= 1);
    CHECK(RatFun(parts.low) + parts.high.shifted(2) == u);
    const UDecomposition poly = decompose_u(RatFun(Poly{1, -2, 0, 5}), 3);
    CHECK(poly.low == Poly{1, -2, 0, 5});
    CHECK(poly.high.is_zero());
  }

  TEST_CASE("rescale case") {
    QuadEq eq;
    eq.u = RatFun(Poly{2, 1});
    eq.v = RatFun(-1);
    const TauStep step = tau_step(eq);
    CHECK(step.relation.tau_case == TauCase::rescale);
    CHECK(step.relation.drop == 0);
    CHECK(step.next.u.at_zero() == Rational(1));
    CHECK(check_tau_step(eq, step, 6, 14).passed);
  }

  TEST_CASE("catalan is a fixed point of length one") {
    const ChainReport chain = tau_chain(QuadEq{}, 4);
    REQUIRE(chain.cycle.has_value());
    CHECK(chain.relations.front().tau_case == TauCase::unit_k1);
    const std::vector<Rational> h = recurrence_to_sequence(chain, {Rational(1)}, 8);
    for (const auto& v : h) CHECK(v.is_one());
  }

  TEST_CASE("chain of F^{3,1}") {
    const ChainReport chain = tau_chain(fmr_equation(3, 1).canonical, 4);
    REQUIRE(chain.cycle.has_value());
    CHECK(chain.steps() == 3);
    CHECK(chain.cycle->start == 1);
    CHECK(chain.cycle->drop == 4);
    CHECK(chain.cycle->sign == -1);
    CHECK(chain.relations[0].tau_case == TauCase::unit_k1);
    CHECK(chain.relations[1].tau_case == TauCase::unit_k_ge2);
    CHECK(chain.equations[1].d == 2);
    CHECK(chain.equations[1].k == 2);
  }

  TEST_CASE("every step relation holds for small moduli") {
    for (int m = 2; m <= 6; ++m) {
      for (int r = 1; r <= m; ++r) {
        CAPTURE(m);
        CAPTURE(r);
        const ChainReport chain = tau_chain(fmr_equation(m, r).canonical, 4);
        REQUIRE(chain.cycle.has_value());
        CHECK(chain.cycle->unit_scales);
        for (int i = 0; i < chain.steps(); ++i) {
          const QuadEq& eq = chain.equations[static_cast<std::size_t>(i)];
          CHECK(check_tau_step(eq, tau_step(eq), 3 * (m + 1), default_order(m)).passed);
        }
      }
    }
  }

  TEST_CASE("recurrence reproduces direct determinants") {
    for (auto [m, r] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 1}}) {
      const ChainReport chain = tau_chain(fmr_equation(m, r).canonical, 4);
      REQUIRE(chain.cycle.has_value());
      const int order = default_order(m);
      const TruncSeries fs = solve_quadratic(chain.equations[static_cast<std::size_t>(chain.cycle->start)], order);
      std::vector<Rational> init{Rational(1)};
      for (const auto& h : hankel_sequence(fs, 0, chain.cycle->drop - 1)) init.push_back(h);
      const int n_max = 3 * (m + 1);
      CHECK(recurrence_to_sequence(chain, init, n_max) == hankel_sequence(fmr_series(m, r, order), 0, n_max));
    }
  }

  TEST_CASE("recurrence preconditions") {
    ChainReport open;
    CHECK_THROWS_AS(recurrence_to_sequence(open, {Rational(1)}, 4), PreconditionError);
    const ChainReport chain = tau_chain(fmr_equation(3, 1).canonical, 4);
    CHECK_THROWS_AS(recurrence_to_sequence(chain, {Rational(1)}, 4), PreconditionError);
  }

  TEST_CASE("a step check catches a wrong relation") {
    const QuadEq eq = fmr_equation(3, 2).canonical;
    TauStep step = tau_step(eq);
    step.relation.sign = -step.relation.sign;
    CHECK_FALSE(check_tau_step(eq, step, 8, 20).passed);
  }
}
