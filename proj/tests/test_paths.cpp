#include <set>

#include "doctest.h"
#include "dyckhankel/errors.hpp"
#include "dyckhankel/paths.hpp"
#include "oracles.hpp"

using namespace dyckhankel;

TEST_SUITE("paths") {
  TEST_CASE("height set parsing and membership") {
    const HeightSet p = HeightSet::parse("periodic:m=5,V=1,2,4");
    CHECK(p.kind() == HeightSet::Kind::periodic);
    CHECK(p.contains(1));
    CHECK(p.contains(7));
    CHECK_FALSE(p.contains(3));
    CHECK_FALSE(p.contains(0));
    const HeightSet m = HeightSet::periodic(3, {3});
    CHECK(m.contains(3));
    CHECK(m.contains(6));
    CHECK_FALSE(m.contains(4));
    CHECK(HeightSet::parse("finite:") == HeightSet::finite({}));
    CHECK(HeightSet::parse("finite:1,3,5").max_finite() == 5);
    CHECK_THROWS_AS(HeightSet::parse("bogus"), PreconditionError);
    CHECK_THROWS_AS(HeightSet::parse("periodic:m=1,V=1"), PreconditionError);
    CHECK_THROWS_AS(HeightSet::parse("periodic:m=3,V=4"), PreconditionError);
  }

  TEST_CASE("height set shifts") {
    const HeightSet s = HeightSet::periodic(5, {1, 2, 4});
    CHECK(s.shifted_up(2).with(1) == HeightSet::periodic(5, {1, 3, 4}));
    CHECK(HeightSet::periodic(5, {1, 3, 4}).shifted_up(1) == HeightSet::periodic(5, {2, 4, 5}));
    const HeightSet odd_from_three = HeightSet::periodic(2, {1}).shifted_up(2);
    CHECK(odd_from_three.kind() == HeightSet::Kind::eventually_periodic);
    CHECK_FALSE(odd_from_three.contains(1));
    CHECK(odd_from_three.contains(3));
    CHECK(odd_from_three.shifted_down(2) == HeightSet::periodic(2, {1}));
    CHECK(HeightSet::finite({1, 4}).shifted_down(2) == HeightSet::finite({2}));
    CHECK(HeightSet::finite({0, -3, 2}) == HeightSet::finite({2}));
  }

  TEST_CASE("path parsing and statistics") {
    const DyckPath p = DyckPath::parse("UUDUDD");
    CHECK(p.semilength() == 3);
    CHECK(peak_heights(p) == std::vector<int>{2, 2});
    CHECK(valley_heights(p) == std::vector<int>{1});
    CHECK(first_return(p) == 6);
    CHECK(first_return(DyckPath::parse("UDUD")) == 2);
    CHECK(first_return(DyckPath{}) == 0);
    CHECK(p.to_string() == "UUDUDD");
    CHECK_THROWS_AS(DyckPath::parse("UDDU"), PreconditionError);
    CHECK_THROWS_AS(DyckPath::parse("UUD"), PreconditionError);
    CHECK_THROWS_AS(DyckPath::parse("UXD"), PreconditionError);
    CHECK(is_m_peaks(DyckPath::parse("UUDD"), 2));
    CHECK_FALSE(is_m_peaks(DyckPath::parse("UDUD"), 2));
    CHECK(is_m_peaks(DyckPath{}, 3));
  }

  TEST_CASE("enumeration matches the Catalan recurrence") {
    const auto c = oracle::catalan(10);
    for (int n = 0; n <= 10; ++n) {
      const auto paths = enumerate_dyck(n);
      CHECK(Rational(static_cast<long>(paths.size())) == c[static_cast<std::size_t>(n)]);
      CHECK(std::is_sorted(paths.begin(), paths.end(), [](const DyckPath& a, const DyckPath& b) {
        return a.to_string() < b.to_string();
      }));
    }
    CHECK(enumerate_dyck(0).size() == 1);
    CHECK_THROWS_AS(enumerate_dyck(15), GuardViolation);
  }

  TEST_CASE("avoidance counts against word scanning") {
    const std::vector<HeightSet> sets = {
        HeightSet::finite({}),         HeightSet::finite({1}),        HeightSet::finite({2, 3}),
        HeightSet::periodic(2, {1}),   HeightSet::periodic(2, {2}),   HeightSet::periodic(3, {1, 2}),
        HeightSet::periodic(4, {1, 3}), HeightSet::periodic(5, {1, 2, 4}),
    };
    for (const auto& s : sets)
      for (int n = 0; n <= 8; ++n)
        CHECK(static_cast<long>(count_avoiding(n, s)) ==
              oracle::count_paths(n, [&](int h) { return !s.contains(h); }));
    // Riordan numbers for odd forbidden heights.
    const std::vector<long> riordan{1, 0, 1, 1, 3, 6, 15, 36, 91};
    for (int n = 0; n <= 8; ++n)
      CHECK(static_cast<long>(count_avoiding(n, HeightSet::periodic(2, {1}))) == riordan[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("bijection worked examples") {
    const DyckPath n = bijection_forward(DyckPath::parse("UUDD"), 2, 1);
    CHECK(n.to_string() == "UUDUDD");
    const auto [m, k] = bijection_inverse(n, 2);
    CHECK(m.to_string() == "UUDD");
    CHECK(k == 1);
    // A 3-peaks path with 7 up steps maps to one with 8.
    const DyckPath fig_m = DyckPath::parse("UUUDUDDDUUUDDD");
    REQUIRE(is_m_peaks(fig_m, 3));
    const DyckPath fig_n = bijection_forward(fig_m, 3, 1);
    CHECK(fig_n.semilength() == fig_m.semilength() + 1);
    CHECK(is_m_peaks(fig_n, 3));
    CHECK(first_return(fig_n) == fig_n.length());
    CHECK(bijection_inverse(fig_n, 3) == std::make_pair(fig_m, 1));
  }

  TEST_CASE("bijection rejects inputs outside its domain") {
    auto fault_of = [](auto&& call) {
      try {
        call();
      } catch (const BijectionError& e) {
        return e.fault();
      }
      FAIL("expected a BijectionError");
      return BijectionFault::empty_path;
    };
    CHECK(fault_of([] { bijection_forward(DyckPath{}, 2, 1); }) == BijectionFault::empty_path);
    CHECK(fault_of([] { bijection_forward(DyckPath::parse("UUDD"), 2, 2); }) == BijectionFault::offset_out_of_range);
    CHECK(fault_of([] { bijection_forward(DyckPath::parse("UDUD"), 2, 1); }) == BijectionFault::not_m_peaks);
    CHECK(fault_of([] { bijection_inverse(DyckPath::parse("UUDD"), 2); }) == BijectionFault::no_valley_below_level);
    CHECK(fault_of([] { bijection_inverse(DyckPath::parse("UUDDUUDD"), 2); }) == BijectionFault::early_return);
    CHECK(fault_of([] { bijection_inverse(DyckPath::parse("UUDUDUDD"), 3); }) == BijectionFault::not_m_peaks);
  }

  TEST_CASE("bijection round trips exhaustively") {
    for (int m = 2; m <= 4; ++m) {
      std::set<int> v;
      for (int i = 1; i < m; ++i) v.insert(i);
      const HeightSet m_peaks = HeightSet::periodic(m, v);
      for (int len = 1; len <= 8; ++len) {
        for_each_dyck(len, m_peaks, [&](const DyckPath& p) {
          for (int k = 1; k < m; ++k) {
            const DyckPath img = bijection_forward(p, m, k);
            REQUIRE(img.semilength() == len + k);
            REQUIRE(bijection_inverse(img, m) == std::make_pair(p, k));
          }
        });
      }
    }
  }
}
