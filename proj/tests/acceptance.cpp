// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "dyckhankel/genfun.hpp"
#include "dyckhankel/hankel.hpp"
#include "dyckhankel/paths.hpp"
#include "dyckhankel/tau.hpp"
#include "dyckhankel/verify.hpp"
#include "oracles.hpp"

using namespace dyckhankel;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) out.fail("took " + std::to_string(secs) + " s");
  if (!out.ok) ++failures;
  std::printf("%s criterion %d: %s (%.1f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.empty() ? "" : " - ", out.detail.c_str());
  std::fflush(stdout);
}

std::string tag(int m, int r) { return "(m,r)=(" + std::to_string(m) + "," + std::to_string(r) + ")"; }

int choose2(int n) { return n * (n - 1) / 2; }

std::vector<Rational> direct_sequence(int m, int r) {
  return hankel_sequence(fmr_series(m, r, 6 * (m + 1) + 2), 0, 3 * (m + 1));
}

}  // namespace

int main() {
  criterion(1, "H_n(F^{m,r}) matches the prediction for 2<=m<=8, n<=3(m+1)", 300, [] {
    Outcome o;
    for (int m = 2; m <= 8; ++m)
      for (int r = 1; r <= m; ++r) {
        const auto seq = direct_sequence(m, r);
        if (const auto idx = first_prediction_mismatch(m, r, seq))
          o.fail(tag(m, r) + " first mismatch at n=" + std::to_string(*idx));
      }
    return o;
  });

  criterion(2, "r=m sequences match the two-branch words", 0, [] {
    Outcome o;
    if (corollary_word(3) != std::vector<int>{1, 0, -1, -1, -1, 0, 1, 1}) o.fail("m=3 word");
    for (int m = 2; m <= 8; ++m) {
      const auto seq = direct_sequence(m, m);
      const auto word = corollary_word(m);
      for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] != Rational(word[i % word.size()])) o.fail(tag(m, m) + " at n=" + std::to_string(i + 1));
    }
    return o;
  });

  criterion(3, "every transformation step holds and chains close with drop m+1 and the predicted sign", 0, [] {
    Outcome o;
    for (int m = 2; m <= 8; ++m)
      for (int r = 1; r <= m; ++r) {
        const int sigma = ((r == 1 ? choose2(m) : choose2(r - 1) + choose2(m - r + 1)) % 2 == 0) ? 1 : -1;
        const int n_max = 3 * (m + 1);
        const int order = 6 * (m + 1) + 2;
        std::vector<QuadEq> eqs{fmr_equation(m, r).canonical};
        std::vector<StepRelation> rels;
        for (int i = 0; i < 4; ++i) {
          const TauStep step = tau_step(eqs.back());
          if (!check_tau_step(eqs.back(), step, n_max, order).passed)
            o.fail(tag(m, r) + " step " + std::to_string(i) + " relation");
          rels.push_back(step.relation);
          eqs.push_back(step.next);
        }
        bool closed = false;
        for (int j = 2; j <= 4 && !closed; ++j) {
          if (!(eqs[static_cast<std::size_t>(j)] == eqs[1])) continue;
          int drop = 0, sign = 1;
          for (int i = 1; i < j; ++i) {
            drop += rels[static_cast<std::size_t>(i)].drop;
            sign *= rels[static_cast<std::size_t>(i)].sign;
          }
          closed = drop == m + 1 && sign == sigma;
        }
        if (rels[0].drop != 1 || rels[0].sign != 1) o.fail(tag(m, r) + " first step is not H_n = H_(n-1)");
        if (!closed) o.fail(tag(m, r) + " no closure with drop m+1 and sign " + std::to_string(sigma));
        const ChainReport chain = tau_chain(eqs[0], 4);
        if (!chain.cycle || chain.steps() > 4) o.fail(tag(m, r) + " chain does not close within 4 steps");
      }
    return o;
  });

  criterion(4, "three series constructions agree with brute-force counts for m<=5, n<=10", 0, [] {
    Outcome o;
    for (int m = 2; m <= 5; ++m)
      for (int r = 1; r <= m; ++r) {
        const auto v = fmr_residues(m, r);
        const HeightSet s = HeightSet::periodic(m, v);
        const TruncSeries a = fmr_series(m, r, 10), b = dseries_cf(m, v, 10), c = dseries_recursive({s, 10});
        for (int n = 0; n <= 10; ++n) {
          const Rational brute(oracle::count_paths(n, [&](int h) { return (h - r) % m == 0; }));
          if (a[n] != brute || b[n] != brute || c[n] != brute) o.fail(tag(m, r) + " n=" + std::to_string(n));
        }
      }
    return o;
  });

  criterion(5, "bijection is invertible on exhaustive domains and the cardinality identity holds", 60, [] {
    Outcome o;
    const SuiteReport rep = verify_bijection(2, 4, 9);
    for (const auto& c : rep.checks)
      if (!c.passed) o.fail(c.name + ": " + c.failures.front());
    if (rep.checks.empty()) o.fail("no checks ran");
    return o;
  });

  criterion(6, "lemma, product formulas, shift identities, modulus-five example, periodicity transfer", 60, [] {
    Outcome o;
    const SuiteReport rep = verify_classical();
    for (const auto& c : rep.checks)
      if (!c.passed) o.fail(c.name + ": " + c.failures.front());
    for (const char* name : {"two-parameter lemma", "s-fraction products", "shift identities", "modulus five example",
                             "periodicity transfer"}) {
      bool seen = false;
      for (const auto& c : rep.checks) seen = seen || (c.name == name && c.checked > 0);
      if (!seen) o.fail(std::string("missing group ") + name);
    }
    return o;
  });

  criterion(7, "closed-form quadratics through order 20 and c = 1 + x c^2 through order 40", 0, [] {
    Outcome o;
    for (const auto& s : {HeightSet::periodic(2, {1}), HeightSet::periodic(2, {2})})
      if (!verify_algebraic(dseries_recursive({s, 20}), s).is_zero()) o.fail("residual for " + s.to_string());
    const TruncSeries c = catalan_series(40);
    const auto expect = oracle::catalan(40);
    for (int i = 0; i <= 40; ++i)
      if (c[i] != expect[static_cast<std::size_t>(i)]) o.fail("catalan coefficient " + std::to_string(i));
    if (!(c == TruncSeries::constant(Rational(1), 40) + (c * c).shifted_up(1))) o.fail("c != 1 + x c^2");
    return o;
  });

  criterion(8, "fraction-free determinants equal cofactor expansion on 50 random 5x5 Hankel matrices", 0, [] {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> a;
      for (int i = 0; i < 9; ++i) a.emplace_back(coeff(rng));
      const Rational fast = hankel_det(TruncSeries(a), 0, 5);
      if (fast != oracle::hankel_cofactor(a, 0, 5)) o.fail("matrix " + std::to_string(t));
      if (!fast.is_integer()) o.fail("non-integer result for matrix " + std::to_string(t));
    }
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
