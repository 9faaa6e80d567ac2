#include "dyckhankel/tau.hpp"

#include "dyckhankel/errors.hpp"
#include "dyckhankel/genfun.hpp"

namespace dyckhankel {

namespace {

int binom2_sign(int n) { return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1; }

// G = num / (den - x^shift G), by fixed-point iteration on series.
TruncSeries solve_fraction(const RatFun& num, const RatFun& den, int shift, int order) {
  const TruncSeries ns = series_expand(num, order);
  const TruncSeries ds = series_expand(den, order);
  TruncSeries g(order);
  for (int it = 0; it < order + 2; ++it) g = ns * (ds - g.shifted_up(shift)).reciprocal();
  return g;
}

Rational h_at(const std::vector<Rational>& h, int n) {
  if (n < 0) return Rational(0);
  return h[static_cast<std::size_t>(n)];
}

}  // namespace

UDecomposition decompose_u(const RatFun& u, int d) {
  if (u.has_pole_at_origin()) throw PoleAtOrigin("cannot decompose u with a pole at the origin");
  if (d < 0) throw PreconditionError("decomposition needs d >= 0");
  const TruncSeries s = series_expand(u, d + 1);
  UDecomposition out;
  out.low = Poly(std::vector<Rational>(s.coeffs().begin(), s.coeffs().end()));
  out.high = (u - RatFun(out.low)).shifted(-(d + 2));
  if (out.high.has_pole_at_origin()) throw CrossCheckFailure("u_H has a pole at the origin");
  return out;
}

TauStep tau_step(const QuadEq& eq) {
  eq.validate();
  TauStep step;
  const Rational u0 = eq.u.at_zero();
  if (!u0.is_one()) {
    step.relation = StepRelation{TauCase::rescale, 0, 1, u0};
    step.next = QuadEq{eq.d, eq.k, eq.u * RatFun(Rational(1) / u0), eq.v * RatFun((Rational(1) / u0).pow(2))};
    step.next.validate();
    return step;
  }
  const auto [low, high] = decompose_u(eq.u, eq.d);
  const RatFun ul(low);
  const RatFun den = ul - high.shifted(eq.d + 2);
  step.relation.drop = eq.d + 1;
  step.relation.sign = binom2_sign(eq.d + 1);
  if (eq.k == 1) {
    step.relation.tau_case = TauCase::unit_k1;
    step.g_num = -eq.v - (ul * high).shifted(1);
    step.g_den = den;
    step.g_shift = eq.d + 1;
    step.g0 = step.g_num.at_zero() / step.g_den.at_zero();
    // G = g0 + x T turns G (den - x^(d+1) G) = num into T (B - x^(d+2) T) = C / x.
    const RatFun g0(step.g0);
    const RatFun a = den - g0.shifted(eq.d + 1);
    const RatFun b = a - g0.shifted(eq.d + 1);
    const RatFun c = step.g_num - g0 * a;
    if (!c.is_zero() && c.valuation() < 1) throw CrossCheckFailure("shifted numerator must vanish at the origin");
    step.next = canonicalize(c.shifted(-1), b, RatFun(-1), eq.d + 2);
  } else {
    step.relation.tau_case = TauCase::unit_k_ge2;
    step.g_num = -eq.v.shifted(eq.k - 2) - ul * high;
    step.g_den = den;
    step.g_shift = eq.d + 2;
    step.next = canonicalize(step.g_num, step.g_den, RatFun(-1), step.g_shift);
  }
  return step;
}

ChainReport tau_chain(const QuadEq& eq0, int max_steps) {
  if (max_steps < 1) throw PreconditionError("max_steps must be at least 1");
  ChainReport rep;
  rep.equations.push_back(eq0);
  for (int s = 0; s < max_steps; ++s) {
    TauStep step = tau_step(rep.equations.back());
    rep.relations.push_back(step.relation);
    rep.equations.push_back(step.next);
    for (int a = 0; a + 1 < static_cast<int>(rep.equations.size()); ++a) {
      if (!(rep.equations[static_cast<std::size_t>(a)] == step.next)) continue;
      ChainCycle cyc;
      cyc.start = a;
      for (std::size_t i = static_cast<std::size_t>(a); i < rep.relations.size(); ++i) {
        cyc.drop += rep.relations[i].drop;
        cyc.sign *= rep.relations[i].sign;
        if (!rep.relations[i].scale.is_one()) cyc.unit_scales = false;
      }
      rep.cycle = cyc;
      return rep;
    }
  }
  return rep;
}

std::vector<Rational> recurrence_to_sequence(const ChainReport& report, const std::vector<Rational>& init,
                                             int n_max) {
  if (!report.cycle) throw PreconditionError("chain has no cycle");
  const ChainCycle& cyc = *report.cycle;
  if (!cyc.unit_scales || cyc.drop < 1) throw PreconditionError("cycle recurrence needs unit scales and a positive drop");
  if (static_cast<int>(init.size()) < cyc.drop)
    throw PreconditionError("need " + std::to_string(cyc.drop) + " initial Hankel values");
  std::vector<Rational> h(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    h[static_cast<std::size_t>(n)] = n < cyc.drop ? init[static_cast<std::size_t>(n)]
                                                  : h[static_cast<std::size_t>(n - cyc.drop)] * Rational(cyc.sign);
  for (int i = cyc.start - 1; i >= 0; --i) {
    const StepRelation& rel = report.relations[static_cast<std::size_t>(i)];
    std::vector<Rational> prev(h.size());
    prev[0] = 1;
    for (int n = 1; n <= n_max; ++n)
      prev[static_cast<std::size_t>(n)] = Rational(rel.sign) * rel.scale.pow(-n) * h_at(h, n - rel.drop);
    h = std::move(prev);
  }
  return {h.begin() + 1, h.end()};
}

TruncSeries tau_series_direct(const QuadEq& eq, const TauStep& step, int order) {
  switch (step.relation.tau_case) {
    case TauCase::rescale:
      return solve_quadratic(eq, order) * step.relation.scale;
    case TauCase::unit_k1: {
      const TruncSeries g = solve_fraction(step.g_num, step.g_den, step.g_shift, order + 1);
      return (g - TruncSeries::constant(step.g0, order + 1)).shifted_down(1);
    }
    case TauCase::unit_k_ge2:
      return solve_fraction(step.g_num, step.g_den, step.g_shift, order);
  }
  throw PreconditionError("unknown transformation case");
}

CheckReport check_tau_step(const QuadEq& eq, const TauStep& step, int n_max, int order) {
  CheckReport rep{"tau step " + eq.to_string()};
  const TruncSeries f = solve_quadratic(eq, order);
  const TruncSeries t = solve_quadratic(step.next, order);
  const auto mismatch = first_mismatch(t, tau_series_direct(eq, step, order));
  rep.record(!mismatch, "canonical next equation disagrees with the direct series at x^" +
                            std::to_string(mismatch.value_or(-1)));
  const std::vector<Rational> hf = hankel_sequence(f, 0, n_max);
  std::vector<Rational> ht{Rational(1)};
  const auto tail = hankel_sequence(t, 0, n_max);
  ht.insert(ht.end(), tail.begin(), tail.end());
  const StepRelation& rel = step.relation;
  for (int n = 1; n <= n_max; ++n) {
    const Rational lhs = hf[static_cast<std::size_t>(n - 1)];
    const Rational rhs = Rational(rel.sign) * rel.scale.pow(-n) * h_at(ht, n - rel.drop);
    rep.record(lhs == rhs, "determinant relation fails at n=" + std::to_string(n) + ": " + lhs.to_string() +
                               " != " + rhs.to_string());
  }
  return rep;
}

}  // namespace dyckhankel
