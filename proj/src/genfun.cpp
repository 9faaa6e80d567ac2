#include "dyckhankel/genfun.hpp"

#include <algorithm>
#include <array>

#include "dyckhankel/errors.hpp"

namespace dyckhankel {

namespace {

void check_modulus(int m, int r) {
  if (m < 2) throw PreconditionError("modulus must satisfy m >= 2");
  if (r < 1 || r > m) throw PreconditionError("residue must satisfy 1 <= r <= m");
}

// One first-return layer: 1 / (1 + [forbidden] x - x inner).
TruncSeries layer(bool forbidden, const TruncSeries& inner) {
  const int n = inner.order();
  TruncSeries base = TruncSeries::constant(1, n);
  if (forbidden && n >= 1) base = base.with_coeff(1, 1);
  return (base - inner.shifted_up(1)).reciprocal();
}

TruncSeries periodic_fixed_point(const HeightSet& tail, int order) {
  const int m = tail.modulus();
  // Each pass through the m layers fixes at least m more coefficients.
  const int passes = (order + 1) / m + 2;
  TruncSeries d(order);
  for (int p = 0; p < passes; ++p)
    for (int level = m; level >= 1; --level) d = layer(tail.contains(level), d);
  return d;
}

using Mobius = std::array<Poly, 4>;  // (a t + b) / (c t + d)

Mobius compose(const Mobius& f, const Mobius& g) {
  return {f[0] * g[0] + f[1] * g[2], f[0] * g[1] + f[1] * g[3], f[2] * g[0] + f[3] * g[2],
          f[2] * g[1] + f[3] * g[3]};
}

}  // namespace

void GFRequest::validate() const {
  if (order < 0) throw PreconditionError("order must be nonnegative");
  if (heights.modulus() > 0 && static_cast<int>(heights.residues().size()) >= heights.modulus())
    throw PreconditionError("periodic residue set must be a proper subset of {1..m}");
}

TruncSeries catalan_series(int order) { return solve_quadratic(QuadEq{0, 1, RatFun(1), RatFun(-1)}, order); }

TruncSeries dseries_recursive(const GFRequest& req) {
  req.validate();
  const HeightSet& s = req.heights;
  int depth = 0;
  TruncSeries inner(req.order);
  if (s.modulus() == 0) {
    depth = s.max_finite();
    inner = catalan_series(req.order);
  } else {
    depth = s.head_length();
    inner = periodic_fixed_point(s.shifted_down(depth), req.order);
  }
  for (int j = depth - 1; j >= 0; --j) inner = layer(s.contains(j + 1), inner);
  return inner;
}

QuadEq cf_equation(int m, const std::set<int>& residues) {
  const HeightSet set = HeightSet::periodic(m, residues);
  if (static_cast<int>(residues.size()) >= m)
    throw PreconditionError("periodic residue set must be a proper subset of {1..m}");
  Mobius total{Poly{1}, Poly{}, Poly{}, Poly{1}};
  for (int level = 1; level <= m; ++level) {
    const Poly a = set.contains(level) ? Poly{1, 1} : Poly{1};
    total = compose(total, Mobius{Poly{}, Poly{1}, Poly{0, -1}, a});
  }
  // D = (a D + b)/(c D + d)  <=>  D = b / ((d - a) + c D).
  return canonicalize(RatFun(total[1]), RatFun(total[3] - total[0]), RatFun(total[2]), 0);
}

TruncSeries dseries_cf(int m, const std::set<int>& residues, int order) {
  return solve_quadratic(cf_equation(m, residues), order);
}

TruncSeries verify_algebraic(const TruncSeries& f, const HeightSet& heights) {
  const int n = f.order();
  const bool odd = heights == HeightSet::periodic(2, {1});
  const bool even = heights == HeightSet::periodic(2, {2});
  if (!odd && !even) throw PreconditionError("closed form known only for (2,{1}) and (2,{2})");
  const TruncSeries factor = series_expand(odd ? RatFun(Poly{0, 2, 2}) : RatFun(Poly{0, 2}), n);
  const TruncSeries lin = factor * f - series_expand(RatFun(Poly{1, 1}), n);
  return lin * lin - series_expand(RatFun(Poly{1, -2, -3}), n);
}

FmrEquation fmr_equation(int m, int r) {
  check_modulus(m, r);
  FmrEquation eq;
  eq.m = m;
  eq.r = r;
  eq.p = RatFun(1) - geom_sum(2, m - r + 1) * geom_sum(0, r - 3);
  eq.q = RatFun(Poly{1, 1}) - geom_sum(3, m - r + 1) * geom_sum(0, r - 3) -
         geom_sum(2, m - r + 1) * geom_sum(0, r - 2);
  eq.r_coeff = geom_sum(2, m - r) * geom_sum(0, r - 2) - RatFun(1);
  eq.r_displayed = geom_sum(3, m - r + 1) * geom_sum(0, r - 3) - RatFun(1);
  for (const RatFun* part : {&eq.p, &eq.q, &eq.r_coeff})
    if (part->has_pole_at_origin())
      throw PoleAtOrigin("functional equation coefficient keeps a pole: " + part->to_string());
  if (!eq.p.at_zero().is_one()) throw CrossCheckFailure("numerator P must satisfy P(0) = 1");
  eq.canonical = canonicalize(eq.p, eq.q, eq.r_coeff, 1);
  try {
    eq.display_matches = !eq.r_displayed.has_pole_at_origin() &&
                         canonicalize(eq.p, eq.q, eq.r_displayed, 1) == eq.canonical;
  } catch (const Error&) {
    eq.display_matches = false;
  }
  return eq;
}

TruncSeries fmr_raw_residual(const FmrEquation& eq, const TruncSeries& f) {
  const int n = f.order();
  const TruncSeries q = series_expand(eq.q, n);
  const TruncSeries r = series_expand(eq.r_coeff, n);
  return f * (q + (r * f).shifted_up(1)) - series_expand(eq.p, n);
}

TruncSeries fmr_series(int m, int r, int order) { return solve_quadratic(fmr_equation(m, r).canonical, order); }

std::set<int> fmr_residues(int m, int r) {
  check_modulus(m, r);
  std::set<int> v;
  for (int i = 1; i <= m; ++i)
    if (i != r) v.insert(i);
  return v;
}

std::optional<int> first_mismatch(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

void require_equal(const TruncSeries& a, const TruncSeries& b, const std::string& what) {
  if (const auto i = first_mismatch(a, b))
    throw CrossCheckFailure(what + ": coefficient " + std::to_string(*i) + " differs (" + a[*i].to_string() +
                            " vs " + b[*i].to_string() + ")");
}

}  // namespace dyckhankel
