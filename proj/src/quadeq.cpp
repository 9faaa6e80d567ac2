#include "dyckhankel/quadeq.hpp"

#include "dyckhankel/errors.hpp"

namespace dyckhankel {

void QuadEq::validate() const {
  if (d < 0) throw PreconditionError("quadratic equation needs d >= 0");
  if (k < 1) throw PreconditionError("quadratic equation needs k >= 1");
  if (u.has_pole_at_origin() || v.has_pole_at_origin())
    throw PreconditionError("u and v must be pole-free at the origin");
  if (u.at_zero().is_zero()) throw PreconditionError("u(0) must be nonzero");
  if (v.at_zero().is_zero()) throw PreconditionError("v(0) must be nonzero");
}

std::string QuadEq::to_string() const {
  return "F = x^" + std::to_string(d) + " / (" + u.to_string() + " + x^" + std::to_string(k) +
         " * (" + v.to_string() + ") * F)";
}

QuadEq canonicalize(const RatFun& numer, const RatFun& denom, const RatFun& coeff, int shift) {
  if (numer.is_zero()) throw PreconditionError("canonicalization: numerator vanishes identically");
  if (coeff.is_zero()) throw PreconditionError("canonicalization: equation is not quadratic");
  const int e = numer.valuation();
  if (e < 0) throw PoleAtOrigin("canonicalization: numerator has a pole at the origin");
  const RatFun unit = numer.shifted(-e);
  QuadEq eq;
  eq.d = e;
  eq.u = denom / unit;
  const RatFun w = coeff / unit;
  const int f = w.valuation();
  if (shift + f < 1) throw PreconditionError("canonicalization: F-term must carry a positive power of x");
  eq.k = shift + f;
  eq.v = w.shifted(-f);
  eq.validate();
  return eq;
}

TruncSeries solve_quadratic(const QuadEq& eq, int order) {
  eq.validate();
  const TruncSeries us = series_expand(eq.u, order);
  const TruncSeries vs = series_expand(eq.v, order);
  TruncSeries f(order);
  for (int it = 0; it < order + 2; ++it) f = (us + (vs * f).shifted_up(eq.k)).reciprocal().shifted_up(eq.d);
  return f;
}

TruncSeries quadratic_residual(const QuadEq& eq, const TruncSeries& f) {
  const int n = f.order();
  const TruncSeries us = series_expand(eq.u, n);
  const TruncSeries vs = series_expand(eq.v, n);
  return f * (us + (vs * f).shifted_up(eq.k)) - TruncSeries::constant(1, n).shifted_up(eq.d);
}

}  // namespace dyckhankel
