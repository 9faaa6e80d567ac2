#pragma once

#include <string>

#include "dyckhankel/ratfun.hpp"
#include "dyckhankel/series.hpp"

namespace dyckhankel {

/// Canonical quadratic functional equation F = x^d / (u + x^k v F).
///
/// u and v are pole-free at the origin with nonzero constant terms, d >= 0 and
/// k >= 1. Its unique power-series solution has valuation exactly d.
struct QuadEq {
  int d = 0;
  int k = 1;
  RatFun u{1};
  RatFun v{-1};

  /// Throws PreconditionError unless the invariants above hold.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const QuadEq&, const QuadEq&) = default;
};

/// Brings F = numer / (denom + x^shift * coeff * F) into canonical form by
/// pulling the x-adic valuation out of numer and coeff and dividing through
/// by the unit part of numer.
QuadEq canonicalize(const RatFun& numer, const RatFun& denom, const RatFun& coeff, int shift);

/// Unique power-series solution through x^order, by N + 2 rounds of the
/// fixed-point map F <- x^d / (u + x^k v F) started from F = 0.
TruncSeries solve_quadratic(const QuadEq& eq, int order);

/// F (u + x^k v F) - x^d, truncated at F's order.
TruncSeries quadratic_residual(const QuadEq& eq, const TruncSeries& f);

}  // namespace dyckhankel
