#pragma once

#include <optional>
#include <set>
#include <string>

#include "dyckhankel/heightset.hpp"
#include "dyckhankel/quadeq.hpp"
#include "dyckhankel/series.hpp"

namespace dyckhankel {

/// A generating-function request: forbidden peak heights and truncation order.
struct GFRequest {
  HeightSet heights;
  int order = 0;

  /// Periodic tails need m >= 2 and V a proper subset of {1..m}.
  void validate() const;
};

/// Default truncation order 6(m+1)+2 used when verifying F^{m,r}.
inline int default_order(int m) { return 6 * (m + 1) + 2; }

/// The Catalan series c(x), solved from c = 1/(1 - x c).
TruncSeries catalan_series(int order);

/// D^S by repeated application of the first-return relation
/// D^S = 1/(1 + [1 in S] x - x D^(S-1)). Finite sets bottom out at the
/// Catalan series; periodic tails close an m-layer fixed-point loop.
TruncSeries dseries_recursive(const GFRequest& req);

/// Canonical quadratic equation satisfied by D^(m,V), obtained by composing
/// the m layers of the continued fraction as Mobius maps.
QuadEq cf_equation(int m, const std::set<int>& residues);

/// D^(m,V) through x^order, solved from cf_equation.
TruncSeries dseries_cf(int m, const std::set<int>& residues, int order);

/// Residual of the rationalized closed forms for odd and even forbidden
/// heights: (2x(1+x)F - x - 1)^2 - (1 - 2x - 3x^2) for (2,{1}) and
/// (2xF - x - 1)^2 - (1 - 2x - 3x^2) for (2,{2}).
TruncSeries verify_algebraic(const TruncSeries& f, const HeightSet& heights);

/// The functional equation F = P / (Q + x R F) for F^{m,r} together with its
/// canonical form F = 1/(u + x v F), u = Q/P, v = R/P.
struct FmrEquation {
  int m = 0;
  int r = 0;
  RatFun p;
  RatFun q;
  RatFun r_coeff;
  /// The xF coefficient exactly as typeset in the closed form's display.
  RatFun r_displayed;
  QuadEq canonical;
  /// True when the displayed coefficient yields the same canonical equation.
  bool display_matches = false;
};

FmrEquation fmr_equation(int m, int r);

/// F (Q + x R F) - P for the pre-canonical equation of F^{m,r}.
TruncSeries fmr_raw_residual(const FmrEquation& eq, const TruncSeries& f);

/// F^{m,r} = D^(m, [m]\{r}) through x^order via the functional equation.
TruncSeries fmr_series(int m, int r, int order);

/// The residue set [m] \ {r}.
std::set<int> fmr_residues(int m, int r);

/// Index of the first differing coefficient over the common order, if any.
std::optional<int> first_mismatch(const TruncSeries& a, const TruncSeries& b);

/// Throws CrossCheckFailure naming the first mismatching coefficient.
void require_equal(const TruncSeries& a, const TruncSeries& b, const std::string& what);

}  // namespace dyckhankel
