#pragma once

#include <optional>
#include <vector>

#include "dyckhankel/hankel.hpp"
#include "dyckhankel/quadeq.hpp"

namespace dyckhankel {

/// u = low + x^(d+2) high with deg(low) <= d+1.
struct UDecomposition {
  Poly low;
  RatFun high;
};

UDecomposition decompose_u(const RatFun& u, int d);

/// The three cases of the quadratic transformation.
enum class TauCase { rescale, unit_k1, unit_k_ge2 };

/// H_n(F) = sign * scale^(-n) * H_(n-drop)(tau F), with H_j = 0 for j < 0.
struct StepRelation {
  TauCase tau_case = TauCase::rescale;
  int drop = 0;
  int sign = 1;
  Rational scale{1};
};

struct TauStep {
  QuadEq next;
  StepRelation relation;
  /// Numerator and denominator of the transformation's intermediate equation
  /// G = num / (den - x^shift G) (cases ii and iii), used for soundness checks.
  RatFun g_num;
  RatFun g_den;
  int g_shift = 0;
  /// G(0) in case ii; tau(F) = (G - G(0))/x there.
  Rational g0;
};

TauStep tau_step(const QuadEq& eq);

struct ChainCycle {
  int start = 0;  // index of the equation that recurs
  int drop = 0;   // total drop around the cycle
  int sign = 1;   // product of signs around the cycle
  bool unit_scales = true;
};

struct ChainReport {
  std::vector<QuadEq> equations;  // equations[i+1] = tau(equations[i])
  std::vector<StepRelation> relations;
  std::optional<ChainCycle> cycle;

  int steps() const { return static_cast<int>(relations.size()); }
};

/// Iterates tau_step until an equation structurally repeats or max_steps
/// transformations have been applied.
ChainReport tau_chain(const QuadEq& eq0, int max_steps);

/// Extends init = (H_0, ..., H_(drop-1)) of the recurring equation's series by
/// H_n = sign * H_(n-drop), then maps back through the steps before the cycle
/// to return (H_1, ..., H_(n_max)) of equations[0].
std::vector<Rational> recurrence_to_sequence(const ChainReport& report, const std::vector<Rational>& init,
                                             int n_max);

/// The series of tau(F) through x^order computed straight from the
/// transformation's intermediate equation, without canonicalization.
TruncSeries tau_series_direct(const QuadEq& eq, const TauStep& step, int order);

/// Checks one step: the canonical next equation reproduces tau_series_direct
/// and the determinant relation holds for 1 <= n <= n_max.
CheckReport check_tau_step(const QuadEq& eq, const TauStep& step, int n_max, int order);

}  // namespace dyckhankel
