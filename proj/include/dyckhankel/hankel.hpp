#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyckhankel/heightset.hpp"
#include "dyckhankel/series.hpp"

namespace dyckhankel {

/// det(a_{i+j+shift})_{0<=i,j<n}; H_0 = 1. Requires order >= 2(n-1) + shift.
Rational hankel_det(const TruncSeries& a, int shift, int n);

/// (H_1, ..., H_{n_max}) of the shift-k Hankel matrices.
std::vector<Rational> hankel_sequence(const TruncSeries& a, int shift, int n_max);

/// Largest n for which H_n^shift is computable from a's coefficients.
int max_hankel_size(const TruncSeries& a, int shift);

/// Fraction-free determinant of a dense square matrix (row-major, n x n).
/// Integer matrices stay in the integers throughout.
Rational bareiss_determinant(std::vector<Rational> matrix, int n);

/// Eventual-periodicity summary of an observed window.
struct PeriodReport {
  enum class Status { confirmed, inconclusive };
  Status status = Status::inconclusive;
  int preperiod = 0;
  int period = 0;
  std::vector<Rational> prefix;
  std::vector<Rational> word;

  bool confirmed() const { return status == Status::confirmed; }
  /// `(w1,...,wp)*`, or `(a1,...,(w1,...,wp)*)` with a preperiod.
  std::string star() const;
};

/// Smallest (preperiod, period), ordered by preperiod then period, such that
/// the window is periodic after the preperiod with at least two full periods.
PeriodReport detect_periodicity(const std::vector<Rational>& seq);

/// Renders a sequence as `(s1,s2,...)`.
std::string render_sequence(const std::vector<Rational>& seq);

/// Outcome of an identity check over a range of n.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  int checked = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what);
};

/// For F = 1/(1 - a x - b x G): H_n(F) = b^(n-1) H^1_(n-1)(G) and
/// H^1_n(F) = H_n(a + b G) for 1 <= n <= n_max.
CheckReport check_ab_lemma(const Rational& a, const Rational& b, const TruncSeries& g, int n_max);

/// Expands F = 1/(1 - a1 x - b1 x/(1 - a2 x - b2 x/(...))) and compares its
/// Hankel determinants with the product formulas: H_n(F) when every
/// even-indexed a vanishes, H^1_n(F) when every odd-indexed a vanishes.
/// Sequences are 1-based in the formulas and 0-based here.
CheckReport check_sfraction_products(const std::vector<Rational>& a, const std::vector<Rational>& b, int n_max);

/// Expansion of the continued fraction above through x^order.
TruncSeries sfraction_series(const std::vector<Rational>& a, const std::vector<Rational>& b, int order);

/// H_n(D^({1} u (S+2))) = H_n(D^(S+2)) = H_(n-1)(D^S) and
/// H^1_n(D^(S+1)) = H_n(D^S) for 1 <= n <= n_max. S + j is taken inside the
/// positive integers.
CheckReport check_shift_identities(const HeightSet& s, int n_max);

}  // namespace dyckhankel
