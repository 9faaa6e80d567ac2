#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyckhankel/hankel.hpp"
#include "dyckhankel/quadeq.hpp"
#include "dyckhankel/tau.hpp"

namespace dyckhankel {

/// Closed-form period word of H_{n>=1}(F^{m,r}).
struct PredictedPattern {
  int m = 0;
  int r = 0;
  std::vector<int> word;
  /// True in the branches whose word has length 2(m+1).
  bool sign_flipping = false;

  int period() const { return static_cast<int>(word.size()); }
};

PredictedPattern predicted_pattern(int m, int r);

/// First n_max terms of the predicted periodic sequence.
std::vector<int> predict_hankel(int m, int r, int n_max);

/// The r = m word from its own two-branch rule on m mod 4.
std::vector<int> corollary_word(int m);

/// (-1)^C(m,2) for r = 1, (-1)^(C(r-1,2) + C(m-r+1,2)) otherwise.
int predicted_chain_sign(int m, int r);

/// Listed values (H_0, ..., H_m) of the first transformed series.
std::vector<int> listed_initial_values(int m, int r);

/// The chain equations F_1, F_2, F_3 as displayed in the hand derivation
/// (F_3 = F_1 for r = 1), brought to canonical form.
std::vector<QuadEq> displayed_chain(int m, int r);

/// 1-based index of the first term of seq that differs from the prediction.
std::optional<int> first_prediction_mismatch(int m, int r, const std::vector<Rational>& seq);

enum class VerifyMode { direct, tau, both };

struct CaseOptions {
  int order = 0;  // 0 selects 6(m+1)+2
  int n_max = 0;  // 0 selects 3(m+1)
  int brute_force_m_max = 5;
  int brute_force_n = 10;
};

/// Outcome of one (m, r) case.
struct CaseRecord {
  int m = 0;
  int r = 0;
  int n_max = 0;
  int order = 0;
  VerifyMode mode = VerifyMode::both;
  std::vector<int> predicted;
  std::vector<Rational> computed;     // direct determinants
  std::vector<Rational> tau_derived;  // from the chain recurrence
  ChainReport chain;
  std::vector<CheckReport> step_checks;
  std::vector<Rational> initial_values;  // H_0..H_m of F_1
  PeriodReport period;
  std::optional<int> first_mismatch;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  bool passed() const { return failures.empty(); }
};

CaseRecord verify_case(int m, int r, VerifyMode mode, const CaseOptions& opts = {});

struct TheoremReport {
  std::vector<CaseRecord> cases;  // ordered by (m, r)

  bool passed() const;
  int failed() const;
};

/// Runs every (m, r) with m_min <= m <= m_max on `jobs` worker threads.
TheoremReport verify_theorem(int m_min, int m_max, VerifyMode mode, const CaseOptions& opts = {}, int jobs = 1);

/// A named group of identity checks.
struct SuiteReport {
  std::string scope;
  std::vector<CheckReport> checks;

  bool passed() const;
};

struct ClassicalOptions {
  std::uint64_t seed = 20240611;
  int lemma_cases = 100;
  int lemma_n_max = 6;
  int sfraction_cases = 20;
  int sfraction_n_max = 5;
  int shift_n_max = 10;
  int example_terms = 10;
};

/// Catalan baseline, closed forms, the two-parameter lemma, S-fraction
/// products, shift identities, the (5, V) example and the periodicity
/// transfer instances.
SuiteReport verify_classical(const ClassicalOptions& opts = {});

/// Forward and inverse maps on exhaustive domains, the cardinality identity
/// and the first-return decomposition behind the r = m equation.
SuiteReport verify_bijection(int m_min = 2, int m_max = 4, int n_max = 9);

/// Series coefficients of F^{m,r} from three constructions against
/// brute-force path counts.
SuiteReport verify_oracles(int m_max = 5, int n_max = 10);

}  // namespace dyckhankel
