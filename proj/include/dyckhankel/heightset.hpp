#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dyckhankel {

/// A set of forbidden peak heights, restricted to the positive integers.
///
/// Finite sets list their members. Periodic sets (m, V) stand for V + mZ with
/// V a subset of {1..m}; height h belongs iff its residue, taken in 1..m,
/// lies in V. Shifting a periodic set or adding a point to it can produce an
/// eventually periodic set: an explicit head over 1..H followed by (m, V).
class HeightSet {
 public:
  enum class Kind { finite, periodic, eventually_periodic };

  HeightSet() = default;
  static HeightSet finite(const std::set<int>& heights);
  static HeightSet periodic(int modulus, const std::set<int>& residues);
  /// `finite:1,3,5`, `finite:` or `periodic:m=5,V=1,2,4`.
  static HeightSet parse(std::string_view spec);

  Kind kind() const;
  bool contains(int height) const;
  /// Modulus of the periodic tail, 0 when there is none.
  int modulus() const { return modulus_; }
  const std::set<int>& residues() const { return residues_; }
  /// Largest member of a finite set, 0 when empty (finite kind only).
  int max_finite() const;
  /// Length of the explicit head; beyond it membership is periodic.
  int head_length() const { return static_cast<int>(head_.size()); }

  /// (S - j) intersected with the positive integers.
  HeightSet shifted_down(int j) const;
  /// S + j; heights 1..j are never members.
  HeightSet shifted_up(int j) const;
  /// S union {h}.
  HeightSet with(int h) const;

  std::string to_string() const;
  friend bool operator==(const HeightSet&, const HeightSet&) = default;

 private:
  bool tail_contains(int height) const;
  void trim();

  std::vector<bool> head_;  // head_[h - 1] is membership of h
  int modulus_ = 0;
  std::set<int> residues_;
};

}  // namespace dyckhankel
