#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckhankel/errors.hpp"
#include "dyckhankel/heightset.hpp"

namespace dyckhankel {

/// Largest semilength accepted by the exhaustive enumerators.
inline constexpr int kMaxEnumerationSemilength = 14;

/// A Dyck path stored as a bit sequence (bit i set means step i is U).
class DyckPath {
 public:
  static constexpr int kMaxSemilength = 32;

  DyckPath() = default;
  /// Parses a U/D string; throws PreconditionError unless it is a Dyck path.
  static DyckPath parse(std::string_view steps);
  /// Wraps raw bits without validation beyond the length limit.
  static DyckPath from_bits(std::uint64_t bits, int length);

  int length() const { return length_; }
  int semilength() const { return length_ / 2; }
  bool empty() const { return length_ == 0; }
  bool is_up(int i) const { return (bits_ >> i) & 1U; }
  std::uint64_t bits() const { return bits_; }

  /// Heights after each step; entry i is the y-coordinate after step i.
  std::vector<int> heights() const;
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Concatenation helper used by the bijection.
class PathBuilder {
 public:
  PathBuilder& append(const DyckPath& p, int from = 0, int to = -1);
  PathBuilder& ups(int count);
  PathBuilder& downs(int count);
  DyckPath build() const;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Visits every n-Dyck path whose peaks avoid `forbidden`, in lexicographic
/// order with D < U. Peaks at forbidden heights prune the search.
template <typename Visitor>
void for_each_dyck(int n, const HeightSet& forbidden, Visitor&& visit);

/// All n-Dyck paths (0 <= n <= 14).
std::vector<DyckPath> enumerate_dyck(int n);
/// Peak heights in left-to-right order.
std::vector<int> peak_heights(const DyckPath& p);
/// Valley heights in left-to-right order.
std::vector<int> valley_heights(const DyckPath& p);
/// Number of n-Dyck paths with no peak height in S.
std::uint64_t count_avoiding(int n, const HeightSet& forbidden);
/// True iff every peak height is a multiple of m.
bool is_m_peaks(const DyckPath& p, int m);
/// Position just past the first return to the axis (0 for the empty path).
int first_return(const DyckPath& p);

/// Why a path lies outside the bijection's domain.
enum class BijectionFault {
  empty_path,
  offset_out_of_range,
  not_m_peaks,
  early_return,
  no_valley_below_level,
};

class BijectionError : public Error {
 public:
  BijectionError(BijectionFault fault, const std::string& what) : Error(what), fault_(fault) {}
  BijectionFault fault() const { return fault_; }

 private:
  BijectionFault fault_;
};

/// Maps a nonempty m-peaks path M and 1 <= k <= m-1 to an m-peaks path N of
/// semilength |M| + k that touches the axis only at its ends and whose
/// rightmost valley below level m sits at height m - k.
DyckPath bijection_forward(const DyckPath& m_path, int m, int k);
/// Inverse of bijection_forward: recovers (M, k).
std::pair<DyckPath, int> bijection_inverse(const DyckPath& n_path, int m);

// -- implementation of the template ------------------------------------------

namespace detail {

template <typename Visitor>
void dyck_dfs(int n, const HeightSet& forbidden, std::uint64_t bits, int pos, int height, int ups,
              bool last_up, Visitor& visit) {
  if (pos == 2 * n) {
    visit(DyckPath::from_bits(bits, pos));
    return;
  }
  // D first so the visiting order is lexicographic with D < U.
  if (height > 0 && !(last_up && forbidden.contains(height)))
    dyck_dfs(n, forbidden, bits, pos + 1, height - 1, ups, false, visit);
  if (ups < n) dyck_dfs(n, forbidden, bits | (std::uint64_t{1} << pos), pos + 1, height + 1, ups + 1, true, visit);
}

}  // namespace detail

template <typename Visitor>
void for_each_dyck(int n, const HeightSet& forbidden, Visitor&& visit) {
  if (n < 0 || n > kMaxEnumerationSemilength)
    throw GuardViolation("enumeration semilength must be in 0.." + std::to_string(kMaxEnumerationSemilength));
  detail::dyck_dfs(n, forbidden, 0, 0, 0, 0, false, visit);
}

}  // namespace dyckhankel
