#include "dyckhankel/paths.hpp"

#include <algorithm>

namespace dyckhankel {

DyckPath DyckPath::from_bits(std::uint64_t bits, int length) {
  if (length < 0 || length > 2 * kMaxSemilength) throw GuardViolation("path too long");
  DyckPath p;
  p.length_ = length;
  p.bits_ = length == 64 ? bits : (bits & ((std::uint64_t{1} << length) - 1));
  return p;
}

DyckPath DyckPath::parse(std::string_view steps) {
  if (steps.size() > 2 * kMaxSemilength) throw GuardViolation("path too long");
  std::uint64_t bits = 0;
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const char c = steps[i];
    if (c == 'U') {
      bits |= std::uint64_t{1} << i;
      ++height;
    } else if (c == 'D') {
      if (--height < 0) throw PreconditionError("path dips below the axis: " + std::string(steps));
    } else {
      throw PreconditionError("path steps must be U or D");
    }
  }
  if (height != 0) throw PreconditionError("path does not end on the axis: " + std::string(steps));
  return from_bits(bits, static_cast<int>(steps.size()));
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h(static_cast<std::size_t>(length_));
  int y = 0;
  for (int i = 0; i < length_; ++i) {
    y += is_up(i) ? 1 : -1;
    h[static_cast<std::size_t>(i)] = y;
  }
  return h;
}

std::string DyckPath::to_string() const {
  std::string s(static_cast<std::size_t>(length_), 'D');
  for (int i = 0; i < length_; ++i)
    if (is_up(i)) s[static_cast<std::size_t>(i)] = 'U';
  return s;
}

PathBuilder& PathBuilder::append(const DyckPath& p, int from, int to) {
  if (to < 0) to = p.length();
  for (int i = from; i < to; ++i) {
    if (p.is_up(i)) bits_ |= std::uint64_t{1} << length_;
    ++length_;
  }
  return *this;
}

PathBuilder& PathBuilder::ups(int count) {
  for (int i = 0; i < count; ++i) bits_ |= std::uint64_t{1} << length_++;
  return *this;
}

PathBuilder& PathBuilder::downs(int count) {
  length_ += count;
  return *this;
}

DyckPath PathBuilder::build() const { return DyckPath::parse(DyckPath::from_bits(bits_, length_).to_string()); }

std::vector<DyckPath> enumerate_dyck(int n) {
  std::vector<DyckPath> out;
  for_each_dyck(n, HeightSet{}, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

std::vector<int> peak_heights(const DyckPath& p) {
  std::vector<int> out;
  int y = 0;
  for (int i = 0; i + 1 < p.length(); ++i) {
    y += p.is_up(i) ? 1 : -1;
    if (p.is_up(i) && !p.is_up(i + 1)) out.push_back(y);
  }
  return out;
}

std::vector<int> valley_heights(const DyckPath& p) {
  std::vector<int> out;
  int y = 0;
  for (int i = 0; i + 1 < p.length(); ++i) {
    y += p.is_up(i) ? 1 : -1;
    if (!p.is_up(i) && p.is_up(i + 1)) out.push_back(y);
  }
  return out;
}

std::uint64_t count_avoiding(int n, const HeightSet& forbidden) {
  std::uint64_t count = 0;
  for_each_dyck(n, forbidden, [&](const DyckPath&) { ++count; });
  return count;
}

bool is_m_peaks(const DyckPath& p, int m) {
  if (m < 2) throw PreconditionError("m-peaks needs m >= 2");
  const auto peaks = peak_heights(p);
  return std::all_of(peaks.begin(), peaks.end(), [m](int h) { return h % m == 0; });
}

int first_return(const DyckPath& p) {
  int y = 0;
  for (int i = 0; i < p.length(); ++i) {
    y += p.is_up(i) ? 1 : -1;
    if (y == 0) return i + 1;
  }
  return 0;
}

DyckPath bijection_forward(const DyckPath& m_path, int m, int k) {
  if (m < 2) throw PreconditionError("bijection needs m >= 2");
  if (k < 1 || k > m - 1)
    throw BijectionError(BijectionFault::offset_out_of_range, "offset k must satisfy 1 <= k <= m-1");
  if (m_path.empty()) throw BijectionError(BijectionFault::empty_path, "bijection needs a nonempty path");
  if (!is_m_peaks(m_path, m)) throw BijectionError(BijectionFault::not_m_peaks, "input path is not m-peaks");
  // M = M' M1 with M' the first-return prefix, and M' = M2 D^m.
  const int split = first_return(m_path);
  const int m2_end = split - m;
  return PathBuilder()
      .append(m_path, 0, m2_end)
      .downs(k)
      .ups(k)
      .append(m_path, split, m_path.length())
      .downs(m)
      .build();
}

std::pair<DyckPath, int> bijection_inverse(const DyckPath& n_path, int m) {
  if (m < 2) throw PreconditionError("bijection needs m >= 2");
  if (n_path.empty()) throw BijectionError(BijectionFault::empty_path, "bijection needs a nonempty path");
  if (!is_m_peaks(n_path, m)) throw BijectionError(BijectionFault::not_m_peaks, "input path is not m-peaks");
  if (first_return(n_path) != n_path.length())
    throw BijectionError(BijectionFault::early_return, "path returns to the axis before its last step");
  const auto h = n_path.heights();
  // Rightmost valley strictly below level m; position v is its U step.
  int valley = -1;
  int valley_height = 0;
  for (int i = 1; i < n_path.length(); ++i) {
    const int y = h[static_cast<std::size_t>(i - 1)];
    if (!n_path.is_up(i - 1) && n_path.is_up(i) && y < m) {
      valley = i;
      valley_height = y;
    }
  }
  if (valley < 0)
    throw BijectionError(BijectionFault::no_valley_below_level, "no valley below level m");
  const int k = m - valley_height;
  // N = N1 D^k U^k N2 D^m.
  const int n1_end = valley - k;
  const int n2_begin = valley + k;
  const int n2_end = n_path.length() - m;
  const DyckPath m_path = PathBuilder()
                              .append(n_path, 0, n1_end)
                              .downs(m)
                              .append(n_path, n2_begin, n2_end)
                              .build();
  return {m_path, k};
}

}  // namespace dyckhankel
