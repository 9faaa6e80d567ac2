#include "dyckhankel/heightset.hpp"

#include <charconv>

#include "dyckhankel/errors.hpp"

namespace dyckhankel {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw PreconditionError("malformed integer '" + std::string(s) + "'");
  return v;
}

std::set<int> parse_list(std::string_view s) {
  std::set<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.insert(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

int residue(int h, int m) { return ((h - 1) % m + m) % m + 1; }

}  // namespace

HeightSet HeightSet::finite(const std::set<int>& heights) {
  HeightSet s;
  for (int h : heights) {
    if (h <= 0) continue;
    if (static_cast<int>(s.head_.size()) < h) s.head_.resize(static_cast<std::size_t>(h), false);
    s.head_[static_cast<std::size_t>(h - 1)] = true;
  }
  s.trim();
  return s;
}

HeightSet HeightSet::periodic(int modulus, const std::set<int>& residues) {
  if (modulus < 2) throw PreconditionError("periodic height set needs modulus m >= 2");
  for (int r : residues)
    if (r < 1 || r > modulus) throw PreconditionError("residue " + std::to_string(r) + " outside 1..m");
  HeightSet s;
  s.modulus_ = modulus;
  s.residues_ = residues;
  return s;
}

HeightSet HeightSet::parse(std::string_view spec) {
  if (spec.starts_with("finite:")) {
    spec.remove_prefix(7);
    return finite(parse_list(spec));
  }
  if (spec.starts_with("periodic:")) {
    spec.remove_prefix(9);
    if (!spec.starts_with("m=")) throw PreconditionError("periodic set must start with m=");
    spec.remove_prefix(2);
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos) throw PreconditionError("periodic set needs ,V=...");
    const int m = parse_int(spec.substr(0, comma));
    spec.remove_prefix(comma + 1);
    if (!spec.starts_with("V=")) throw PreconditionError("periodic set needs V=...");
    spec.remove_prefix(2);
    return periodic(m, parse_list(spec));
  }
  throw PreconditionError("height set must be 'finite:...' or 'periodic:m=..,V=..'");
}

HeightSet::Kind HeightSet::kind() const {
  if (modulus_ == 0) return Kind::finite;
  return head_.empty() ? Kind::periodic : Kind::eventually_periodic;
}

bool HeightSet::tail_contains(int height) const {
  return modulus_ > 0 && residues_.count(residue(height, modulus_)) > 0;
}

bool HeightSet::contains(int height) const {
  if (height <= 0) return false;
  if (height <= static_cast<int>(head_.size())) return head_[static_cast<std::size_t>(height - 1)];
  return tail_contains(height);
}

int HeightSet::max_finite() const {
  if (modulus_ != 0) throw PreconditionError("max_finite on an infinite height set");
  return static_cast<int>(head_.size());
}

void HeightSet::trim() {
  while (!head_.empty() && head_.back() == tail_contains(static_cast<int>(head_.size()))) head_.pop_back();
}

HeightSet HeightSet::shifted_down(int j) const {
  if (j < 0) return shifted_up(-j);
  HeightSet s;
  s.modulus_ = modulus_;
  if (modulus_ > 0)
    for (int r : residues_) s.residues_.insert(residue(r - j, modulus_));
  for (int h = j + 1; h <= static_cast<int>(head_.size()); ++h) s.head_.push_back(contains(h));
  s.trim();
  return s;
}

HeightSet HeightSet::shifted_up(int j) const {
  if (j < 0) return shifted_down(-j);
  HeightSet s;
  s.modulus_ = modulus_;
  if (modulus_ > 0)
    for (int r : residues_) s.residues_.insert(residue(r + j, modulus_));
  s.head_.assign(static_cast<std::size_t>(j), false);
  for (int h = 1; h <= static_cast<int>(head_.size()); ++h) s.head_.push_back(contains(h));
  s.trim();
  return s;
}

HeightSet HeightSet::with(int h) const {
  if (h <= 0 || contains(h)) return *this;
  HeightSet s = *this;
  for (int x = static_cast<int>(s.head_.size()) + 1; x <= h; ++x) s.head_.push_back(tail_contains(x));
  s.head_[static_cast<std::size_t>(h - 1)] = true;
  s.trim();
  return s;
}

std::string HeightSet::to_string() const {
  std::string head;
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (!head_[i]) continue;
    if (!head.empty()) head += ',';
    head += std::to_string(i + 1);
  }
  if (modulus_ == 0) return "finite:" + head;
  std::string v;
  for (int r : residues_) {
    if (!v.empty()) v += ',';
    v += std::to_string(r);
  }
  std::string out = "periodic:m=" + std::to_string(modulus_) + ",V=" + v;
  if (!head_.empty()) out += ";head=" + std::to_string(head_.size()) + ":" + head;
  return out;
}

}  // namespace dyckhankel
