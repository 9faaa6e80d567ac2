#include "dyckhankel/series.hpp"

#include <algorithm>

#include "dyckhankel/errors.hpp"

namespace dyckhankel {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

}  // namespace

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw PreconditionError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("series needs at least one coefficient");
}

TruncSeries TruncSeries::constant(const Rational& c, int order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const Rational& TruncSeries::operator[](int i) const {
  if (i < 0 || i > order())
    throw InsufficientOrder("coefficient " + std::to_string(i) + " beyond series order " +
                            std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncSeries TruncSeries::with_coeff(int i, const Rational& c) const {
  TruncSeries r = *this;
  (void)(*this)[i];
  r.coeffs_[static_cast<std::size_t>(i)] = c;
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  TruncSeries r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncSeries(std::move(out));
}

TruncSeries operator*(const TruncSeries& a, const Rational& c) {
  TruncSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

TruncSeries TruncSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) throw PreconditionError("reciprocal of a series with zero constant term");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> inv(n);
  const Rational c0 = Rational(1) / coeffs_[0];
  inv[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j].is_zero() || inv[k - j].is_zero()) continue;
      acc += coeffs_[j] * inv[k - j];
    }
    inv[k] = -acc * c0;
  }
  return TruncSeries(std::move(inv));
}

TruncSeries TruncSeries::shifted_up(int e) const {
  if (e < 0) throw PreconditionError("negative shift");
  TruncSeries r(order());
  for (int i = 0; i + e <= order(); ++i) r.coeffs_[static_cast<std::size_t>(i + e)] = coeffs_[static_cast<std::size_t>(i)];
  return r;
}

TruncSeries TruncSeries::shifted_down(int e) const {
  if (e < 0) throw PreconditionError("negative shift");
  if (e > order()) throw InsufficientOrder("shift exceeds series order");
  for (int i = 0; i < e; ++i)
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
      throw PreconditionError("series not divisible by the requested power of x");
  return TruncSeries(std::vector<Rational>(coeffs_.begin() + e, coeffs_.end()));
}

TruncSeries TruncSeries::truncated(int m) const {
  if (m < 0) throw PreconditionError("negative truncation order");
  if (m > order()) throw InsufficientOrder("cannot extend a truncated series");
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

int TruncSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

bool TruncSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::string TruncSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

TruncSeries series_expand(const RatFun& f, int order) {
  if (f.has_pole_at_origin())
    throw PoleAtOrigin("cannot expand " + f.to_string() + " as a power series");
  auto to_series = [order](const Poly& p) {
    std::vector<Rational> cs(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) cs[static_cast<std::size_t>(i)] = p[i];
    return TruncSeries(std::move(cs));
  };
  if (f.is_polynomial()) return to_series(f.num());
  return to_series(f.num()) * to_series(f.den()).reciprocal();
}

}  // namespace dyckhankel
