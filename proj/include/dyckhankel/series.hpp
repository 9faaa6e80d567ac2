#pragma once

#include <span>
#include <string>
#include <vector>

#include "dyckhankel/ratfun.hpp"

namespace dyckhankel {

/// Power series known exactly through x^order.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(int order);
  /// Series whose coefficients are exactly `coeffs` (order = size - 1).
  explicit TruncSeries(std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const;
  /// Copy with coefficient i replaced.
  TruncSeries with_coeff(int i, const Rational& c) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const Rational& c);
  TruncSeries operator-() const;
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries reciprocal() const;
  /// Multiplication by x^e at the same order (high terms fall off).
  TruncSeries shifted_up(int e) const;
  /// Division by x^e; the first e coefficients must vanish. Order drops by e.
  TruncSeries shifted_down(int e) const;
  /// Keeps coefficients 0..m (m <= order).
  TruncSeries truncated(int m) const;

  /// Index of the first nonzero coefficient, or -1 if all known ones vanish.
  int valuation() const;
  bool is_zero() const { return valuation() < 0; }
  bool is_integral() const;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficients 0..order of the power-series expansion of f.
/// Throws PoleAtOrigin when f's denominator vanishes at 0.
TruncSeries series_expand(const RatFun& f, int order);

}  // namespace dyckhankel
