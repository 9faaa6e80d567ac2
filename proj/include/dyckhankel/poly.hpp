#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dyckhankel/rational.hpp"

namespace dyckhankel {

/// Dense univariate polynomial over the rationals.
///
/// `coeffs()[i]` is the coefficient of x^i. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int exponent);
  /// x^a + x^(a+1) + ... + x^b for 0 <= a; empty range gives zero.
  static Poly range_sum(int a, int b);

  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero outside the stored range.
  const Rational& operator[](int i) const;
  const Rational& lead() const;
  /// Index of the lowest nonzero coefficient, or -1 for zero.
  int valuation() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplies by x^e (e >= 0).
  Poly shifted_up(int e) const;
  /// Divides by x^e; requires valuation >= e.
  Poly shifted_down(int e) const;

  Rational evaluate(const Rational& x) const;
  Poly monic() const;
  bool is_integral() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace dyckhankel
