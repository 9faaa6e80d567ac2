#pragma once

#include <string>

#include "dyckhankel/poly.hpp"

namespace dyckhankel {

/// Normalized quotient of two polynomials.
///
/// num and den are coprime. If den(0) != 0 the denominator is scaled so that
/// den(0) = 1, otherwise so that its lowest nonzero coefficient is 1. With
/// this canonical form, equality of rational functions is structural.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(Poly num, Poly den);
  RatFun(const Poly& p);  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * x^e for any integer e.
  static RatFun monomial(int e, const Rational& c = Rational(1));

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool has_pole_at_origin() const { return den_[0].is_zero(); }
  /// Value at x = 0; throws PoleAtOrigin when den(0) = 0.
  Rational at_zero() const;
  /// Order of vanishing at x = 0 (negative for a pole); zero function throws.
  int valuation() const;

  /// Multiplies by x^e for any integer e.
  RatFun shifted(int e) const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// The signed geometric sum x^a + ... + x^b, defined for all integers a, b as
/// (x^a - x^(b+1)) / (1 - x). Empty ranges give 0 and reversed ranges the
/// negated complement, e.g. geom_sum(0, -3) = -x^-1 - x^-2.
RatFun geom_sum(int a, int b);

}  // namespace dyckhankel
