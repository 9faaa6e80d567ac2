#include "dyckhankel/ratfun.hpp"

#include "dyckhankel/errors.hpp"

namespace dyckhankel {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RatFun::RatFun(const Poly& p) : num_(p), den_(Poly::constant(1)) {}

RatFun::RatFun(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational& pivot = den_[0].is_zero() ? den_[den_.valuation()] : den_[0];
  if (!pivot.is_one()) {
    const Rational s = Rational(1) / pivot;
    num_ = num_ * s;
    den_ = den_ * s;
  }
}

RatFun RatFun::monomial(int e, const Rational& c) {
  if (e >= 0) return RatFun(Poly::monomial(c, e));
  return RatFun(Poly::constant(c), Poly::monomial(1, -e));
}

Rational RatFun::at_zero() const {
  if (has_pole_at_origin()) throw PoleAtOrigin("rational function has a pole at x = 0: " + to_string());
  return num_[0];  // den(0) = 1 after normalization
}

int RatFun::valuation() const {
  if (is_zero()) throw PreconditionError("valuation of the zero rational function");
  return num_.valuation() - den_.valuation();
}

RatFun RatFun::shifted(int e) const {
  if (e >= 0) return RatFun(num_.shifted_up(e), den_);
  return RatFun(num_, den_.shifted_up(-e));
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFun geom_sum(int a, int b) {
  static const RatFun one_minus_x(Poly{1, -1});
  return (RatFun::monomial(a) - RatFun::monomial(b + 1)) / one_minus_x;
}

}  // namespace dyckhankel
