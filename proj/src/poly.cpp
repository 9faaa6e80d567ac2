#include "dyckhankel/poly.hpp"

#include <algorithm>

#include "dyckhankel/errors.hpp"

namespace dyckhankel {

namespace {
const Rational kZero{};
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw PreconditionError("polynomial monomial with negative exponent");
  std::vector<Rational> cs(static_cast<std::size_t>(exponent) + 1);
  cs.back() = c;
  return Poly(std::move(cs));
}

Poly Poly::range_sum(int a, int b) {
  if (a < 0) throw PreconditionError("range_sum with negative lower limit");
  if (b < a) return {};
  std::vector<Rational> cs(static_cast<std::size_t>(b) + 1);
  for (int i = a; i <= b; ++i) cs[i] = 1;
  return Poly(std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::lead() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const int j = static_cast<int>(i);
    cs[i] = a[j] + b[j];
  }
  return Poly(std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(cs));
}

Poly operator*(const Poly& a, const Rational& c) {
  if (c.is_zero()) return {};
  Poly r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::shifted_up(int e) const {
  if (e < 0) throw PreconditionError("negative shift");
  if (is_zero()) return {};
  std::vector<Rational> cs(coeffs_.size() + static_cast<std::size_t>(e));
  std::copy(coeffs_.begin(), coeffs_.end(), cs.begin() + e);
  return Poly(std::move(cs));
}

Poly Poly::shifted_down(int e) const {
  if (e < 0) throw PreconditionError("negative shift");
  if (is_zero()) return {};
  if (valuation() < e) throw PreconditionError("polynomial not divisible by the requested power of x");
  return Poly(std::vector<Rational>(coeffs_.begin() + e, coeffs_.end()));
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / lead());
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string term;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (i == 0 || !mag.is_one()) term = mag.to_string();
    if (i > 0) {
      if (!term.empty()) term += "*";
      term += "x";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = Rational(1) / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace dyckhankel
