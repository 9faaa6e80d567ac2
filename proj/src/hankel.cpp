#include "dyckhankel/hankel.hpp"

#include <algorithm>

#include "dyckhankel/errors.hpp"
#include "dyckhankel/genfun.hpp"

namespace dyckhankel {

namespace {

template <typename Number>
Number bareiss(std::vector<Number>& m, int n) {
  auto at = [&](int i, int j) -> Number& { return m[static_cast<std::size_t>(i * n + j)]; };
  int sign = 1;
  Number prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Number(0);
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Number t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        if constexpr (std::is_same_v<Number, mpz_class>) {
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          at(i, j) = std::move(t);
        } else {
          at(i, j) = t / prev;
        }
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Number det = at(n - 1, n - 1);
  return sign < 0 ? Number(-det) : det;
}

std::vector<Rational> hankel_matrix(const TruncSeries& a, int shift, int n) {
  std::vector<Rational> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat[static_cast<std::size_t>(i * n + j)] = a[i + j + shift];
  return mat;
}

std::string describe(const char* label, int n, const Rational& lhs, const Rational& rhs) {
  return std::string(label) + " fails at n=" + std::to_string(n) + ": " + lhs.to_string() +
         " != " + rhs.to_string();
}

}  // namespace

Rational bareiss_determinant(std::vector<Rational> matrix, int n) {
  if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw PreconditionError("matrix size mismatch");
  if (n == 0) return Rational(1);
  const bool integral =
      std::all_of(matrix.begin(), matrix.end(), [](const Rational& r) { return r.is_integer(); });
  if (integral) {
    std::vector<mpz_class> m;
    m.reserve(matrix.size());
    for (const auto& r : matrix) m.push_back(r.num());
    return Rational(bareiss(m, n));
  }
  std::vector<mpq_class> m;
  m.reserve(matrix.size());
  for (const auto& r : matrix) m.push_back(r.raw());
  const mpq_class det = bareiss(m, n);
  return Rational(det.get_num(), det.get_den());
}

int max_hankel_size(const TruncSeries& a, int shift) {
  // order >= 2(n-1) + shift
  return std::max(0, (a.order() - shift) / 2 + 1);
}

Rational hankel_det(const TruncSeries& a, int shift, int n) {
  if (shift < 0 || n < 0) throw PreconditionError("Hankel shift and size must be nonnegative");
  if (n == 0) return Rational(1);
  if (n > max_hankel_size(a, shift))
    throw InsufficientOrder("H_" + std::to_string(n) + "^" + std::to_string(shift) + " needs coefficients through x^" +
                            std::to_string(2 * (n - 1) + shift) + ", series has order " +
                            std::to_string(a.order()));
  return bareiss_determinant(hankel_matrix(a, shift, n), n);
}

std::vector<Rational> hankel_sequence(const TruncSeries& a, int shift, int n_max) {
  if (n_max > max_hankel_size(a, shift))
    throw InsufficientOrder("Hankel sequence to n=" + std::to_string(n_max) + " needs order " +
                            std::to_string(2 * (n_max - 1) + shift) + ", series has order " +
                            std::to_string(a.order()));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 0)));
  for (int n = 1; n <= n_max; ++n) out.push_back(hankel_det(a, shift, n));
  return out;
}

std::string render_sequence(const std::vector<Rational>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i].to_string();
  }
  return out + ")";
}

std::string PeriodReport::star() const {
  if (!confirmed()) return "inconclusive";
  const std::string w = render_sequence(word) + "*";
  if (prefix.empty()) return w;
  std::string out = "(";
  for (const auto& p : prefix) out += p.to_string() + ",";
  return out + w + ")";
}

PeriodReport detect_periodicity(const std::vector<Rational>& seq) {
  PeriodReport rep;
  const int len = static_cast<int>(seq.size());
  for (int pre = 0; pre < len; ++pre) {
    for (int p = 1; 2 * p <= len - pre; ++p) {
      bool ok = true;
      for (int i = pre; i + p < len && ok; ++i) ok = seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(i + p)];
      if (!ok) continue;
      rep.status = PeriodReport::Status::confirmed;
      rep.preperiod = pre;
      rep.period = p;
      rep.prefix.assign(seq.begin(), seq.begin() + pre);
      rep.word.assign(seq.begin() + pre, seq.begin() + pre + p);
      return rep;
    }
  }
  return rep;
}

void CheckReport::record(bool ok, const std::string& what) {
  ++checked;
  if (!ok) {
    passed = false;
    failures.push_back(what);
  }
}

CheckReport check_ab_lemma(const Rational& a, const Rational& b, const TruncSeries& g, int n_max) {
  if (b.is_zero()) throw PreconditionError("b must be nonzero");
  if (g.order() < 2 * n_max - 1) throw InsufficientOrder("G too short for the requested n_max");
  const int order = g.order();
  TruncSeries denom = TruncSeries::constant(1, order) - (TruncSeries::constant(a, order) + g * b).shifted_up(1);
  const TruncSeries f = denom.reciprocal();
  const TruncSeries shifted_g = TruncSeries::constant(a, order) + g * b;
  CheckReport rep{"ab-lemma a=" + a.to_string() + " b=" + b.to_string()};
  for (int n = 1; n <= n_max; ++n) {
    const Rational lhs = hankel_det(f, 0, n);
    const Rational rhs = b.pow(n - 1) * hankel_det(g, 1, n - 1);
    rep.record(lhs == rhs, describe("H_n(F) = b^(n-1) H^1_(n-1)(G)", n, lhs, rhs));
    const Rational lhs1 = hankel_det(f, 1, n);
    const Rational rhs1 = hankel_det(shifted_g, 0, n);
    rep.record(lhs1 == rhs1, describe("H^1_n(F) = H_n(a + bG)", n, lhs1, rhs1));
  }
  return rep;
}

TruncSeries sfraction_series(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
  // Truncating after L levels only disturbs coefficients from x^L on.
  const int levels = order + 1;
  if (static_cast<int>(std::min(a.size(), b.size())) < levels)
    throw InsufficientOrder("continued fraction needs order+1 levels");
  TruncSeries t(order);
  for (int i = levels - 1; i >= 0; --i) {
    TruncSeries denom = TruncSeries::constant(1, order) -
                        (TruncSeries::constant(a[static_cast<std::size_t>(i)], order) + t * b[static_cast<std::size_t>(i)])
                            .shifted_up(1);
    t = denom.reciprocal();
  }
  return t;
}

CheckReport check_sfraction_products(const std::vector<Rational>& a, const std::vector<Rational>& b, int n_max) {
  const int order = 2 * n_max;
  if (static_cast<int>(a.size()) < order + 1 || static_cast<int>(b.size()) < order + 1)
    throw InsufficientOrder("need at least 2*n_max+1 continued-fraction levels");
  bool even_zero = true, odd_zero = true;  // 1-based parity
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    ((i + 1) % 2 == 0 ? even_zero : odd_zero) = false;
  }
  if (!even_zero && !odd_zero) throw PreconditionError("either all even- or all odd-indexed a_i must vanish");
  const TruncSeries f = sfraction_series(a, b, order);
  auto bb = [&](int i) -> const Rational& { return b[static_cast<std::size_t>(i - 1)]; };
  CheckReport rep{"s-fraction products"};
  for (int n = 1; n <= n_max; ++n) {
    if (even_zero) {
      Rational prod(1);
      for (int j = 1; j <= n - 1; ++j) prod *= (bb(2 * j - 1) * bb(2 * j)).pow(n - j);
      const Rational h = hankel_det(f, 0, n);
      rep.record(h == prod, describe("part i", n, h, prod));
    }
    if (odd_zero) {
      Rational prod = bb(1).pow(n);
      for (int j = 1; j <= n - 1; ++j) prod *= (bb(2 * j) * bb(2 * j + 1)).pow(n - j);
      const Rational h = hankel_det(f, 1, n);
      rep.record(h == prod, describe("part ii", n, h, prod));
    }
  }
  return rep;
}

CheckReport check_shift_identities(const HeightSet& s, int n_max) {
  const int order = 2 * n_max;
  auto series = [order](const HeightSet& h) { return dseries_recursive(GFRequest{h, order}); };
  const HeightSet s2 = s.shifted_up(2);
  const TruncSeries d_s = series(s);
  const TruncSeries d_s1 = series(s.shifted_up(1));
  const TruncSeries d_s2 = series(s2);
  const TruncSeries d_1s2 = series(s2.with(1));
  CheckReport rep{"shift identities " + s.to_string()};
  for (int n = 1; n <= n_max; ++n) {
    const Rational a = hankel_det(d_1s2, 0, n);
    const Rational b = hankel_det(d_s2, 0, n);
    const Rational c = hankel_det(d_s, 0, n - 1);
    rep.record(a == b, describe("H_n(D^({1}u(S+2))) = H_n(D^(S+2))", n, a, b));
    rep.record(b == c, describe("H_n(D^(S+2)) = H_(n-1)(D^S)", n, b, c));
    const Rational d = hankel_det(d_s1, 1, n);
    const Rational e = hankel_det(d_s, 0, n);
    rep.record(d == e, describe("H^1_n(D^(S+1)) = H_n(D^S)", n, d, e));
  }
  return rep;
}

}  // namespace dyckhankel
