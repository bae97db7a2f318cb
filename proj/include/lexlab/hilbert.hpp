#pragma once

// Hilbert functions, series and polynomials of R/I for monomial I, plus
// Macaulay's binomial calculus.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "lexlab/error.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

/// Dense integer polynomial in t, coefficient of t^k at index k. No trailing zeros.
using IntPoly = std::vector<std::int64_t>;

/// Dense polynomial in X with rational coefficients, coefficient of X^k at index k.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPolynomial constant(const mpq_class& a) { return QPolynomial({a}); }

  /// C(X + shift, k) = (X+shift)(X+shift-1)...(X+shift-k+1) / k!.
  static QPolynomial binomial(std::int64_t shift, std::int64_t k) {
    QPolynomial r = constant(1);
    for (std::int64_t i = 0; i < k; ++i) r = r * QPolynomial({mpq_class(shift - i), mpq_class(1)});
    mpq_class fact = 1;
    for (std::int64_t i = 2; i <= k; ++i) fact *= i;
    return r.scaled(1 / fact);
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  mpq_class operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  QPolynomial operator+(const QPolynomial& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPolynomial(std::move(r));
  }
  QPolynomial operator-(const QPolynomial& o) const { return *this + o.scaled(-1); }
  QPolynomial operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPolynomial(std::move(r));
  }
  QPolynomial scaled(const mpq_class& a) const {
    auto r = c_;
    for (auto& x : r) x *= a;
    return QPolynomial(std::move(r));
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

  /// e.g. `2*X + 2`, `1/2*X^2 + 3/2*X + 1`, `0`.
  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const mpq_class& a = c_[i];
      if (a == 0) continue;
      mpq_class m = abs(a);
      if (s.empty()) {
        if (a < 0) s += "-";
      } else {
        s += a < 0 ? " - " : " + ";
      }
      if (i == 0) {
        s += m.get_str();
      } else {
        if (m != 1) s += m.get_str() + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    for (auto& x : c_) x.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

namespace detail {

inline std::int64_t checked_add64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw EngineError("integer overflow in Hilbert computation");
  return r;
}

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift, std::int64_t sign = 1) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] = checked_add64(acc[i + shift], sign * p[i]);
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add64(r[i + j], a[i] * b[j]);
  trim(r);
  return r;
}

struct IdealHash {
  std::size_t operator()(const std::vector<Monomial>& g) const noexcept {
    std::size_t h = g.size();
    MonomialHash mh;
    for (const auto& m : g) h = h * 1000003u ^ mh(m);
    return h;
  }
};

using NumeratorMemo = std::unordered_map<std::vector<Monomial>, IntPoly, IdealHash>;

inline bool pairwise_coprime(const std::vector<Monomial>& g) {
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (!g[a].coprime(g[b])) return false;
  return true;
}

// N(I) = N(I + (x)) + t * N(I : x), pivoting on the variable shared by the most generators.
inline IntPoly pivot_numerator(const MonomialIdeal& I, NumeratorMemo& memo) {
  if (I.is_zero()) return {1};
  if (I.is_unit()) return {};
  if (pairwise_coprime(I.gens())) {
    IntPoly r{1};
    for (const auto& g : I.gens()) {
      IntPoly f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      r = multiply(r, f);
    }
    return r;
  }
  if (auto it = memo.find(I.gens()); it != memo.end()) return it->second;

  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < I.n(); ++i) {
    std::size_t c = 0;
    for (const auto& g : I.gens())
      if (g[i] > 0) ++c;
    if (c > best_count) {
      best_count = c;
      best = i;
    }
  }
  const Monomial x = Monomial::variable(I.n(), best);
  IntPoly r = pivot_numerator(ideal_sum(I, MonomialIdeal(I.n(), {x})), memo);
  add_shifted(r, pivot_numerator(colon(I, x), memo), 1);
  trim(r);
  memo.emplace(I.gens(), r);
  return r;
}

}  // namespace detail

enum class HilbertStrategy { pivot, inclusion_exclusion };

/// Numerator N(t) with HS(R/I, t) = N(t) / (1 - t)^n.
inline IntPoly hilbert_numerator(const MonomialIdeal& I, HilbertStrategy strategy = HilbertStrategy::pivot) {
  if (strategy == HilbertStrategy::pivot) {
    detail::NumeratorMemo memo;
    return detail::pivot_numerator(I, memo);
  }
  const std::size_t mu = I.size();
  if (mu > 24) throw EngineError("inclusion-exclusion is capped at 24 generators");
  IntPoly r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mu); ++mask) {
    Monomial l = Monomial::one(I.n());
    int bits = 0;
    for (std::size_t k = 0; k < mu; ++k)
      if (mask >> k & 1) {
        l = l.lcm(I.gens()[k]);
        ++bits;
      }
    auto deg = static_cast<std::size_t>(l.degree());
    if (r.size() <= deg) r.resize(deg + 1, 0);
    r[deg] += (bits % 2 ? -1 : 1);
  }
  detail::trim(r);
  return r;
}

/// dim_K (R/I)_d from a numerator.
inline std::int64_t hilbert_value(const IntPoly& numerator, std::size_t n, std::int64_t d) {
  if (d < 0) return 0;
  std::int64_t v = 0;
  for (std::size_t k = 0; k < numerator.size() && static_cast<std::int64_t>(k) <= d; ++k)
    if (numerator[k] != 0)
      v = detail::checked_add64(v, numerator[k] * monomial_count(n, d - static_cast<std::int64_t>(k)));
  return v;
}

inline std::int64_t hilbert_function(const MonomialIdeal& I, std::int64_t d,
                                     HilbertStrategy strategy = HilbertStrategy::pivot) {
  if (d < 0) throw InvalidArgument("negative degree");
  return hilbert_value(hilbert_numerator(I, strategy), I.n(), d);
}

/// dim_K I_d.
inline std::int64_t ideal_dimension(const MonomialIdeal& I, std::int64_t d) {
  return monomial_count(I.n(), d) - hilbert_function(I, d);
}

struct HilbertData {
  std::vector<std::int64_t> values;  // degrees 0..D
  IntPoly numerator;
  QPolynomial polynomial;
  std::int64_t d0 = 0;  // P(d) = H(d) for every d >= d0

  bool operator==(const HilbertData&) const = default;
};

/// Interpolate the Hilbert polynomial from n exact values past deg N(t), by Newton's
/// forward differences.
inline QPolynomial hilbert_polynomial(const IntPoly& numerator, std::size_t n) {
  const auto start = static_cast<std::int64_t>(numerator.size());
  std::vector<mpq_class> diffs;
  for (std::size_t k = 0; k < n; ++k)
    diffs.emplace_back(hilbert_value(numerator, n, start + static_cast<std::int64_t>(k)));
  // diffs[k] <- Δ^k H(start)
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) diffs[i] = diffs[i] - diffs[i - 1];
  QPolynomial p;
  for (std::size_t k = 0; k < n; ++k)
    if (diffs[k] != 0) p = p + QPolynomial::binomial(-start, static_cast<std::int64_t>(k)).scaled(diffs[k]);
  return p;
}

inline HilbertData hilbert_series(const MonomialIdeal& I, std::int64_t window) {
  if (window < I.max_generator_degree() + static_cast<std::int64_t>(I.n()))
    throw InvalidArgument("Hilbert window must reach max generator degree + n");
  HilbertData h;
  h.numerator = hilbert_numerator(I);
  for (std::int64_t d = 0; d <= window; ++d) h.values.push_back(hilbert_value(h.numerator, I.n(), d));
  h.polynomial = hilbert_polynomial(h.numerator, I.n());
  std::int64_t d0 = static_cast<std::int64_t>(h.numerator.size());
  while (d0 > 0 && h.polynomial(d0 - 1) == hilbert_value(h.numerator, I.n(), d0 - 1)) --d0;
  h.d0 = d0;
  return h;
}

inline HilbertData hilbert_series(const MonomialIdeal& I) {
  return hilbert_series(I, I.max_generator_degree() + static_cast<std::int64_t>(I.n()));
}

struct DimensionData {
  std::int64_t dimension;
  std::int64_t multiplicity;
};

/// Krull dimension and multiplicity of R/I read off the numerator: the pole order of
/// N(t)/(1-t)^n at t = 1 and the value there of N(t)/(1-t)^(n-dim).
inline DimensionData dimension_and_multiplicity(const IntPoly& numerator, std::size_t n) {
  IntPoly q = numerator;
  if (q.empty()) throw InvalidArgument("the unit ideal has no dimension");
  std::int64_t k = 0;
  auto at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s = detail::checked_add64(s, c);
    return s;
  };
  while (at_one(q) == 0) {
    // Divide by (1 - t): prefix sums of coefficients.
    IntPoly r(q.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) r[i] = acc = detail::checked_add64(acc, q[i]);
    q = std::move(r);
    ++k;
  }
  const std::int64_t e = at_one(q);
  if (e <= 0 || k > static_cast<std::int64_t>(n)) throw InternalError("Hilbert numerator is not of a cyclic module");
  return {static_cast<std::int64_t>(n) - k, e};
}

inline std::int64_t dimension(const MonomialIdeal& I) {
  return dimension_and_multiplicity(hilbert_numerator(I), I.n()).dimension;
}
inline std::int64_t multiplicity(const MonomialIdeal& I) {
  return dimension_and_multiplicity(hilbert_numerator(I), I.n()).multiplicity;
}

/// a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_δ, δ), k_d > ... > k_δ >= δ >= 1.
struct MacaulayRep {
  std::int64_t degree = 0;
  std::vector<std::int64_t> tops;  // k_d, k_{d-1}, ... in that order

  std::int64_t value() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) s += binomial(tops[i], degree - static_cast<std::int64_t>(i));
    return s;
  }
  bool operator==(const MacaulayRep&) const = default;
};

inline MacaulayRep macaulay_rep(std::int64_t a, std::int64_t d) {
  if (a < 0 || d < 1) throw InvalidArgument("macaulay_rep needs a >= 0 and d >= 1");
  MacaulayRep rep{d, {}};
  for (std::int64_t i = d; i >= 1 && a > 0; --i) {
    std::int64_t k = i;
    while (binomial(k + 1, i) <= a) ++k;
    rep.tops.push_back(k);
    a -= binomial(k, i);
  }
  return rep;
}

/// a^<d>: the largest possible value in degree d+1 after value a in degree d.
inline std::int64_t macaulay_growth(std::int64_t a, std::int64_t d) {
  const auto rep = macaulay_rep(a, d);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rep.tops.size(); ++i) {
    const std::int64_t deg = d - static_cast<std::int64_t>(i);
    s = detail::checked_add64(s, binomial(rep.tops[i] + 1, deg + 1));
  }
  return s;
}

/// Is `values` (degrees 0, 1, ...) a prefix of the Hilbert function of some R/I?
/// Returns the first offending degree, or -1 when admissible.
inline std::int64_t first_macaulay_violation(const std::vector<std::int64_t>& values, std::size_t n) {
  for (std::size_t d = 0; d < values.size(); ++d) {
    const auto v = values[d];
    if (v < 0) return static_cast<std::int64_t>(d);
    if (d == 0) {
      if (v > 1) return 0;
    } else if (d == 1) {
      if (v > static_cast<std::int64_t>(n) || v > static_cast<std::int64_t>(n) * values[0]) return 1;
    } else if (v > macaulay_growth(values[d - 1], static_cast<std::int64_t>(d) - 1)) {
      return static_cast<std::int64_t>(d);
    }
  }
  return -1;
}

}  // namespace lexlab
