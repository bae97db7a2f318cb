#pragma once

// Monomials, term orders and sparse rational polynomials over K[X_1..X_n], K = Q.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lexlab/error.hpp"

namespace lexlab {

using Exponent = std::int32_t;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("exponent overflow");
  return r;
}

}  // namespace detail

/// C(n, k) as a 64-bit integer; 0 when k < 0 or k > n. Throws on overflow.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    __int128 t = static_cast<__int128>(r) * (n - k + i) / i;
    if (t > std::numeric_limits<std::int64_t>::max()) throw InvalidArgument("binomial overflow");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

/// Number of monomials of degree d in n variables.
inline std::int64_t monomial_count(std::size_t n, std::int64_t d) {
  if (d < 0) return 0;
  return binomial(d + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n) - 1);
}

/// The polynomial ring K[X_1..X_n]: just the variable count and display names.
class RingSpec {
 public:
  explicit RingSpec(std::size_t n) : RingSpec(default_names(n)) {}

  explicit RingSpec(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& s : names_) {
      if (s.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(s).second) throw InvalidArgument("duplicate variable name '" + s + "'");
    }
  }

  std::size_t n() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// x,y,z,w for n <= 4, else X1..Xn.
  static std::vector<std::string> default_names(std::size_t n) {
    static const char* small[] = {"x", "y", "z", "w"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(n <= 4 ? std::string(small[i]) : "X" + std::to_string(i + 1));
    return out;
  }

  /// Same ring with one extra variable appended (named after the defaults when possible).
  RingSpec extended() const {
    auto names = names_;
    std::string fresh = n() + 1 <= 4 ? default_names(n() + 1).back() : "X" + std::to_string(n() + 1);
    while (std::find(names.begin(), names.end(), fresh) != names.end()) fresh += "'";
    names.push_back(fresh);
    return RingSpec(std::move(names));
  }

  bool operator==(const RingSpec&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector. Plain value type; the ring it lives in is implied by its length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (auto e : exps_)
      if (e < 0) throw InvalidArgument("negative exponent");
  }
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1) {
    std::vector<Exponent> e(n, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::int64_t degree() const noexcept {
    std::int64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// Does *this divide other?
  bool divides(const Monomial& other) const {
    same_ring(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    same_ring(o);
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_add(exps_[i], o.exps_[i]);
    return Monomial(std::move(e), Trusted{});
  }

  /// Exact quotient; `o` must divide *this.
  Monomial operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - o.exps_[i];
    return Monomial(std::move(e), Trusted{});
  }

  /// Exponentwise max(a - b, 0): the generator of (a) : (b).
  Monomial truncated_quotient(const Monomial& o) const {
    same_ring(o);
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max<Exponent>(exps_[i] - o.exps_[i], 0);
    return Monomial(std::move(e), Trusted{});
  }

  Monomial lcm(const Monomial& o) const {
    same_ring(o);
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
    return Monomial(std::move(e), Trusted{});
  }

  Monomial gcd(const Monomial& o) const {
    same_ring(o);
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], o.exps_[i]);
    return Monomial(std::move(e), Trusted{});
  }

  bool coprime(const Monomial& o) const {
    same_ring(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  Monomial with_exponent(std::size_t i, Exponent e) const {
    auto v = exps_;
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  /// Drop the variable at index i, discarding its exponent.
  Monomial without_variable(std::size_t i) const {
    auto v = exps_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return Monomial(std::move(v), Trusted{});
  }

  /// Append a variable with exponent e.
  Monomial extended(Exponent e = 0) const {
    auto v = exps_;
    v.push_back(e);
    return Monomial(std::move(v));
  }

  bool operator==(const Monomial&) const = default;
  /// Canonical container order: lexicographic on exponent vectors.
  auto operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

 private:
  struct Trusted {};
  Monomial(std::vector<Exponent> exps, Trusted) : exps_(std::move(exps)) {}

  void same_ring(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw InvalidArgument("monomials from rings of different dimension");
  }

  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};

/// Variable priority is always X_1 > X_2 > ... > X_n.
enum class TermOrder { lex, degrevlex };

inline const char* to_string(TermOrder o) { return o == TermOrder::lex ? "lex" : "degrevlex"; }

/// Compare two monomials under a term order.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order) {
  if (a.size() != b.size()) throw InvalidArgument("monomials from rings of different dimension");
  const std::size_t n = a.size();
  if (order == TermOrder::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

/// Strict-weak "greater first" predicate, for sorting in decreasing order.
struct Descending {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

/// All degree-d monomials in n variables, strictly decreasing in `order`.
inline std::vector<Monomial> enumerate_monomials(std::size_t n, std::int64_t d,
                                                 TermOrder order = TermOrder::lex) {
  if (n == 0) throw InvalidArgument("ring needs at least one variable");
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(monomial_count(n, d)));
  std::vector<Exponent> e(n, 0);
  // Recursive fill in lex-decreasing order: largest exponent of X_1 first.
  std::function<void(std::size_t, Exponent)> rec = [&](std::size_t i, Exponent left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (Exponent k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, static_cast<Exponent>(d));
  if (order != TermOrder::lex) std::sort(out.begin(), out.end(), Descending{order});
  return out;
}

/// X_i * u / X_j for i < j (0-based indices). Requires X_j | u.
inline Monomial borel_move(const Monomial& u, std::size_t i, std::size_t j) {
  if (i >= j) throw InvalidArgument("borel_move needs i < j");
  if (j >= u.size()) throw InvalidArgument("borel_move index out of range");
  if (u[j] == 0) throw InvalidArgument("borel_move: variable does not divide the monomial");
  auto e = u.exponents();
  e[i] = detail::checked_add(e[i], 1);
  e[j] -= 1;
  return Monomial(std::move(e));
}

/// Render like `x^2*y*z^3`; the unit monomial is `1`.
inline std::string format_monomial(const Monomial& m, const RingSpec& ring) {
  if (m.size() != ring.n()) throw InvalidArgument("monomial does not belong to ring");
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os << ']';
}

/// Sparse polynomial with exact rational coefficients. No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  explicit Polynomial(std::size_t n) : n_(n) {}
  Polynomial(std::size_t n, Terms terms) : n_(n) {
    for (auto& [m, c] : terms) add_term(m, c);
  }
  static Polynomial monomial(const Monomial& m, const mpq_class& c = 1) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const mpq_class& c) {
    if (m.size() != n_) throw InvalidArgument("term does not belong to ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check(o);
    Polynomial r(n_);
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : o.terms_) r.add_term(a * b, ca * cb);
    return r;
  }
  Polynomial scaled(const mpq_class& c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  /// Leading monomial under `order`. Throws on the zero polynomial.
  const Monomial& leading_monomial(TermOrder order) const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading monomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (compare(it->first, best->first, order) > 0) best = it;
    return best->first;
  }

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check(const Polynomial& o) const {
    if (o.n_ != n_) throw InvalidArgument("polynomials from rings of different dimension");
  }

  std::size_t n_;
  Terms terms_;
};

/// Render with terms in decreasing degrevlex order, e.g. `x^2 - 3/2*y^2`.
inline std::string format_polynomial(const Polynomial& p, const RingSpec& ring) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, mpq_class>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first, TermOrder::degrevlex) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << format_monomial(m, ring);
    }
  }
  return os.str();
}

}  // namespace lexlab
