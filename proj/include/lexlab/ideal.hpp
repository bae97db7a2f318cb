#pragma once

// Monomial ideals held by their minimal generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexlab/error.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

/// A monomial ideal of K[X_1..X_n]. Generators are kept minimal and sorted
/// decreasingly in lex order, so equality of ideals is equality of generator lists.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// Placeholder with no ring; only assignable.
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("ring needs at least one variable");
  }

  /// Minimalize an arbitrary generating set.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : MonomialIdeal(n) {
    for (const auto& g : gens)
      if (g.size() != n) throw InvalidArgument("generator does not belong to ring");
    // Sorting by degree first means a divisor is always seen before its multiples.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return compare(a, b, TermOrder::degrevlex) < 0;
    });
    for (auto& g : gens) {
      bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end(), Descending{TermOrder::lex});
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::one(n)}); }
  /// The homogeneous maximal ideal (X_1, ..., X_n).
  static MonomialIdeal maximal(std::size_t n) {
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, std::move(g));
  }
  /// m^d.
  static MonomialIdeal maximal_power(std::size_t n, std::int64_t d) {
    return MonomialIdeal(n, enumerate_monomials(n, d));
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const noexcept { return !is_unit(); }

  std::int64_t max_generator_degree() const noexcept {
    std::int64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// lcm of all generators (1 for the zero ideal).
  Monomial lcm_all() const {
    Monomial l = Monomial::one(n_);
    for (const auto& g : gens_) l = l.lcm(g);
    return l;
  }

  bool contains(const Monomial& u) const {
    if (u.size() != n_) throw InvalidArgument("monomial does not belong to ring");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
  }

  /// I ⊆ J.
  bool is_subset_of(const MonomialIdeal& J) const {
    check(J);
    return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return J.contains(g); });
  }

  /// Monomials of I in degree d, lex-decreasing.
  std::vector<Monomial> component(std::int64_t d) const {
    std::vector<Monomial> out;
    for (auto& u : enumerate_monomials(n_, d))
      if (contains(u)) out.push_back(std::move(u));
    return out;
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  void check(const MonomialIdeal& o) const {
    if (o.n_ != n_) throw InvalidArgument("ideals from rings of different dimension");
  }

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n() != J.n()) throw InvalidArgument("ideals from rings of different dimension");
  auto g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.n(), std::move(g));
}

/// I ∩ J, generated by pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n() != J.n()) throw InvalidArgument("ideals from rings of different dimension");
  std::vector<Monomial> g;
  g.reserve(I.size() * J.size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a.lcm(b));
  return MonomialIdeal(I.n(), std::move(g));
}

/// I : (v).
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
  std::vector<Monomial> g;
  g.reserve(I.size());
  for (const auto& u : I.gens()) g.push_back(u.truncated_quotient(v));
  return MonomialIdeal(I.n(), std::move(g));
}

/// I : J = ∩_{v ∈ gens(J)} (I : v). Rejects J = 0.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n() != J.n()) throw InvalidArgument("ideals from rings of different dimension");
  if (J.is_zero()) throw InvalidArgument("colon by the zero ideal");
  MonomialIdeal acc = colon(I, J.gens().front());
  for (std::size_t k = 1; k < J.size(); ++k) acc = intersect(acc, colon(I, J.gens()[k]));
  return acc;
}

/// A failed Borel move: X_i u / X_j is not in the ideal (0-based indices).
struct BorelWitness {
  Monomial u;
  std::size_t i;
  std::size_t j;
};

/// Strong stability needs checking only on minimal generators and adjacent moves
/// X_{j-1} u / X_j; every other move is a composite of those.
inline std::optional<BorelWitness> strong_stability_witness(const MonomialIdeal& I) {
  for (const auto& u : I.gens())
    for (std::size_t j = 1; j < I.n(); ++j) {
      if (u[j] == 0) continue;
      for (std::size_t i = j; i-- > 0;)
        if (!I.contains(borel_move(u, i, j))) return BorelWitness{u, i, j};
    }
  return std::nullopt;
}

inline bool is_strongly_stable(const MonomialIdeal& I) { return !strong_stability_witness(I).has_value(); }

namespace detail {

inline MonomialIdeal saturate_by_colon(const MonomialIdeal& I) {
  const auto m = MonomialIdeal::maximal(I.n());
  const std::int64_t cap = 10 * I.max_generator_degree() + 10;
  MonomialIdeal cur = I;
  for (std::int64_t it = 0; it < cap; ++it) {
    MonomialIdeal next = colon(cur, m);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError("saturation did not stabilize within the iteration cap");
}

/// I : X_n^∞, i.e. set the last variable to 1 in each generator.
inline MonomialIdeal saturate_last_variable(const MonomialIdeal& I) {
  std::vector<Monomial> g;
  for (const auto& u : I.gens()) g.push_back(u.with_exponent(I.n() - 1, 0));
  return MonomialIdeal(I.n(), std::move(g));
}

}  // namespace detail

/// I^sat = I : m^∞. Strongly stable inputs also take the last-variable route and
/// both answers must coincide.
inline MonomialIdeal saturate(const MonomialIdeal& I) {
  MonomialIdeal sat = detail::saturate_by_colon(I);
  if (is_strongly_stable(I) && detail::saturate_last_variable(I) != sat)
    throw InternalError("saturation paths disagree on a strongly stable ideal");
  return sat;
}

inline bool is_saturated(const MonomialIdeal& I) { return saturate(I) == I; }

/// Minimal generator counts by degree.
inline std::map<std::int64_t, std::int64_t> graded_generator_counts(const MonomialIdeal& I) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& g : I.gens()) ++out[g.degree()];
  return out;
}

/// For a strongly stable ideal: depth R/I > 0 iff no minimal generator involves X_n.
inline bool depth_positive_stable(const MonomialIdeal& I) {
  if (!is_strongly_stable(I)) throw InvalidArgument("depth_positive_stable needs a strongly stable ideal");
  const std::size_t last = I.n() - 1;
  bool positive = std::none_of(I.gens().begin(), I.gens().end(), [&](const Monomial& g) { return g[last] > 0; });
  if (positive != (detail::saturate_by_colon(I) == I))
    throw InternalError("last-variable depth criterion disagrees with saturation");
  return positive;
}

/// Depth of R/I for strongly stable I: n minus the largest index of a variable
/// occurring in a minimal generator.
inline std::size_t depth_strongly_stable(const MonomialIdeal& I) {
  if (!is_strongly_stable(I)) throw InvalidArgument("depth_strongly_stable needs a strongly stable ideal");
  std::size_t top = 0;
  for (const auto& g : I.gens())
    for (std::size_t i = 0; i < I.n(); ++i)
      if (g[i] > 0) top = std::max(top, i + 1);
  return I.n() - top;
}

/// Same generators in a ring with one more variable.
inline MonomialIdeal extend_ring(const MonomialIdeal& I) {
  std::vector<Monomial> g;
  for (const auto& u : I.gens()) g.push_back(u.extended());
  return MonomialIdeal(I.n() + 1, std::move(g));
}

/// Image modulo X_n, as an ideal of K[X_1..X_{n-1}].
inline MonomialIdeal drop_last_variable(const MonomialIdeal& I) {
  if (I.n() < 2) throw InvalidArgument("cannot drop the only variable");
  std::vector<Monomial> g;
  for (const auto& u : I.gens())
    if (u[I.n() - 1] == 0) g.push_back(u.without_variable(I.n() - 1));
  return MonomialIdeal(I.n() - 1, std::move(g));
}

inline std::string format_ideal(const MonomialIdeal& I, const RingSpec& ring) {
  if (I.n() != ring.n()) throw InvalidArgument("ideal does not belong to ring");
  if (I.is_zero()) return "0";
  std::string s;
  for (const auto& g : I.gens()) {
    if (!s.empty()) s += ", ";
    s += format_monomial(g, ring);
  }
  return s;
}

}  // namespace lexlab
