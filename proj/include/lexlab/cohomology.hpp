#pragma once

// Graded local cohomology of R/I for monomial I, through local duality:
//   h^i(R/I)_j = dim_K Ext^{n-i}_R(R/I, R(-n))_{-j}.
// The Ext modules come from the Taylor resolution of R/I. Two routes are provided:
//   * per total degree: assemble each graded piece of the dualized differentials and
//     take exact ranks (graded_component_rank, ext_dimensions_by_degree);
//   * per multidegree: the Taylor complex is Z^n-graded, every multigraded piece of its
//     dual is a cochain complex on an up-closed family of generator subsets with ±1
//     entries, and only finitely many distinct families occur (ext_series).
// Both compute the same numbers; the second is what the tables use.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexlab/error.hpp"
#include "lexlab/groebner.hpp"
#include "lexlab/hilbert.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/linalg.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

inline constexpr std::size_t kTaylorGeneratorCap = 20;

/// Closed interval of degrees [lo, hi].
struct DegreeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  DegreeWindow() = default;
  DegreeWindow(std::int64_t l, std::int64_t h) : lo(l), hi(h) {
    if (lo > hi) throw InvalidArgument("degree window needs lo <= hi");
  }
  std::size_t width() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
  bool contains(std::int64_t j) const noexcept { return lo <= j && j <= hi; }
  bool operator==(const DegreeWindow&) const = default;
};

/// Default comparison window: hi = deg lcm(gens) + 1, lo = -(hi + n + 2).
inline DegreeWindow default_window(const MonomialIdeal& I) {
  const std::int64_t hi = I.lcm_all().degree() + 1;
  return {-(hi + static_cast<std::int64_t>(I.n()) + 2), hi};
}

/// A map of graded free modules ⊕_c R(-src[c]) -> ⊕_r R(-tgt[r]) whose matrix entries are
/// signed monomials.
struct GradedMap {
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::int64_t coeff;
    Monomial mono;
  };
  std::size_t n = 0;
  std::vector<std::int64_t> source_degrees;  // generator degrees
  std::vector<std::int64_t> target_degrees;
  std::vector<Entry> entries;

  /// The transpose, viewed as a map between the duals Hom(-, R(-twist)).
  GradedMap dual(std::int64_t twist) const {
    GradedMap d;
    d.n = n;
    for (auto g : target_degrees) d.source_degrees.push_back(twist - g);
    for (auto g : source_degrees) d.target_degrees.push_back(twist - g);
    for (const auto& e : entries) d.entries.push_back({e.col, e.row, e.coeff, e.mono});
    return d;
  }
};

/// Rank over Q of the degree-j component of a graded map.
inline std::size_t graded_component_rank(const GradedMap& f, std::int64_t j) {
  auto layout = [&](const std::vector<std::int64_t>& degs) {
    std::vector<std::size_t> offset(degs.size() + 1, 0);
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index(degs.size());
    for (std::size_t c = 0; c < degs.size(); ++c) {
      auto mons = enumerate_monomials(f.n, j - degs[c]);
      for (std::size_t k = 0; k < mons.size(); ++k) index[c].emplace(std::move(mons[k]), k);
      offset[c + 1] = offset[c] + index[c].size();
    }
    return std::pair{offset, index};
  };
  auto [src_off, src_idx] = layout(f.source_degrees);
  auto [tgt_off, tgt_idx] = layout(f.target_degrees);
  IntMatrix m(tgt_off.back(), src_off.back());
  if (m.rows == 0 || m.cols == 0) return 0;
  for (const auto& e : f.entries) {
    for (const auto& [u, k] : src_idx[e.col]) {
      auto it = tgt_idx[e.row].find(u * e.mono);
      if (it == tgt_idx[e.row].end()) throw InternalError("graded map entry has the wrong degree");
      m(tgt_off[e.row] + it->second, src_off[e.col] + k) += e.coeff;
    }
  }
  return rank(m);
}

/// Taylor resolution of R/I. Position k has one free summand per k-subset S of the
/// generators, twisted by -deg lcm(S); subsets are bitmasks.
class TaylorComplex {
 public:
  explicit TaylorComplex(const MonomialIdeal& I) : n_(I.n()), gens_(I.gens()) {
    if (gens_.size() > kTaylorGeneratorCap)
      throw EngineError("Taylor complex is capped at " + std::to_string(kTaylorGeneratorCap) + " generators, got " +
                        std::to_string(gens_.size()));
    const std::size_t mu = gens_.size();
    subsets_.assign(mu + 1, {});
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << mu); ++mask)
      subsets_[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    for (auto& level : subsets_) {
      std::map<std::uint32_t, std::size_t> pos;
      for (std::size_t k = 0; k < level.size(); ++k) pos.emplace(level[k], k);
      position_.push_back(std::move(pos));
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t length() const noexcept { return gens_.size(); }
  std::size_t rank_at(std::size_t k) const { return subsets_.at(k).size(); }
  const std::vector<std::uint32_t>& subsets(std::size_t k) const { return subsets_.at(k); }

  Monomial lcm(std::uint32_t mask) const {
    Monomial l = Monomial::one(n_);
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (mask >> k & 1) l = l.lcm(gens_[k]);
    return l;
  }

  /// Twists at position k, i.e. -deg lcm(S) for each summand.
  std::vector<std::int64_t> shifts(std::size_t k) const {
    std::vector<std::int64_t> out;
    for (auto s : subsets_.at(k)) out.push_back(-lcm(s).degree());
    return out;
  }

  /// d_k : F_k -> F_{k-1}, e_S -> Σ_{t ∈ S} (-1)^{#{s ∈ S : s < t}} (m_S / m_{S-t}) e_{S-t}. 1 <= k <= length.
  GradedMap differential(std::size_t k) const {
    if (k == 0 || k > length()) throw InvalidArgument("Taylor differential index out of range");
    GradedMap d;
    d.n = n_;
    for (auto s : subsets_[k]) d.source_degrees.push_back(lcm(s).degree());
    for (auto s : subsets_[k - 1]) d.target_degrees.push_back(lcm(s).degree());
    for (std::size_t c = 0; c < subsets_[k].size(); ++c) {
      const std::uint32_t S = subsets_[k][c];
      const Monomial mS = lcm(S);
      int below = 0;
      for (std::size_t t = 0; t < gens_.size(); ++t) {
        if (!(S >> t & 1)) continue;
        const std::uint32_t T = S & ~(std::uint32_t{1} << t);
        d.entries.push_back({position_[k - 1].at(T), c, below % 2 ? -1 : 1, mS / lcm(T)});
        ++below;
      }
    }
    return d;
  }

  /// d_{k-1} ∘ d_k = 0 for every k, checked on generators.
  bool composes_to_zero() const {
    for (std::size_t k = 2; k <= length(); ++k) {
      const auto hi = differential(k);
      const auto lo = differential(k - 1);
      std::map<std::pair<std::size_t, std::size_t>, std::map<Monomial, std::int64_t>> acc;
      for (const auto& a : hi.entries)
        for (const auto& b : lo.entries)
          if (b.col == a.row) acc[{b.row, a.col}][a.mono * b.mono] += a.coeff * b.coeff;
      for (const auto& [key, terms] : acc)
        for (const auto& [m, c] : terms)
          if (c != 0) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::vector<std::map<std::uint32_t, std::size_t>> position_;
};

/// dim_K E^i(R/I)_d for d in w, E^i = Ext^i(R/I, R(-n)), via the per-degree ranks of the
/// dualized Taylor complex.
inline std::map<std::int64_t, std::int64_t> ext_dimensions_by_degree(const MonomialIdeal& I, std::size_t i,
                                                                     const DegreeWindow& w) {
  std::map<std::int64_t, std::int64_t> out;
  const TaylorComplex T(I);
  const auto n = static_cast<std::int64_t>(I.n());
  for (std::int64_t d = w.lo; d <= w.hi; ++d) out[d] = 0;
  if (i > T.length()) return out;
  // Dual position k has summands R(deg lcm(S) - n), i.e. generators in degree n - deg lcm(S).
  auto dual_size = [&](std::int64_t d) {
    std::int64_t s = 0;
    for (auto sh : T.shifts(i)) s += monomial_count(I.n(), d - (n + sh));
    return s;
  };
  std::optional<GradedMap> into;   // dual of d_i : C^{i-1} -> C^i
  std::optional<GradedMap> out_of; // dual of d_{i+1} : C^i -> C^{i+1}
  if (i >= 1) into = T.differential(i).dual(n);
  if (i + 1 <= T.length()) out_of = T.differential(i + 1).dual(n);
  for (std::int64_t d = w.lo; d <= w.hi; ++d) {
    std::int64_t v = dual_size(d);
    if (out_of) v -= static_cast<std::int64_t>(graded_component_rank(*out_of, d));
    if (into) v -= static_cast<std::int64_t>(graded_component_rank(*into, d));
    out[d] = v;
  }
  return out;
}

/// Hilbert function of one Ext module E^i(R/I) in closed form: a finite sum of terms
/// mult * #{α ∈ Z^n : |α| = d, α_k fixed off `free`, α_k >= 1 on `free`}.
class ExtSeries {
 public:
  struct Term {
    std::int64_t fixed_sum;
    std::int64_t free_count;
    std::int64_t mult;
  };

  void add(std::int64_t fixed_sum, std::int64_t free_count, std::int64_t mult) {
    if (mult != 0) terms_[{fixed_sum, free_count}] += mult;
  }

  std::int64_t operator()(std::int64_t d) const {
    std::int64_t v = 0;
    for (const auto& [key, mult] : terms_) {
      const auto [s, f] = key;
      std::int64_t count = 0;
      if (f == 0)
        count = d == s ? 1 : 0;
      else if (d - s >= f)
        count = binomial(d - s - 1, f - 1);
      v += mult * count;
    }
    return v;
  }

  bool is_zero() const noexcept { return terms_.empty(); }

  /// Smallest degree with a nonzero value (the module is nonzero iff this exists).
  std::optional<std::int64_t> initial_degree() const {
    std::optional<std::int64_t> best;
    for (const auto& [key, mult] : terms_) {
      const auto [s, f] = key;
      const std::int64_t d = f == 0 ? s : s + f;
      if (!best || d < *best) best = d;
    }
    return best;
  }

  /// Largest degree with a nonzero value, or nullopt if the support is unbounded above
  /// (or empty).
  std::optional<std::int64_t> top_degree() const {
    std::optional<std::int64_t> best;
    for (const auto& [key, mult] : terms_) {
      if (key.second != 0) return std::nullopt;
      if (!best || key.first > *best) best = key.first;
    }
    return best;
  }

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> terms_;
};

namespace detail {

using Family = std::vector<std::uint32_t>;  // sorted bitmasks

/// Cohomology dimensions (by subset size) of the simplex cochain complex restricted to a
/// family of subsets that is up-closed or down-closed in the boolean lattice.
inline std::vector<std::int64_t> restricted_cochain_cohomology(const Family& fam, std::size_t mu) {
  std::vector<std::vector<std::uint32_t>> by_size(mu + 1);
  for (auto s : fam) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  std::vector<std::int64_t> ranks(mu + 1, 0);  // rank of δ_k : size k -> size k+1
  for (std::size_t k = 0; k < mu; ++k) {
    const auto& src = by_size[k];
    const auto& tgt = by_size[k + 1];
    if (src.empty() || tgt.empty()) continue;
    std::unordered_map<std::uint32_t, std::size_t> row;
    for (std::size_t r = 0; r < tgt.size(); ++r) row.emplace(tgt[r], r);
    IntMatrix m(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const std::uint32_t T = src[c];
      int below = 0;
      for (std::size_t t = 0; t < mu; ++t) {
        const std::uint32_t bit = std::uint32_t{1} << t;
        if (T & bit) {
          ++below;
          continue;
        }
        if (auto it = row.find(T | bit); it != row.end()) m(it->second, c) = below % 2 ? -1 : 1;
      }
    }
    ranks[k] = static_cast<std::int64_t>(rank(m));
  }
  std::vector<std::int64_t> h(mu + 1, 0);
  for (std::size_t k = 0; k <= mu; ++k)
    h[k] = static_cast<std::int64_t>(by_size[k].size()) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return h;
}

}  // namespace detail

/// Closed-form Hilbert functions of E^0(R/I), ..., E^n(R/I).
inline std::vector<ExtSeries> ext_series(const MonomialIdeal& I) {
  const std::size_t n = I.n();
  const auto& gens = I.gens();
  const std::size_t mu = gens.size();
  if (mu > kTaylorGeneratorCap)
    throw EngineError("Taylor complex is capped at " + std::to_string(kTaylorGeneratorCap) + " generators, got " +
                      std::to_string(mu));
  std::vector<ExtSeries> out(n + 1);

  // lcm exponents of every subset.
  const std::uint32_t full = (std::uint32_t{1} << mu) - 1;
  std::vector<std::vector<Exponent>> lcm_exp(std::size_t{1} << mu, std::vector<Exponent>(n, 0));
  for (std::uint32_t mask = 1; mask <= full && mu > 0; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const auto& prev = lcm_exp[mask & (mask - 1)];
    auto& cur = lcm_exp[mask];
    for (std::size_t k = 0; k < n; ++k) cur[k] = std::max(prev[k], gens[low][k]);
  }
  const auto top = I.lcm_all();

  // A multidegree α selects the family {S : lcm(S) >= 1 - α}. Coordinate k only matters
  // through b_k = 1 - α_k clamped to 0..top_k; b_k = 0 stands for every α_k >= 1.
  std::vector<Exponent> b(n, 0);
  std::map<detail::Family, std::vector<std::int64_t>> cache;
  while (true) {
    detail::Family fam;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const auto& e = lcm_exp[mask];
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) ok = e[k] >= b[k];
      if (ok) fam.push_back(mask);
      if (mask == full) break;
    }
    if (!fam.empty()) {
      auto it = cache.find(fam);
      if (it == cache.end()) {
        std::vector<std::int64_t> h;
        const std::size_t total = std::size_t{1} << mu;
        if (mu == 0) {
          h = {1};
        } else if (fam.size() == total) {
          h.assign(mu + 1, 0);  // the full simplex is acyclic
        } else if (2 * fam.size() <= total) {
          h = detail::restricted_cochain_cohomology(fam, mu);
        } else {
          // H^k(up-closed F) = H^{k-1}(complement), from the exact full complex.
          detail::Family comp;
          std::size_t p = 0;
          for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (p < fam.size() && fam[p] == mask)
              ++p;
            else
              comp.push_back(mask);
            if (mask == full) break;
          }
          auto hc = detail::restricted_cochain_cohomology(comp, mu);
          h.assign(mu + 1, 0);
          for (std::size_t k = 1; k <= mu; ++k) h[k] = hc[k - 1];
        }
        it = cache.emplace(std::move(fam), std::move(h)).first;
      }
      std::int64_t fixed_sum = 0;
      std::int64_t free_count = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k] == 0)
          ++free_count;
        else
          fixed_sum += 1 - b[k];
      }
      for (std::size_t k = 0; k <= mu && k <= n; ++k) out[k].add(fixed_sum, free_count, it->second[k]);
      for (std::size_t k = n + 1; k <= mu; ++k)
        if (it->second[k] != 0) throw InternalError("Ext beyond index n is nonzero");
    }
    // Next pattern.
    std::size_t k = 0;
    while (k < n && b[k] == top[k]) b[k++] = 0;
    if (k == n) break;
    ++b[k];
  }
  return out;
}

/// dim_K E^i(R/I)_d for d in w.
inline std::map<std::int64_t, std::int64_t> ext_dimensions(const MonomialIdeal& I, std::size_t i,
                                                           const DegreeWindow& w) {
  std::map<std::int64_t, std::int64_t> out;
  if (i > I.n()) {
    for (std::int64_t d = w.lo; d <= w.hi; ++d) out[d] = 0;
    return out;
  }
  const auto series = ext_series(I);
  for (std::int64_t d = w.lo; d <= w.hi; ++d) out[d] = series[i](d);
  return out;
}

/// h^i(R/I)_j for 0 <= i <= n and j in a window.
class LCTable {
 public:
  LCTable() = default;
  LCTable(std::size_t n, DegreeWindow w) : n_(n), window_(w), rows_(n + 1, std::vector<std::int64_t>(w.width(), 0)) {}

  std::size_t n() const noexcept { return n_; }
  const DegreeWindow& window() const noexcept { return window_; }

  std::int64_t at(std::size_t i, std::int64_t j) const {
    if (i > n_) return 0;
    if (!window_.contains(j)) throw InvalidArgument("degree " + std::to_string(j) + " outside the table window");
    return rows_[i][static_cast<std::size_t>(j - window_.lo)];
  }
  void set(std::size_t i, std::int64_t j, std::int64_t v) {
    if (v < 0) throw InternalError("negative local cohomology dimension");
    rows_.at(i).at(static_cast<std::size_t>(j - window_.lo)) = v;
  }

  bool row_is_zero(std::size_t i) const {
    return std::all_of(rows_.at(i).begin(), rows_.at(i).end(), [](std::int64_t v) { return v == 0; });
  }

  bool operator==(const LCTable&) const = default;

 private:
  std::size_t n_ = 0;
  DegreeWindow window_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// First (i, j) in row-major order where two tables over the same window differ.
inline std::optional<std::pair<std::size_t, std::int64_t>> first_mismatch(const LCTable& a, const LCTable& b) {
  if (a.n() != b.n() || !(a.window() == b.window())) throw InvalidArgument("tables are not comparable");
  for (std::size_t i = 0; i <= a.n(); ++i)
    for (std::int64_t j = a.window().lo; j <= a.window().hi; ++j)
      if (a.at(i, j) != b.at(i, j)) return std::pair{i, j};
  return std::nullopt;
}

/// h^i(R/I)_j = dim E^{n-i}(R/I)_{-j}.
inline LCTable local_cohomology_table(const MonomialIdeal& I, const DegreeWindow& w) {
  const auto series = ext_series(I);
  const std::size_t n = I.n();
  LCTable t(n, w);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::int64_t j = w.lo; j <= w.hi; ++j) t.set(i, j, series[n - i](-j));
  return t;
}

inline LCTable local_cohomology_table(const MonomialIdeal& I) { return local_cohomology_table(I, default_window(I)); }

/// Indices i with H^i_m(R/I) = 0, decided exactly from the closed-form Ext series.
inline std::vector<bool> lc_vanishing(const MonomialIdeal& I) {
  const auto series = ext_series(I);
  std::vector<bool> out(I.n() + 1);
  for (std::size_t i = 0; i <= I.n(); ++i) out[i] = series[I.n() - i].is_zero();
  return out;
}

struct DepthDim {
  std::int64_t depth;
  std::int64_t dim;
  std::int64_t witness_degree;  // some j with h^depth(R/I)_j != 0
  bool cohen_macaulay() const noexcept { return depth == dim; }
};

/// depth = min{i : H^i_m(R/I) != 0}; dim from the Hilbert series. The witness degree is
/// the first degree, scanning down from the top of the default window, where h^depth is
/// nonzero.
inline DepthDim depth_and_dim(const MonomialIdeal& I) {
  if (I.is_unit()) throw InvalidArgument("depth_and_dim needs a proper ideal");
  const auto dim = dimension(I);
  const auto series = ext_series(I);
  const std::size_t n = I.n();
  std::optional<std::size_t> depth;
  for (std::size_t i = 0; i <= n && !depth; ++i)
    if (!series[n - i].is_zero()) depth = i;
  if (!depth) throw InternalError("all local cohomology of a nonzero module vanishes");
  const auto& s = series[n - *depth];
  // Extend the window downward until the nonvanishing degree is witnessed.
  std::int64_t j = default_window(I).hi;
  const std::int64_t limit = -*s.initial_degree();
  while (j > limit && s(-j) == 0) --j;
  if (s(-j) == 0) throw InternalError("depth witness not found");
  if (static_cast<std::int64_t>(*depth) > dim) throw InternalError("depth exceeds dimension");
  if (series[n - static_cast<std::size_t>(dim)].is_zero()) throw InternalError("top local cohomology vanishes");
  if (is_strongly_stable(I) && depth_strongly_stable(I) != *depth)
    throw InternalError("depth disagrees with the strongly stable criterion");
  return {static_cast<std::int64_t>(*depth), dim, j};
}

/// The passage to one more variable: for S = R[X],
///   h^i(S/IS)_j = Σ_{h >= j} h^{i-1}(R/I)_{h+1}.
/// The input must vanish in its top column (so nothing is cut off above the window);
/// the output window must lie within [in.lo - 1, in.hi].
inline LCTable extension_recursion(const LCTable& in, const DegreeWindow& w) {
  const auto& iw = in.window();
  for (std::size_t i = 0; i <= in.n(); ++i)
    if (in.at(i, iw.hi) != 0)
      throw InvalidArgument("input table is not closed under the required tail (nonzero at its top degree)");
  if (w.lo < iw.lo - 1 || w.hi > iw.hi) throw InvalidArgument("output window exceeds what the input table covers");
  LCTable out(in.n() + 1, w);
  for (std::size_t i = 1; i <= in.n() + 1; ++i) {
    // Tail sums from the top down.
    std::int64_t tail = 0;
    std::map<std::int64_t, std::int64_t> sums;
    for (std::int64_t h = iw.hi - 1; h >= iw.lo - 1; --h) {
      tail += in.at(i - 1, h + 1);
      sums[h] = tail;
    }
    for (std::int64_t j = w.lo; j <= w.hi; ++j) out.set(i, j, sums.count(j) ? sums[j] : 0);
  }
  return out;
}

inline LCTable extension_recursion(const LCTable& in) {
  return extension_recursion(in, {in.window().lo - 1, in.window().hi});
}

enum class SeqCMVerdict { ConsistentWithSequentiallyCM, NotSequentiallyCM };

inline const char* to_string(SeqCMVerdict v) {
  return v == SeqCMVerdict::NotSequentiallyCM ? "NotSequentiallyCM" : "ConsistentWithSequentiallyCM";
}

struct SeqCMReport {
  SeqCMVerdict verdict;
  MonomialIdeal gin;
  std::optional<std::pair<std::size_t, std::int64_t>> mismatch;  // first (i, j) where tables differ
};

/// Compare the local cohomology of R/I and R/gin(I) on a window. Sequentially CM
/// quotients have equal tables everywhere, so a mismatch refutes it; equality on a
/// finite window is only evidence.
inline SeqCMReport sequentially_cm_verdict(const MonomialIdeal& I, const DegreeWindow& w, const GinOptions& opt = {}) {
  if (I.is_unit()) throw InvalidArgument("sequentially_cm_verdict needs a proper ideal");
  MonomialIdeal g = gin(I, opt);
  auto mismatch = first_mismatch(local_cohomology_table(I, w), local_cohomology_table(g, w));
  return {mismatch ? SeqCMVerdict::NotSequentiallyCM : SeqCMVerdict::ConsistentWithSequentiallyCM, std::move(g),
          mismatch};
}

}  // namespace lexlab
