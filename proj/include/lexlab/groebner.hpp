#pragma once

// Buchberger completion over Q and generic initial ideals (degrevlex).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lexlab/error.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/linalg.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

/// Reduced Gröbner basis: monic elements, inter-reduced, sorted by decreasing leading monomial.
struct GBasis {
  std::size_t n = 0;
  TermOrder order = TermOrder::degrevlex;
  std::vector<Polynomial> elements;
};

namespace detail {

struct ZTerm {
  Monomial m;
  mpz_class c;
};

/// Integer polynomial, terms strictly decreasing in the active order.
using ZPoly = std::vector<ZTerm>;

inline void make_primitive(ZPoly& f) {
  if (f.empty()) return;
  mpz_class g = 0;
  for (const auto& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (f.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

inline ZPoly to_zpoly(const Polynomial& p, TermOrder order) {
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly f;
  for (const auto& [m, c] : p.terms()) {
    mpq_class s = c * den;
    f.push_back({m, s.get_num()});
  }
  std::sort(f.begin(), f.end(), [order](const ZTerm& a, const ZTerm& b) { return compare(a.m, b.m, order) > 0; });
  make_primitive(f);
  return f;
}

inline Polynomial to_monic(const ZPoly& f, std::size_t n) {
  Polynomial p(n);
  if (f.empty()) return p;
  mpq_class lead(f.front().c);
  for (const auto& t : f) p.add_term(t.m, mpq_class(t.c) / lead);
  return p;
}

/// a*f - b*u*g, merged in order.
inline ZPoly combine(const mpz_class& a, const ZPoly& f, std::size_t f_from, const mpz_class& b, const Monomial& u,
                     const ZPoly& g, TermOrder order) {
  ZPoly out;
  out.reserve(f.size() - f_from + g.size());
  std::size_t i = f_from, j = 0;
  std::optional<Monomial> gm;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !gm) gm = u * g[j].m;
    std::strong_ordering c = std::strong_ordering::less;
    if (i < f.size() && j < g.size())
      c = compare(f[i].m, *gm, order);
    else if (i < f.size())
      c = std::strong_ordering::greater;
    if (c > 0) {
      out.push_back({f[i].m, a * f[i].c});
      ++i;
    } else if (c < 0) {
      out.push_back({std::move(*gm), -b * g[j].c});
      gm.reset();
      ++j;
    } else {
      mpz_class v = a * f[i].c - b * g[j].c;
      if (v != 0) out.push_back({f[i].m, std::move(v)});
      gm.reset();
      ++i;
      ++j;
    }
  }
  return out;
}

/// Fully reduce f modulo `basis` (fraction-free, content removed after each step).
inline ZPoly normal_form(ZPoly f, const std::vector<ZPoly>& basis, TermOrder order) {
  ZPoly done;
  std::size_t start = 0;
  while (start < f.size()) {
    const ZTerm& lt = f[start];
    const ZPoly* red = nullptr;
    for (const auto& g : basis)
      if (!g.empty() && g.front().m.divides(lt.m)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(lt);
      ++start;
      continue;
    }
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), lt.c.get_mpz_t(), red->front().c.get_mpz_t());
    const mpz_class a = red->front().c / gg;  // scales f and everything already extracted
    const mpz_class b = lt.c / gg;
    const Monomial u = lt.m / red->front().m;
    f = combine(a, f, start, b, u, *red, order);
    start = 0;
    if (a != 1)
      for (auto& t : done) t.c *= a;
    // Content of done ∪ f.
    mpz_class content = 0;
    for (const auto& t : done) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
    for (const auto& t : f) {
      if (content == 1) break;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
    }
    if (content > 1) {
      for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
      for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
    }
  }
  make_primitive(done);
  return done;
}

inline ZPoly s_polynomial(const ZPoly& f, const ZPoly& g, TermOrder order) {
  const Monomial L = f.front().m.lcm(g.front().m);
  mpz_class gg;
  mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  const mpz_class a = g.front().c / gg;
  const mpz_class b = f.front().c / gg;
  ZPoly fu;
  const Monomial uf = L / f.front().m;
  for (const auto& t : f) fu.push_back({t.m * uf, t.c});
  ZPoly s = combine(a, fu, 0, b, L / g.front().m, g, order);
  make_primitive(s);
  return s;
}

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens`. Pairs are processed by
/// smallest lcm degree first, skipping those discarded by Buchberger's coprimality and
/// chain criteria.
inline GBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order) {
  if (gens.empty()) throw InvalidArgument("buchberger needs at least one generator");
  const std::size_t n = gens.front().n();
  for (const auto& g : gens) {
    if (g.n() != n) throw InvalidArgument("generators from rings of different dimension");
    if (g.is_zero()) throw InvalidArgument("zero generator");
  }
  GBasis out{n, order, {}};
  auto unit = [&] {
    out.elements = {Polynomial::monomial(Monomial::one(n))};
    return out;
  };

  std::vector<detail::ZPoly> G;
  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  auto add = [&](detail::ZPoly h) {
    const std::size_t k = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i)
      if (!G[i].empty()) pending.insert({i, k});
  };
  for (const auto& g : gens) {
    auto h = detail::normal_form(detail::to_zpoly(g, order), G, order);
    if (h.empty()) continue;
    if (h.front().m.is_one()) return unit();
    add(std::move(h));
  }

  auto lcm_of = [&](const Pair& p) { return G[p.first].front().m.lcm(G[p.second].front().m); };
  while (!pending.empty()) {
    auto best = pending.begin();
    Monomial best_lcm = lcm_of(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm_of(*it);
      if (compare(l, best_lcm, TermOrder::degrevlex) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    if (G[i].front().m.coprime(G[j].front().m)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || G[k].empty()) continue;
      if (!G[k].front().m.divides(best_lcm)) continue;
      const Pair ik{std::min(i, k), std::max(i, k)};
      const Pair jk{std::min(j, k), std::max(j, k)};
      chain = !pending.count(ik) && !pending.count(jk);
    }
    if (chain) continue;
    auto h = detail::normal_form(detail::s_polynomial(G[i], G[j], order), G, order);
    if (h.empty()) continue;
    if (h.front().m.is_one()) return unit();
    add(std::move(h));
  }

  // Minimalize, then inter-reduce.
  std::vector<detail::ZPoly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < G.size() && !drop; ++b) {
      if (a == b) continue;
      const auto& ma = G[a].front().m;
      const auto& mb = G[b].front().m;
      drop = mb.divides(ma) && (mb != ma || b < a);
    }
    if (!drop) minimal.push_back(G[a]);
  }
  std::vector<detail::ZPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<detail::ZPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    // The leading term survives: no other leading monomial divides it.
    auto full = detail::normal_form(minimal[a], others, order);
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(),
            [order](const detail::ZPoly& x, const detail::ZPoly& y) { return compare(x.front().m, y.front().m, order) > 0; });
  for (const auto& f : reduced) out.elements.push_back(detail::to_monic(f, n));
  return out;
}

/// Reduce p modulo a Gröbner basis; returns the remainder (up to a nonzero scalar).
inline Polynomial reduce(const Polynomial& p, const GBasis& B) {
  std::vector<detail::ZPoly> G;
  for (const auto& g : B.elements) G.push_back(detail::to_zpoly(g, B.order));
  return detail::to_monic(detail::normal_form(detail::to_zpoly(p, B.order), G, B.order), p.n());
}

/// Every S-pair of the basis reduces to zero.
inline bool is_groebner_basis(const GBasis& B) {
  std::vector<detail::ZPoly> G;
  for (const auto& g : B.elements) G.push_back(detail::to_zpoly(g, B.order));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!detail::normal_form(detail::s_polynomial(G[i], G[j], B.order), G, B.order).empty()) return false;
  return true;
}

inline MonomialIdeal initial_ideal(const GBasis& B) {
  std::vector<Monomial> lead;
  for (const auto& g : B.elements) lead.push_back(g.leading_monomial(B.order));
  return MonomialIdeal(B.n, std::move(lead));
}

/// dim_K I_d for the ideal generated by homogeneous polynomials, by exact rank of the
/// span of all monomial multiples in degree d.
inline std::int64_t ideal_degree_dimension(const std::vector<Polynomial>& gens, std::int64_t d) {
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().n();
  const auto basis = enumerate_monomials(n, d);
  std::map<Monomial, std::size_t> col;
  for (std::size_t k = 0; k < basis.size(); ++k) col.emplace(basis[k], k);
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw InvalidArgument("ideal_degree_dimension needs homogeneous generators");
    if (g.is_zero() || g.degree() > d) continue;
    const auto zg = detail::to_zpoly(g, TermOrder::lex);
    for (const auto& u : enumerate_monomials(n, d - g.degree())) {
      std::vector<mpz_class> row(basis.size(), 0);
      for (const auto& t : zg) row[col.at(t.m * u)] = t.c;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(rank(std::move(rows)));
}

/// X_i -> Σ_j matrix[i][j] X_j.
struct CoordinateChange {
  std::vector<std::vector<std::int64_t>> matrix;
  std::uint64_t seed = 0;

  Polynomial apply(const Polynomial& p) const {
    const std::size_t n = matrix.size();
    if (p.n() != n) throw InvalidArgument("coordinate change and polynomial disagree on n");
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial l(n);
      for (std::size_t j = 0; j < n; ++j) l.add_term(Monomial::variable(n, j), mpq_class(matrix[i][j]));
      forms.push_back(std::move(l));
    }
    std::map<std::pair<std::size_t, Exponent>, Polynomial> powers;
    auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
      auto key = std::pair{i, e};
      if (auto it = powers.find(key); it != powers.end()) return it->second;
      Polynomial r = Polynomial::monomial(Monomial::one(n));
      for (Exponent k = 0; k < e; ++k) r = r * forms[i];
      return powers.emplace(key, std::move(r)).first->second;
    };
    Polynomial out(n);
    for (const auto& [m, c] : p.terms()) {
      Polynomial t = Polynomial::monomial(Monomial::one(n), c);
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] > 0) t = t * power(i, m[i]);
      out = out + t;
    }
    return out;
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Dense random invertible integer matrix with entries uniform in [-bound, bound].
inline CoordinateChange random_coordinate_change(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("coordinate bound must be positive");
  std::uint64_t state = seed;
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  auto draw = [&] {
    std::uint64_t r;
    do r = detail::splitmix64(state);
    while (r >= limit);
    return static_cast<std::int64_t>(r % span) - bound;
  };
  while (true) {
    CoordinateChange c{std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n)), seed};
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = c.matrix[i][j] = draw();
    if (rank(m) == n) return c;
  }
}

/// Seed for trial t of a gin computation started from `seed`.
inline std::uint64_t gin_trial_seed(std::uint64_t seed, std::size_t trial) {
  std::uint64_t s = seed ^ (0xa0761d6478bd642full * (trial + 1));
  return detail::splitmix64(s);
}

struct GinOptions {
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  std::int64_t bound = 1000;
};

struct GinResult {
  MonomialIdeal ideal;
  std::vector<CoordinateChange> changes;
};

/// Generic initial ideal in degrevlex: independent random coordinate changes must all
/// produce the same initial ideal.
inline GinResult gin_detailed(const std::vector<Polynomial>& gens, const GinOptions& opt = {}) {
  if (opt.trials < 2) throw InvalidArgument("gin needs at least 2 trials");
  if (gens.empty()) throw InvalidArgument("gin needs at least one generator");
  const std::size_t n = gens.front().n();
  std::optional<MonomialIdeal> common;
  std::vector<CoordinateChange> changes;
  std::string seeds;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    auto change = random_coordinate_change(n, gin_trial_seed(opt.seed, t), opt.bound);
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(change.apply(g));
    auto in = initial_ideal(buchberger(moved, TermOrder::degrevlex));
    seeds += (seeds.empty() ? "" : ", ") + std::to_string(change.seed);
    changes.push_back(std::move(change));
    if (!common) {
      common = std::move(in);
    } else if (*common != in) {
      throw EngineError("unlucky coordinates: gin trials disagree (trial seeds " + seeds + ")");
    }
  }
  if (!is_strongly_stable(*common)) throw InternalError("gin is not strongly stable");
  return {std::move(*common), std::move(changes)};
}

inline MonomialIdeal gin(const std::vector<Polynomial>& gens, const GinOptions& opt = {}) {
  return gin_detailed(gens, opt).ideal;
}

inline std::vector<Polynomial> as_polynomials(const MonomialIdeal& I) {
  std::vector<Polynomial> out;
  for (const auto& g : I.gens()) out.push_back(Polynomial::monomial(g));
  return out;
}

inline MonomialIdeal gin(const MonomialIdeal& I, const GinOptions& opt = {}) {
  if (I.is_zero()) return I;
  return gin(as_polynomials(I), opt);
}

}  // namespace lexlab
