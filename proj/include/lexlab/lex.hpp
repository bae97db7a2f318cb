#pragma once

// Lex-segment ideals, Gotzmann representations and saturated lex ideals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lexlab/error.hpp"
#include "lexlab/hilbert.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/ring.hpp"

namespace lexlab {

namespace detail {

/// Grow a lex-segment ideal degree by degree so that dim (R/L)_d = target(d) for
/// 1 <= d <= top. Each degree checks that the shadow of the previous segment is an
/// initial lex segment no longer than the new one.
inline std::vector<Monomial> grow_lex_segments(std::size_t n, std::int64_t top,
                                               const std::function<std::int64_t(std::int64_t)>& target,
                                               std::vector<Monomial> gens = {}) {
  MonomialIdeal current(n, gens);
  for (std::int64_t d = 1; d <= top; ++d) {
    const auto mons = enumerate_monomials(n, d, TermOrder::lex);
    const std::int64_t want = static_cast<std::int64_t>(mons.size()) - target(d);
    if (want < 0) throw InvalidArgument("Hilbert function exceeds the number of monomials in degree " + std::to_string(d));
    std::size_t have = 0;
    while (have < mons.size() && current.contains(mons[have])) ++have;
    for (std::size_t k = have; k < mons.size(); ++k)
      if (current.contains(mons[k])) throw InternalError("shadow of a lex segment is not a lex segment");
    if (static_cast<std::int64_t>(have) > want)
      throw InvalidArgument("Hilbert function violates Macaulay's bound in degree " + std::to_string(d));
    if (static_cast<std::int64_t>(have) == want) continue;
    for (std::int64_t k = static_cast<std::int64_t>(have); k < want; ++k) gens.push_back(mons[static_cast<std::size_t>(k)]);
    current = MonomialIdeal(n, gens);
  }
  return gens;
}

}  // namespace detail

/// v_i = #{j : n - a_j - 1 = i}, i = 1..h; h is the largest index with v_i != 0.
struct GotzmannData {
  std::size_t n = 0;
  std::vector<std::int64_t> a;  // a_1 >= a_2 >= ... >= a_l >= 0
  std::vector<std::int64_t> v;  // v[0] is v_1
  std::size_t h = 0;
  std::size_t l = 0;

  /// Σ_i C(X + a_i - (i-1), a_i).
  QPolynomial polynomial() const {
    QPolynomial p;
    for (std::size_t i = 0; i < a.size(); ++i)
      p = p + QPolynomial::binomial(a[i] - static_cast<std::int64_t>(i), a[i]);
    return p;
  }

  bool operator==(const GotzmannData&) const = default;
};

/// Build the v-vector data for a non-increasing exponent list in n variables.
inline GotzmannData gotzmann_from_exponents(std::vector<std::int64_t> a, std::size_t n) {
  GotzmannData g;
  g.n = n;
  g.l = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || (i > 0 && a[i] > a[i - 1])) throw InvalidArgument("Gotzmann exponents must be non-increasing and >= 0");
    if (a[i] > static_cast<std::int64_t>(n) - 2) throw InvalidArgument("Gotzmann exponent exceeds n - 2");
  }
  g.v.assign(n > 1 ? n - 1 : 0, 0);
  for (auto aj : a) ++g.v[static_cast<std::size_t>(static_cast<std::int64_t>(n) - aj - 2)];
  g.h = 0;
  for (std::size_t i = 0; i < g.v.size(); ++i)
    if (g.v[i] != 0) g.h = i + 1;
  g.v.resize(g.h);
  g.a = std::move(a);
  return g;
}

/// Recover v_1..v_h (with v_h > 0) as Gotzmann data in n variables.
inline GotzmannData gotzmann_from_v(const std::vector<std::int64_t>& v, std::size_t n) {
  if (v.size() > n - 1) throw InvalidArgument("v-vector longer than n - 1");
  if (!v.empty() && v.back() <= 0) throw InvalidArgument("last v entry must be positive");
  std::vector<std::int64_t> a;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw InvalidArgument("negative v entry");
    // v_i counts the a_j equal to n - 1 - i (1-based i); exponents come out non-increasing.
    a.insert(a.end(), static_cast<std::size_t>(v[i]), static_cast<std::int64_t>(n) - 2 - static_cast<std::int64_t>(i));
  }
  return gotzmann_from_exponents(std::move(a), n);
}

/// Greedy Gotzmann representation of a Hilbert polynomial. Rejects deg P > n - 2 and
/// polynomials that are not Hilbert polynomials of saturated ideals.
inline GotzmannData gotzmann_representation(const QPolynomial& P, std::size_t n) {
  if (P.degree() > static_cast<std::int64_t>(n) - 2)
    throw InvalidArgument("Hilbert polynomial of degree " + std::to_string(P.degree()) +
                          " has no v-vector in " + std::to_string(n) + " variables");
  const std::string bad = "not a Gotzmann-representable Hilbert polynomial: " + P.to_string();
  std::vector<std::int64_t> a;
  QPolynomial rest = P;
  while (!rest.is_zero()) {
    const std::int64_t deg = rest.degree();
    mpq_class lead = rest.leading();
    for (std::int64_t k = 2; k <= deg; ++k) lead *= k;
    if (lead <= 0 || lead.get_den() != 1) throw InvalidArgument(bad);
    if (!a.empty() && deg > a.back()) throw InvalidArgument(bad);
    if (a.size() > 1'000'000) throw EngineError("Gotzmann representation too long");
    const auto i = static_cast<std::int64_t>(a.size());
    rest = rest - QPolynomial::binomial(deg - i, deg);
    a.push_back(deg);
  }
  return gotzmann_from_exponents(std::move(a), n);
}

/// Minimal generators of the saturated lex ideal with this v-vector:
/// X_1^{v_1+1}, X_1^{v_1} X_2^{v_2+1}, ..., X_1^{v_1}...X_{h-1}^{v_{h-1}} X_h^{v_h}.
/// h = 0 (Hilbert polynomial 0) gives the unit ideal.
inline MonomialIdeal saturated_lex_generators(const GotzmannData& g) {
  const std::size_t n = g.n;
  if (g.h == 0) return MonomialIdeal::unit(n);
  if (g.v.size() != g.h || g.v.back() <= 0 || g.h > n - 1) throw InvalidArgument("malformed v-vector");
  std::vector<Monomial> gens;
  std::vector<Exponent> prefix(n, 0);
  for (std::size_t i = 0; i < g.h; ++i) {
    auto e = prefix;
    e[i] = static_cast<Exponent>(g.v[i] + (i + 1 < g.h ? 1 : 0));
    gens.emplace_back(e);
    prefix[i] = static_cast<Exponent>(g.v[i]);
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Cohomological indices i (0..n) where H^i_m(R/L) vanishes, L the saturated lex ideal
/// of g: i = 0 and i = n always; otherwise iff v_{n-i} = 0 or n - i > h.
inline std::set<std::size_t> predict_lc_vanishing(const GotzmannData& g) {
  std::set<std::size_t> out{0, g.n};
  for (std::size_t i = 1; i < g.n; ++i) {
    const std::size_t k = g.n - i;
    if (k > g.h || g.v[k - 1] == 0) out.insert(i);
  }
  return out;
}

/// The lex-segment ideal with a prescribed Hilbert function for degrees 0..values.size()-1.
/// Generators are only discovered up to the last given degree.
inline MonomialIdeal lex_ideal_from_values(std::size_t n, const std::vector<std::int64_t>& values) {
  if (values.empty()) throw InvalidArgument("empty Hilbert function");
  if (auto bad = first_macaulay_violation(values, n); bad >= 0)
    throw InvalidArgument("Hilbert function violates Macaulay's bound in degree " + std::to_string(bad));
  if (values[0] == 0) return MonomialIdeal::unit(n);
  const auto top = static_cast<std::int64_t>(values.size()) - 1;
  auto gens = detail::grow_lex_segments(n, top, [&](std::int64_t d) { return values[static_cast<std::size_t>(d)]; });
  return MonomialIdeal(n, std::move(gens));
}

/// The unique lex-segment ideal with the Hilbert function of R/I.
inline MonomialIdeal lex_ideal(const MonomialIdeal& I) {
  if (I.is_unit()) throw InvalidArgument("lex_ideal needs a proper ideal");
  if (I.is_zero()) return I;
  const std::size_t n = I.n();
  const IntPoly N = hilbert_numerator(I);
  const HilbertData hd = hilbert_series(I);
  const std::int64_t gotzmann_number = static_cast<std::int64_t>(gotzmann_representation(hd.polynomial, n).l);
  // Past d_star the lex ideal needs no new generators: its regularity is bounded by the
  // Gotzmann number once the Hilbert function has become polynomial.
  const std::int64_t d_star = std::max({gotzmann_number, hd.d0 - 1, I.max_generator_degree()}) + 1;
  auto hf = [&](std::int64_t d) { return hilbert_value(N, n, d); };
  auto gens = detail::grow_lex_segments(n, d_star, hf);
  const std::size_t found = gens.size();
  gens = detail::grow_lex_segments(n, d_star + 2, hf, std::move(gens));
  if (gens.size() != found) throw InternalError("lex ideal gained generators past the stopping degree");
  MonomialIdeal L(n, std::move(gens));
  if (hilbert_numerator(L) != N) throw InternalError("lex ideal has a different Hilbert function");
  return L;
}

/// Same minimal generator count in every degree as the lex ideal.
inline bool is_gotzmann(const MonomialIdeal& I) {
  return graded_generator_counts(I) == graded_generator_counts(lex_ideal(I));
}

struct ExchangeReport {
  bool holds = false;
  MonomialIdeal left;   // (I^sat)^lex
  MonomialIdeal right;  // (I^lex)^sat
  bool operator==(const ExchangeReport&) const = default;
};

/// Does (I^sat)^lex = (I^lex)^sat hold?
inline ExchangeReport exchange_property(const MonomialIdeal& I) {
  if (I.is_unit()) throw InvalidArgument("exchange_property needs a proper ideal");
  const MonomialIdeal sat = saturate(I);
  // A proper ideal can saturate to R (m-primary case); its lex ideal is R as well.
  MonomialIdeal left = sat.is_unit() ? sat : lex_ideal(sat);
  MonomialIdeal right = saturate(lex_ideal(I));
  const bool holds = left == right;
  return {holds, std::move(left), std::move(right)};
}

}  // namespace lexlab
