#include <gtest/gtest.h>

#include <random>

#include "lexlab/groebner.hpp"
#include "lexlab/lex.hpp"
#include "lexlab/parse.hpp"
#include "oracles.hpp"

using namespace lexlab;

namespace {

const RingSpec R2({"x", "y"});
const RingSpec R3({"x", "y", "z"});

std::vector<Polynomial> polys(const char* s, const RingSpec& r) { return parse_ideal(s, r).polynomials; }
MonomialIdeal I3(const char* s) { return parse_monomial_ideal(s, R3); }

const char* kExample = "x^2, x*y, y^2, x*z^2, y*z^2";

// A random homogeneous form of degree d with small coefficients.
Polynomial random_form(std::mt19937_64& rng, std::size_t n, std::int64_t d, std::size_t terms) {
  auto mons = enumerate_monomials(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial p(n);
  for (std::size_t k = 0; k < terms; ++k) p.add_term(mons[pick(rng)], c(rng));
  if (p.is_zero()) p.add_term(mons[0], 1);
  return p;
}

}  // namespace

TEST(Buchberger, Examples) {
  for (auto o : {TermOrder::lex, TermOrder::degrevlex}) {
    auto B = buchberger(polys("x, y", R2), o);
    EXPECT_EQ(initial_ideal(B), parse_monomial_ideal("x, y", R2));
    EXPECT_EQ(B.elements.size(), 2u);
  }
  auto B = buchberger(polys("x^2 - y^2, x*y", R2), TermOrder::degrevlex);
  EXPECT_EQ(initial_ideal(B), parse_monomial_ideal("x^2, x*y, y^3", R2));
  EXPECT_TRUE(is_groebner_basis(B));
  auto U = buchberger(polys("1", R2), TermOrder::degrevlex);
  EXPECT_TRUE(initial_ideal(U).is_unit());
  ASSERT_EQ(U.elements.size(), 1u);
  EXPECT_EQ(initial_ideal(buchberger(polys(kExample, R3), TermOrder::degrevlex)), I3(kExample));
}

TEST(Buchberger, ReducedAndContainsInputs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_form(rng, 3, 2, 3));
    for (auto o : {TermOrder::degrevlex, TermOrder::lex}) {
      auto B = buchberger(gens, o);
      ASSERT_TRUE(is_groebner_basis(B));
      for (const auto& g : gens) ASSERT_TRUE(reduce(g, B).is_zero());
      for (std::size_t a = 0; a < B.elements.size(); ++a) {
        ASSERT_EQ(B.elements[a].terms().at(B.elements[a].leading_monomial(o)), 1);
        for (std::size_t b = 0; b < B.elements.size(); ++b) {
          if (a == b) continue;
          const auto& lb = B.elements[b].leading_monomial(o);
          for (const auto& [m, c] : B.elements[a].terms()) ASSERT_FALSE(lb.divides(m));
        }
      }
    }
  }
}

TEST(Buchberger, HilbertPreservation) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 12; ++t) {
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> dd(1, 3);
    for (int k = 0; k < 3; ++k) gens.push_back(random_form(rng, 3, dd(rng), 3));
    auto in = initial_ideal(buchberger(gens, TermOrder::degrevlex));
    for (std::int64_t d = 0; d <= 5; ++d)
      ASSERT_EQ(ideal_degree_dimension(gens, d), ideal_dimension(in, d)) << d;
  }
}

TEST(Gin, Examples) {
  EXPECT_EQ(gin(I3(kExample)), I3(kExample));
  EXPECT_EQ(gin(I3("x*y, x*z")), I3("x^2, x*y"));
  for (std::int64_t d = 1; d <= 4; ++d) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(d));
    auto f = random_form(rng, 3, d, 4);
    EXPECT_EQ(gin(std::vector<Polynomial>{f}), MonomialIdeal(3, {Monomial::variable(3, 0, static_cast<Exponent>(d))}));
  }
  EXPECT_TRUE(gin(MonomialIdeal::zero(3)).is_zero());
}

TEST(Gin, Options) {
  GinOptions one;
  one.trials = 1;
  EXPECT_THROW((void)gin(I3("x*y"), one), InvalidArgument);
  auto r = gin_detailed(polys("x*y, x*z", R3));
  ASSERT_EQ(r.changes.size(), 3u);
  EXPECT_NE(r.changes[0].seed, r.changes[1].seed);
  EXPECT_EQ(random_coordinate_change(3, 5, 1000).matrix, random_coordinate_change(3, 5, 1000).matrix);
  for (const auto& row : random_coordinate_change(4, 9, 10).matrix)
    for (auto v : row) {
      EXPECT_GE(v, -10);
      EXPECT_LE(v, 10);
    }
}

TEST(Gin, Properties) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 10; ++t) {
    auto I = oracle::random_ideal(rng, 3, 3, 3);
    auto G = gin(I);
    EXPECT_TRUE(is_strongly_stable(G));
    EXPECT_EQ(hilbert_numerator(G), hilbert_numerator(I));
    EXPECT_EQ(gin(G), G);
    EXPECT_EQ(gin(saturate(I)), saturate(G));
    if (exchange_property(I).holds) EXPECT_TRUE(exchange_property(G).holds) << format_ideal(I, R3);
  }
}

TEST(Gin, PolynomialInput) {
  auto G = gin(polys("x^2 - y^2, x*y", R2));
  EXPECT_EQ(G, parse_monomial_ideal("x^2, x*y, y^3", R2));
}
