#include <gtest/gtest.h>

#include <random>

#include "lexlab/ideal.hpp"
#include "lexlab/parse.hpp"
#include "oracles.hpp"

using namespace lexlab;

namespace {

const RingSpec R3({"x", "y", "z"});
const RingSpec R4({"x", "y", "z", "w"});

MonomialIdeal I3(const char* s) { return parse_monomial_ideal(s, R3); }
MonomialIdeal I4(const char* s) { return parse_monomial_ideal(s, R4); }
Monomial m3(const char* s) { return parse_monomial(s, R3); }

const char* kExample = "x^2, x*y, y^2, x*z^2, y*z^2";

}  // namespace

TEST(Minimalize, Examples) {
  EXPECT_EQ(I3("x^2, x^2*y, x*y"), I3("x^2, x*y"));
  EXPECT_TRUE(minimalize(3, {}).is_zero());
  EXPECT_EQ(I3("x^2, x*y, y^2, x, y"), I3("x, y"));
  EXPECT_EQ(I3("x, y").gens().size(), 2u);
}

TEST(Minimalize, SortedLexDecreasing) {
  auto I = I3("z^3, x*y, y^2, x^2");
  for (std::size_t k = 1; k < I.gens().size(); ++k) EXPECT_TRUE(compare(I.gens()[k - 1], I.gens()[k], TermOrder::lex) > 0);
}

TEST(Contains, Examples) {
  auto I = I3(kExample);
  EXPECT_FALSE(I.contains(m3("x*z")));
  EXPECT_TRUE(I.contains(m3("x*y*z")));
  auto Z = MonomialIdeal::zero(3);
  for (const auto& u : enumerate_monomials(3, 3)) EXPECT_FALSE(Z.contains(u));
}

TEST(Colon, Examples) {
  EXPECT_EQ(colon(I3("x^2, x*y"), m3("x")), I3("x, y"));
  EXPECT_EQ(colon(I3(kExample), MonomialIdeal::unit(3)), I3(kExample));
  EXPECT_THROW((void)colon(I3(kExample), MonomialIdeal::zero(3)), InvalidArgument);
  auto J = I3(kExample);
  for (int k = 0; k < 5; ++k) J = colon(J, MonomialIdeal::maximal(3));
  EXPECT_EQ(J, I3("x, y"));
}

TEST(Colon, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    auto I = oracle::random_ideal(rng, 3, 5, 4);
    auto J = oracle::random_ideal(rng, 3, 2, 2);
    auto C = colon(I, J);
    for (std::int64_t d = 0; d <= 6; ++d)
      for (const auto& u : oracle::exponent_vectors(3, d)) {
        bool want = true;
        for (const auto& v : J.gens()) {
          std::vector<Exponent> uv(3);
          for (int i = 0; i < 3; ++i) uv[i] = u[i] + v[i];
          want = want && oracle::member(I.gens(), uv);
        }
        ASSERT_EQ(C.contains(Monomial(u)), want);
      }
  }
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(I3(kExample)), I3("x, y"));
  EXPECT_TRUE(saturate(MonomialIdeal::maximal_power(3, 2)).is_unit());
  auto I = I4("x^2, x*y, x*z, x*w, y^3, y^2*z");
  EXPECT_EQ(saturate(I), I4("x, y^3, y^2*z"));
  EXPECT_EQ(detail::saturate_by_colon(I), detail::saturate_last_variable(I));
  EXPECT_TRUE(saturate(MonomialIdeal::unit(3)).is_unit());
  EXPECT_TRUE(saturate(MonomialIdeal::zero(3)).is_zero());
}

TEST(Saturate, PropertiesOnSamples) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 80; ++t) {
    auto I = oracle::random_ideal(rng, 3, 5, 4);
    auto S = saturate(I);
    EXPECT_EQ(saturate(S), S);
    EXPECT_TRUE(I.is_subset_of(S));
    for (std::int64_t d = 0; d <= 7; ++d)
      for (const auto& u : oracle::exponent_vectors(3, d))
        ASSERT_EQ(S.contains(Monomial(u)), oracle::in_saturation(I.gens(), u)) << format_ideal(I, R3);
    // The quotient S/I vanishes past the top generator degree.
    const auto top = I.max_generator_degree() + 3;
    for (std::int64_t d = top; d <= top + 2; ++d) EXPECT_EQ(oracle::saturation_gap(I.gens(), 3, d), 0);
  }
}

TEST(Saturate, BothRoutesOnStronglyStable) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    auto I = oracle::random_strongly_stable(rng, 4, 3, 3);
    ASSERT_TRUE(is_strongly_stable(I));
    EXPECT_EQ(detail::saturate_by_colon(I), detail::saturate_last_variable(I)) << format_ideal(I, R4);
  }
}

TEST(StronglyStable, Examples) {
  EXPECT_TRUE(is_strongly_stable(I3(kExample)));
  auto w = strong_stability_witness(I3("x*z"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->u, m3("x*z"));
  EXPECT_EQ(w->i, 1u);
  EXPECT_EQ(w->j, 2u);
  EXPECT_TRUE(is_strongly_stable(I3("x")));
}

TEST(StronglyStable, MatchesBruteForce) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    auto I = t % 2 ? oracle::random_ideal(rng, 3, 4, 3) : oracle::random_strongly_stable(rng, 3, 2, 3);
    EXPECT_EQ(is_strongly_stable(I), oracle::strongly_stable_up_to(I.gens(), 3, I.max_generator_degree() + 1))
        << format_ideal(I, R3);
  }
}

TEST(GeneratorCounts, Examples) {
  EXPECT_EQ(graded_generator_counts(I3(kExample)), (std::map<std::int64_t, std::int64_t>{{2, 3}, {3, 2}}));
  EXPECT_EQ(graded_generator_counts(I3("x^2, x*y, x*z, y^3, y^2*z, y*z^2")),
            (std::map<std::int64_t, std::int64_t>{{2, 3}, {3, 3}}));
  EXPECT_TRUE(graded_generator_counts(MonomialIdeal::zero(3)).empty());
}

TEST(GeneratorCounts, SumToSize) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto I = oracle::random_ideal(rng, 4, 6, 5);
    std::int64_t s = 0;
    for (auto [d, c] : graded_generator_counts(I)) s += c;
    EXPECT_EQ(s, static_cast<std::int64_t>(I.gens().size()));
  }
}

TEST(DepthPositive, Examples) {
  EXPECT_TRUE(depth_positive_stable(I3("x^2, x*y")));
  EXPECT_FALSE(depth_positive_stable(I3(kExample)));
  EXPECT_TRUE(depth_positive_stable(I4("x, y^3, y^2*z")));
  EXPECT_THROW((void)depth_positive_stable(I3("x*z")), InvalidArgument);
}

TEST(IdealOps, SumIntersectExtend) {
  EXPECT_EQ(ideal_sum(I3("x^2"), I3("x*y, x")), I3("x"));
  EXPECT_EQ(intersect(I3("x"), I3("y")), I3("x*y"));
  auto E = extend_ring(I3(kExample));
  EXPECT_EQ(E.n(), 4u);
  EXPECT_EQ(E, I4(kExample));
  EXPECT_EQ(drop_last_variable(I3("x*z, y^2")), parse_monomial_ideal("y^2", RingSpec({"x", "y"})));
  EXPECT_EQ(format_ideal(MonomialIdeal::zero(3), R3), "0");
  EXPECT_EQ(format_ideal(I3(kExample), R3), "x^2, x*y, x*z^2, y^2, y*z^2");
}

TEST(IdealOps, RingMismatch) {
  EXPECT_THROW((void)ideal_sum(I3("x"), I4("x")), InvalidArgument);
  EXPECT_THROW(MonomialIdeal(3, {Monomial{1, 0}}), InvalidArgument);
}
