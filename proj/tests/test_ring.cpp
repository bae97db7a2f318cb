#include <gtest/gtest.h>

#include <random>

#include "lexlab/parse.hpp"
#include "lexlab/ring.hpp"
#include "oracles.hpp"

using namespace lexlab;

namespace {

const RingSpec R3({"x", "y", "z"});

Monomial m3(const char* s) { return parse_monomial(s, R3); }

}  // namespace

TEST(Compare, LexFirstExponent) {
  EXPECT_EQ(compare(m3("x^2"), m3("x*y"), TermOrder::lex), std::strong_ordering::greater);
  EXPECT_EQ(compare(m3("x*y"), m3("x^2"), TermOrder::lex), std::strong_ordering::less);
}

TEST(Compare, DegrevlexDegreeTwoChain) {
  // Reference definition: higher degree wins, then the smaller exponent at the last
  // differing position wins.
  auto ref = [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::vector<Monomial> chain = {m3("x^2"), m3("x*y"), m3("y^2"), m3("x*z"), m3("y*z"), m3("z^2")};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      EXPECT_EQ(ref(chain[i], chain[j]), i < j);
      EXPECT_EQ(compare(chain[i], chain[j], TermOrder::degrevlex) > 0, i < j);
    }
}

TEST(Compare, Reflexive) {
  for (auto o : {TermOrder::lex, TermOrder::degrevlex}) EXPECT_TRUE(compare(m3("x*y^2*z"), m3("x*y^2*z"), o) == 0);
}

TEST(Compare, DimensionMismatch) {
  EXPECT_THROW((void)compare(Monomial{1, 0}, Monomial{1, 0, 0}, TermOrder::lex), InvalidArgument);
}

TEST(Compare, MultiplicativeOnSamples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    auto draw = [&] { return Monomial{e(rng), e(rng), e(rng), e(rng)}; };
    auto u = draw(), v = draw(), w = draw();
    for (auto o : {TermOrder::lex, TermOrder::degrevlex}) {
      if (compare(u, v, o) > 0) EXPECT_TRUE(compare(u * w, v * w, o) > 0);
      EXPECT_EQ(compare(u, v, o), 0 <=> compare(v, u, o));
    }
  }
}

TEST(Enumerate, DegreeZero) {
  auto v = enumerate_monomials(3, 0);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].is_one());
}

TEST(Enumerate, LexDegreeTwo) {
  std::vector<Monomial> want = {m3("x^2"), m3("x*y"), m3("x*z"), m3("y^2"), m3("y*z"), m3("z^2")};
  EXPECT_EQ(enumerate_monomials(3, 2, TermOrder::lex), want);
}

TEST(Enumerate, TwoVariablesDegreeFive) { EXPECT_EQ(enumerate_monomials(2, 5).size(), 6u); }

TEST(Enumerate, SortedWithBinomialCardinality) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::int64_t d = 0; d <= 10; ++d)
      for (auto o : {TermOrder::lex, TermOrder::degrevlex}) {
        auto v = enumerate_monomials(n, d, o);
        ASSERT_EQ(static_cast<std::int64_t>(v.size()), oracle::ring_dim(n, d));
        for (std::size_t k = 1; k < v.size(); ++k) ASSERT_TRUE(compare(v[k - 1], v[k], o) > 0);
        for (const auto& u : v) ASSERT_EQ(u.degree(), d);
      }
}

TEST(BorelMove, Examples) {
  EXPECT_EQ(borel_move(m3("x*z^2"), 1, 2), m3("x*y*z"));
  EXPECT_EQ(borel_move(m3("y*z^2"), 0, 2), m3("x*y*z"));
  EXPECT_THROW((void)borel_move(m3("x^2"), 0, 1), InvalidArgument);
  EXPECT_THROW((void)borel_move(m3("x*y"), 1, 1), InvalidArgument);
  EXPECT_THROW((void)borel_move(m3("x*y"), 1, 0), InvalidArgument);
}

TEST(BorelMove, PreservesDegree) {
  for (std::int64_t d = 1; d <= 5; ++d)
    for (const auto& u : enumerate_monomials(4, d))
      for (std::size_t j = 1; j < 4; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (u[j] > 0) EXPECT_EQ(borel_move(u, i, j).degree(), d);
}

TEST(Monomial, Arithmetic) {
  auto a = m3("x^2*y"), b = m3("x*y^3*z");
  EXPECT_EQ(a.lcm(b), m3("x^2*y^3*z"));
  EXPECT_EQ(a.gcd(b), m3("x*y"));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_THROW((void)(a / b), InvalidArgument);
  EXPECT_EQ(a.truncated_quotient(b), m3("x"));
  EXPECT_TRUE(m3("x").coprime(m3("y*z")));
  EXPECT_THROW(Monomial({-1, 0}), InvalidArgument);
}

TEST(RingSpec, Names) {
  EXPECT_EQ(RingSpec(3).names(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(RingSpec(5).name(4), "X5");
  EXPECT_THROW(RingSpec(std::vector<std::string>{"x", "x"}), InvalidArgument);
  EXPECT_THROW(RingSpec(std::vector<std::string>{}), InvalidArgument);
  EXPECT_EQ(RingSpec(3).extended().name(3), "w");
}

TEST(Polynomial, ExactArithmetic) {
  auto p = parse_polynomial("x^2 - y^2", R3);
  auto q = parse_polynomial("x + y", R3);
  auto r = parse_polynomial("x - y", R3);
  EXPECT_EQ(q * r, p);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(parse_polynomial("1/2*x + 1/2*x", R3), parse_polynomial("x", R3));
  EXPECT_EQ(p.leading_monomial(TermOrder::degrevlex), m3("x^2"));
  EXPECT_EQ(format_polynomial(parse_polynomial("x^2 - 3/2*y^2 + 2", R3), R3), "x^2 - 3/2*y^2 + 2");
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE(parse_polynomial("x^2 + y", R3).is_homogeneous());
}

TEST(Format, Monomial) {
  EXPECT_EQ(format_monomial(m3("x^2*y*z^3"), R3), "x^2*y*z^3");
  EXPECT_EQ(format_monomial(Monomial::one(3), R3), "1");
}
