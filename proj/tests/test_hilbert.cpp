#include <gtest/gtest.h>

#include "resgrass/grobner.hpp"
#include "resgrass/hilbert.hpp"
#include "support.hpp"

using namespace resgrass;
using resgrass::support::monomials_of_degree;
using resgrass::support::random_homogeneous;
using resgrass::support::random_monomial_ideal;
using resgrass::support::standard_count;

namespace {
const PrimeField kField;
}

TEST(MonomialIdeal, Minimalizes) {
  const MonomialIdeal m(2, {{1, 1}, {1, 0}, {2, 3}, {1, 0}});
  EXPECT_EQ(m.generators(), (std::vector<Exponents>{{1, 0}}));
  EXPECT_TRUE(m.contains({3, 2}));
  EXPECT_FALSE(m.contains({0, 5}));
}

TEST(LeadingIdeal, FromBasis) {
  const auto ring = plucker_ring(4, kField, MonomialOrder::lex);
  const auto w = [&](int i, int j) { return ring.variable(plucker_var(4, i, j)); };
  const auto q = ring.add(ring.sub(ring.mul(w(0, 1), w(2, 3)), ring.mul(w(0, 2), w(1, 3))), ring.mul(w(0, 3), w(1, 2)));
  const auto lt = leading_ideal(buchberger(ring, {q, w(0, 1)}));
  EXPECT_EQ(lt.generators(), (std::vector<Exponents>{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}}));
}

TEST(LeadingIdeal, EmptyAndAllVariables) {
  const auto ring = plucker_ring(4, kField);
  EXPECT_TRUE(leading_ideal(buchberger(ring, {})).generators().empty());
  std::vector<Poly> vars;
  for (std::size_t v = 0; v < ring.nvars(); ++v) vars.push_back(ring.variable(v));
  EXPECT_EQ(leading_ideal(buchberger(ring, vars)).generators().size(), 6u);
}

TEST(Numerator, SmallExamples) {
  EXPECT_EQ(hilbert_numerator(MonomialIdeal(3, {})), (IntPoly{1}));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal(1, {{1}})), (IntPoly{1, -1}));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal(2, {{1, 1}})), (IntPoly{1, 0, -1}));
  // ⟨x^2, y^3⟩: (1-t^2)(1-t^3)
  EXPECT_EQ(hilbert_numerator(MonomialIdeal(2, {{2, 0}, {0, 3}})), (IntPoly{1, 0, -1, -1, 0, 1}));
}

TEST(Numerator, UnitIdeal) {
  const MonomialIdeal unit(2, {{0, 0}});
  EXPECT_TRUE(hilbert_numerator(unit).empty());  // zero polynomial
  EXPECT_TRUE(hilbert_polynomial(hilbert_numerator(unit), 2).is_zero());
}

TEST(Numerator, MatchesStandardMonomialCount) {
  support::rng().seed(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int nvars = 2 + trial % 4;
    const auto m = random_monomial_ideal(nvars, 1 + trial % 6, 4);
    const auto num = hilbert_numerator(m);
    for (int d = 0; d <= 6; ++d)
      EXPECT_EQ(hilbert_function(num, nvars, d), static_cast<std::int64_t>(standard_count(m, nvars, d)))
          << "trial " << trial << " degree " << d;
  }
}

TEST(HilbertPolynomial, FreeRing) {
  const auto hp = hilbert_polynomial(IntPoly{1}, 3);
  EXPECT_EQ(format_hp(hp), "1*P_2");
  for (int d = 0; d < 10; ++d) EXPECT_EQ(hp.evaluate(d), binomial(d + 2, 2));
}

TEST(HilbertPolynomial, Points) {
  // ⟨x^2, y^3⟩ in 3 variables: a length-6 scheme in P^2
  const auto hp = hilbert_polynomial(hilbert_numerator(MonomialIdeal(3, {{2, 0, 0}, {0, 3, 0}})), 3);
  EXPECT_EQ(format_hp(hp), "6*P_0");
}

TEST(HilbertPolynomial, AgreesWithHilbertFunctionInHighDegree) {
  support::rng().seed(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int nvars = 2 + trial % 4;
    const auto m = random_monomial_ideal(nvars, 2 + trial % 5, 3);
    const auto num = hilbert_numerator(m);
    const auto hp = hilbert_polynomial(num, nvars);
    for (int d = 12; d <= 16; ++d) EXPECT_EQ(hp.evaluate(d), hilbert_function(num, nvars, d)) << trial;
  }
}

TEST(HilbertPolynomial, BasisRoundTrip) {
  for (int i = 0; i < 6; ++i) {
    HilbertPoly p;
    p.coeffs[i] = 1;
    for (int d = 0; d < 8; ++d) EXPECT_EQ(p.evaluate(d), binomial(d + i, i));
    EXPECT_EQ(format_hp(hilbert_polynomial(IntPoly{1}, i + 1)), format_hp(p));
  }
}

TEST(FormatHp, Examples) {
  HilbertPoly a;
  a.coeffs[0] = 5;
  EXPECT_EQ(format_hp(a), "5*P_0");
  HilbertPoly b;
  b.coeffs[0] = 54;
  b.coeffs[2] = 10;
  EXPECT_EQ(format_hp(b), "54*P_0 + 10*P_2");
  EXPECT_EQ(format_hp(HilbertPoly{}), "0");
  HilbertPoly c;
  c.coeffs[0] = -2;
  c.coeffs[1] = 3;
  EXPECT_EQ(format_hp(c), "-2*P_0 + 3*P_1");
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(66, 33), 7219428434016265740LL);
}

TEST(HilbertPolynomial, GrevlexAndLexAgree) {
  support::rng().seed(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t nvars = 3 + trial % 2;
    PolyRing grevlex(nvars, kField, MonomialOrder::grevlex);
    std::vector<Poly> gens;
    for (int i = 0; i < 2 + trial % 2; ++i) gens.push_back(random_homogeneous(grevlex, 2, 2 + trial % 3));
    const auto lex = grevlex.with_order(MonomialOrder::lex);
    std::vector<Poly> lex_gens;
    for (const auto& g : gens) lex_gens.push_back(lex.resort(g));
    const auto a = hilbert_polynomial(hilbert_numerator(leading_ideal(buchberger(grevlex, gens))), nvars);
    const auto b = hilbert_polynomial(hilbert_numerator(leading_ideal(buchberger(lex, lex_gens))), nvars);
    EXPECT_EQ(a, b) << format_hp(a) << " vs " << format_hp(b);
  }
}
