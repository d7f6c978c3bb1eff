#include <gtest/gtest.h>

#include "resgrass/arrangement.hpp"
#include "resgrass/errors.hpp"
#include "resgrass/exterior.hpp"
#include "support.hpp"

using namespace resgrass;

namespace {

const PrimeField kField;

IndexSet complement_of(int i, int n) {
  IndexSet s;
  for (int j = 0; j < n; ++j)
    if (j != i) s.push_back(j);
  return s;
}

ExtElement random_element(const ExteriorAlgebra& alg, int grade) {
  std::vector<Coeff> v(alg.basis(grade).size());
  for (auto& c : v) c = support::random_coeff(alg.field());
  return alg.from_vector(grade, v);
}

// Span of ∂e_S over the dependent triples, computed without os_ideal_part.
std::size_t brute_i2_dim(const Arrangement& a, const ExteriorAlgebra& alg) {
  Matrix m(alg.field(), 0, alg.basis(2).size());
  for (const auto& t : a.dependent_triples()) m.append_row(alg.to_vector(alg.boundary(t)));
  return m.rank();
}

}  // namespace

TEST(Exterior, LexBasisOrder) {
  ExteriorAlgebra alg(4, kField);
  std::vector<IndexSet> got;
  for (Mask m : alg.basis(2)) got.push_back(from_mask(m));
  EXPECT_EQ(got, subsets(4, 2));
  EXPECT_EQ(alg.basis(0).size(), 1u);
  EXPECT_EQ(alg.basis(4).size(), 1u);
}

TEST(Exterior, WedgeIsAnticommutativeOnGenerators) {
  ExteriorAlgebra alg(3, kField);
  EXPECT_EQ(alg.wedge(alg.e(1), alg.e(0)), alg.scale(kField.neg(1), alg.e({0, 1})));
  EXPECT_TRUE(alg.wedge(alg.e(2), alg.e(2)).is_zero());
  EXPECT_EQ(alg.e({1, 0}), alg.scale(kField.neg(1), alg.e({0, 1})));
}

TEST(Exterior, WedgeSign) {
  EXPECT_EQ(wedge_sign(to_mask({0}), to_mask({1})), 1);
  EXPECT_EQ(wedge_sign(to_mask({1}), to_mask({0})), -1);
  EXPECT_EQ(wedge_sign(to_mask({1, 2}), to_mask({0})), 1);
}

TEST(Exterior, GradedCommutativity) {
  ExteriorAlgebra alg(6, kField);
  for (int trial = 0; trial < 20; ++trial)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) {
        const auto x = random_element(alg, p), y = random_element(alg, q);
        auto yx = alg.wedge(y, x);
        if ((p * q) % 2) yx = alg.scale(kField.neg(1), yx);
        EXPECT_EQ(alg.wedge(x, y), yx);
      }
}

TEST(Exterior, WedgeIsAssociative) {
  ExteriorAlgebra alg(6, kField);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(alg, 1), y = random_element(alg, 2), z = random_element(alg, 2);
    EXPECT_EQ(alg.wedge(alg.wedge(x, y), z), alg.wedge(x, alg.wedge(y, z)));
  }
}

TEST(Exterior, LinearFormSquaresToZero) {
  ExteriorAlgebra alg(7, kField);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(alg, 1);
    EXPECT_TRUE(alg.wedge(a, a).is_zero());
  }
}

TEST(Exterior, BoundaryOfTriple) {
  ExteriorAlgebra alg(3, kField);
  const auto expected = alg.add(alg.sub(alg.e({1, 2}), alg.e({0, 2})), alg.e({0, 1}));
  EXPECT_EQ(alg.boundary(IndexSet{0, 1, 2}), expected);
}

TEST(Exterior, BoundarySquaresToZero) {
  ExteriorAlgebra alg(7, kField);
  for (int k = 0; k <= 7; ++k)
    for (int trial = 0; trial < 5; ++trial)
      EXPECT_TRUE(alg.boundary(alg.boundary(random_element(alg, k))).is_zero()) << "grade " << k;
}

TEST(Exterior, BoundaryOfTripleFactors) {
  // ∂e_ijk = (e_i - e_k) ∧ (e_j - e_k)
  ExteriorAlgebra alg(6, kField);
  for (const auto& s : subsets(6, 3)) {
    const auto l = alg.wedge(alg.sub(alg.e(s[0]), alg.e(s[2])), alg.sub(alg.e(s[1]), alg.e(s[2])));
    EXPECT_EQ(alg.boundary(s), l);
  }
}

TEST(Exterior, BoundaryIsADerivation) {
  // ∂(x∧y) = ∂x∧y + (-1)^|x| x∧∂y
  ExteriorAlgebra alg(6, kField);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element(alg, 2), y = random_element(alg, 3);
    const auto rhs = alg.add(alg.wedge(alg.boundary(x), y), alg.wedge(x, alg.boundary(y)));
    EXPECT_EQ(alg.boundary(alg.wedge(x, y)), rhs);
  }
}

TEST(Exterior, VectorRoundTrip) {
  ExteriorAlgebra alg(6, kField);
  for (int k = 0; k <= 6; ++k) {
    const auto x = random_element(alg, k);
    EXPECT_EQ(alg.from_vector(k, alg.to_vector(x)), x);
  }
}

TEST(Exterior, BraidWedgeTable) {
  ExteriorAlgebra alg(6, kField);
  const auto r1 = alg.boundary(IndexSet{1, 4, 5});
  const auto r2 = alg.boundary(IndexSet{0, 1, 2});
  const auto r3 = alg.boundary(IndexSet{0, 3, 4});
  const auto r4 = alg.boundary(IndexSet{2, 3, 5});
  auto hat = [&](int i) { return alg.boundary(complement_of(i, 6)); };
  auto minus = [&](const ExtElement& x) { return alg.scale(kField.neg(1), x); };
  EXPECT_EQ(alg.wedge(r1, r2), hat(3));
  EXPECT_EQ(alg.wedge(r1, r3), minus(hat(2)));
  EXPECT_EQ(alg.wedge(r1, r4), hat(0));
  EXPECT_EQ(alg.wedge(r2, r3), hat(5));
  EXPECT_EQ(alg.wedge(r2, r4), hat(4));
  EXPECT_EQ(alg.wedge(r3, r4), minus(hat(1)));
}

TEST(Exterior, EssentialBraidDecomposable) {
  ExteriorAlgebra alg(6, kField);
  auto sum = alg.add(alg.boundary(IndexSet{1, 4, 5}), alg.boundary(IndexSet{0, 1, 2}));
  sum = alg.add(sum, alg.boundary(IndexSet{0, 3, 4}));
  sum = alg.sub(sum, alg.boundary(IndexSet{2, 3, 5}));
  const std::int64_t u[] = {1, -1, 0, -1, 0, 1};
  const std::int64_t v[] = {0, 1, -1, 1, -1, 0};
  EXPECT_EQ(sum, alg.wedge(alg.linear_int(u), alg.linear_int(v)));
}

TEST(Exterior, IdealDimensionsInDegreeTwo) {
  const auto a3 = fixture("A3");
  ExteriorAlgebra alg6(6, kField);
  EXPECT_EQ(os_ideal_part(a3, alg6, 2).dim(), 4u);
  EXPECT_EQ(brute_i2_dim(a3, alg6), 4u);

  const Arrangement pencil{"pencil", 3, std::nullopt, {{0, 1, 2}}};
  ExteriorAlgebra alg3(3, kField);
  EXPECT_EQ(os_ideal_part(pencil, alg3, 2).dim(), 1u);

  const auto hess = fixture("Hessian");
  ExteriorAlgebra alg12(12, kField);
  EXPECT_EQ(os_ideal_part(hess, alg12, 2).dim(), 27u);
  EXPECT_EQ(brute_i2_dim(hess, alg12), 27u);
}

TEST(Exterior, BraidIdealMatchesPoincarePolynomial) {
  // (1+t)(1+2t)(1+3t) = 1 + 6t + 11t^2 + 6t^3
  const auto a3 = fixture("A3");
  ExteriorAlgebra alg(6, kField);
  const std::size_t quotient[] = {1, 6, 11, 6, 0, 0, 0};
  for (int k = 0; k <= 6; ++k)
    EXPECT_EQ(alg.basis(k).size() - os_ideal_part(a3, alg, k).dim(), quotient[k]) << "grade " << k;
}

TEST(Exterior, IdealIsClosedUnderWedgeWithGenerators) {
  const auto a3 = fixture("A3");
  ExteriorAlgebra alg(6, kField);
  const auto i2 = os_ideal_part(a3, alg, 2);
  const auto i3 = os_ideal_part(a3, alg, 3);
  for (const auto& x : i2.basis(alg))
    for (int j = 0; j < 6; ++j) EXPECT_TRUE(i3.contains(alg, alg.wedge(alg.e(j), x)));
}

TEST(Subspace, ReduceGivesCanonicalCosetRep) {
  ExteriorAlgebra alg(5, kField);
  std::vector<ExtElement> gens{alg.boundary(IndexSet{0, 1, 2}), alg.boundary(IndexSet{2, 3, 4})};
  Subspace s(alg, 2, gens);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.complement().size(), 8u);
  const auto x = random_element(alg, 2);
  const auto y = alg.add(x, alg.scale(17, gens[0]));
  EXPECT_EQ(s.reduce(alg.to_vector(x)), s.reduce(alg.to_vector(y)));
  EXPECT_TRUE(s.contains(alg, alg.sub(y, x)));
  EXPECT_FALSE(s.contains(alg, alg.e({0, 1})));
}

TEST(Exterior, RejectsOversizedAlgebra) { EXPECT_THROW(ExteriorAlgebra(64, kField), MathError); }

TEST(Exterior, BoundaryOfSingletonIsUnit) {
  ExteriorAlgebra alg(4, kField);
  EXPECT_EQ(alg.boundary(IndexSet{3}), alg.unit());
}
