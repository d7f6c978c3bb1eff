#include <gtest/gtest.h>

#include "resgrass/errors.hpp"
#include "resgrass/scalars.hpp"
#include "support.hpp"

using namespace resgrass;
using resgrass::support::random_coeff;
using resgrass::support::random_matrix;

TEST(PrimeField, InverseExamples) {
  EXPECT_EQ(PrimeField(31991).inv(1), 1u);
  EXPECT_EQ(PrimeField(7).inv(3), 5u);
  EXPECT_EQ(PrimeField(31991).inv(2), 15996u);
}

TEST(PrimeField, InverseOfZeroThrows) { EXPECT_THROW(PrimeField(7).inv(0), MathError); }

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_THROW(PrimeField(31990), InputError);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, InverseRoundTripsEverywhere) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    PrimeField f(p);
    for (Coeff a = 1; a < p; ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.inv(f.inv(a)), a);
    }
  }
  PrimeField f;
  for (int i = 0; i < 1000; ++i) {
    Coeff a = random_coeff(f);
    if (a == 0) continue;
    EXPECT_EQ(f.inv(f.inv(a)), a);
  }
}

TEST(PrimeField, ReduceAndLift) {
  PrimeField f(7);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.reduce(15), 1u);
  EXPECT_EQ(f.lift(6), -1);
  EXPECT_EQ(f.lift(3), 3);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
}

TEST(Matrix, RankExamples) {
  PrimeField f(31991);
  EXPECT_EQ(Matrix::from_rows(f, {{1, 2}, {2, 4}}, 2).rank(), 1u);
  EXPECT_EQ(Matrix::identity(f, 3).rank(), 3u);
  EXPECT_EQ(Matrix(f, 2, 3).rank(), 0u);
}

TEST(Matrix, RankDependsOnCharacteristic) {
  // det = 3, singular only mod 3
  const std::vector<std::vector<Coeff>> rows{{1, 1}, {1, 4}};
  EXPECT_EQ(Matrix::from_rows(PrimeField(3), rows, 2).rank(), 1u);
  EXPECT_EQ(Matrix::from_rows(PrimeField(5), rows, 2).rank(), 2u);
}

TEST(Matrix, KernelOfAllOnesRow) {
  PrimeField f(7);
  auto k = kernel_basis(Matrix::from_rows(f, {{1, 1, 1}}, 3));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (std::vector<Coeff>{6, 1, 0}));
  EXPECT_EQ(k[1], (std::vector<Coeff>{6, 0, 1}));
}

TEST(Matrix, KernelOfFullRankIsEmpty) { EXPECT_TRUE(kernel_basis(Matrix::identity(PrimeField(5), 4)).empty()); }

TEST(Matrix, KernelOfZeroMatrixIsStandardBasis) {
  auto k = kernel_basis(Matrix(PrimeField(5), 2, 3));
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k[i][j], i == j ? 1u : 0u);
}

TEST(Matrix, RankPlusNullityAndKernelAnnihilates) {
  for (std::uint32_t p : {2u, 3u, 31991u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 9;
      const Matrix m = random_matrix(f, r, c, 0.4);
      const auto ker = kernel_basis(m);
      EXPECT_EQ(m.rank() + ker.size(), c);
      for (const auto& v : ker)
        for (auto x : m.apply(v)) EXPECT_EQ(x, 0u);
      // kernel vectors are independent
      Matrix k(f, 0, c);
      for (const auto& v : ker) k.append_row(v);
      EXPECT_EQ(k.rank(), ker.size());
    }
  }
}

TEST(Matrix, RrefIsIdempotent) {
  PrimeField f;
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(f, 5, 7, 0.5);
    m.rref();
    Matrix again = m;
    again.rref();
    EXPECT_EQ(m, again);
  }
}

TEST(Matrix, RrefShape) {
  PrimeField f(5);
  Matrix m = Matrix::from_rows(f, {{0, 2, 4}, {0, 1, 2}, {1, 0, 1}}, 3);
  auto piv = m.rref();
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(0, 0), 1u);
  EXPECT_EQ(m(1, 1), 1u);
  EXPECT_EQ(m(1, 2), 2u);
}

TEST(Matrix, MultiplyByIdentity) {
  PrimeField f(11);
  Matrix m = random_matrix(f, 3, 4);
  EXPECT_EQ(Matrix::identity(f, 3).multiply(m), m);
  EXPECT_EQ(m.multiply(Matrix::identity(f, 4)), m);
}

TEST(NormalizeProjective, FirstNonzeroBecomesOne) {
  PrimeField f(7);
  std::vector<Coeff> v{0, 3, 6};
  EXPECT_TRUE(normalize_projective(f, v));
  EXPECT_EQ(v, (std::vector<Coeff>{0, 1, 2}));
  std::vector<Coeff> z{0, 0};
  EXPECT_FALSE(normalize_projective(f, z));
}
