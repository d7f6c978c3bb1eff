#include <gtest/gtest.h>

#include <set>

#include "resgrass/arrangement.hpp"
#include "resgrass/errors.hpp"
#include "resgrass/grobner.hpp"
#include "resgrass/resonance.hpp"
#include "support.hpp"

using namespace resgrass;

namespace {

const PrimeField kField;
const Arrangement kPencil{"pencil", 3, std::nullopt, {{0, 1, 2}}};
const Arrangement kBoolean{"boolean", 3, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}};

ExtElement lin(const ExteriorAlgebra& alg, std::vector<std::int64_t> c) { return alg.linear_int(c); }

// Plane spanned by two integer vectors, normalized through plane_of.
Plane plane(const ExteriorAlgebra& alg, std::vector<std::int64_t> u, std::vector<std::int64_t> v) {
  return plane_of(alg, alg.wedge(lin(alg, std::move(u)), lin(alg, std::move(v))));
}

}  // namespace

TEST(OsPoints, Counts) {
  EXPECT_EQ(os_points(fixture("A3"), kField).size(), 4u);
  EXPECT_EQ(os_points(kPencil, kField).size(), 1u);
  EXPECT_EQ(os_points(fixture("Hessian"), kField).size(), 36u);
  EXPECT_TRUE(os_points(kBoolean, kField).empty());
}

TEST(OsPoints, PencilCoordinates) {
  const auto pts = os_points(kPencil, kField);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].coords, (std::vector<Coeff>{1, kField.neg(1), 1}));
}

TEST(OsPoints, LieOnGrassmannian) {
  for (const char* name : {"A3", "Hessian"}) {
    const auto a = fixture(name);
    const auto ring = plucker_ring(a.n, kField);
    const auto qs = plucker_ideal(ring, a.n);
    for (const auto& p : os_points(a, kField))
      for (const auto& q : qs) EXPECT_EQ(ring.evaluate(q, p.coords), 0u) << name;
  }
}

TEST(SpanForms, Counts) {
  const auto count = [](const Arrangement& a) {
    return span_forms(os_points(a, kField), plucker_ring(a.n, kField)).size();
  };
  EXPECT_EQ(count(fixture("A3")), 11u);
  EXPECT_EQ(count(kPencil), 2u);
  EXPECT_EQ(count(fixture("Hessian")), 39u);
}

TEST(SpanForms, VanishOnPointsAndAreIndependent) {
  const auto a = fixture("Hessian");
  const auto ring = plucker_ring(a.n, kField);
  const auto pts = os_points(a, kField);
  const auto forms = span_forms(pts, ring);
  Matrix m(kField, 0, ring.nvars());
  for (const auto& f : forms) {
    EXPECT_TRUE(ring.is_homogeneous(f));
    for (const auto& p : pts) EXPECT_EQ(ring.evaluate(f, p.coords), 0u);
    std::vector<Coeff> row(ring.nvars(), 0);
    for (std::size_t t = 0; t < f.size(); ++t) {
      const auto e = ring.monomial(f, t).exponents();
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) row[v] = f.coeffs[t];
    }
    m.append_row(row);
  }
  EXPECT_EQ(m.rank(), forms.size());
}

TEST(R1Hilbert, Braid) {
  const auto rep = r1_hilbert(fixture("A3"), kField);
  EXPECT_EQ(format_hp(rep.hilbert), "5*P_0");
  EXPECT_EQ(rep.n_os_points, 4u);
  EXPECT_EQ(rep.n_span_forms, 11u);
  EXPECT_EQ(rep.ring_vars, 4u);
  for (const char* stage : {"span", "eliminate", "groebner", "hilbert", "total"}) EXPECT_TRUE(rep.timings_ms.contains(stage));
}

TEST(R1Hilbert, PencilIsOnePoint) { EXPECT_EQ(format_hp(r1_hilbert(kPencil, kField).hilbert), "1*P_0"); }

TEST(R1Hilbert, BooleanIsEmpty) {
  const auto rep = r1_hilbert(kBoolean, kField);
  EXPECT_EQ(format_hp(rep.hilbert), "0");
  EXPECT_EQ(rep.n_os_points, 0u);
}

TEST(R1Hilbert, DisjointTriplesGiveOnePointEach) {
  for (int k = 1; k <= 3; ++k) {
    Arrangement a{"triples", 3 * k, std::nullopt, {}};
    for (int i = 0; i < k; ++i) a.rank2_flats.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    EXPECT_EQ(format_hp(r1_hilbert(a, kField).hilbert), std::to_string(k) + "*P_0");
  }
}

TEST(R1Hilbert, LexAgreesWithGrevlex) {
  EXPECT_EQ(format_hp(r1_hilbert(fixture("A3"), kField, {MonomialOrder::lex, true}).hilbert), "5*P_0");
}

TEST(Decomposable, Examples) {
  ExteriorAlgebra alg(6, kField);
  const auto r1 = alg.boundary(IndexSet{1, 4, 5}), r2 = alg.boundary(IndexSet{0, 1, 2});
  const auto r3 = alg.boundary(IndexSet{0, 3, 4}), r4 = alg.boundary(IndexSet{2, 3, 5});
  EXPECT_TRUE(is_decomposable(alg, r1));
  EXPECT_FALSE(is_decomposable(alg, alg.add(r1, r2)));
  const auto ess = alg.sub(alg.add(alg.add(r1, r2), r3), r4);
  EXPECT_TRUE(is_decomposable(alg, ess));
  EXPECT_FALSE(is_decomposable(alg, alg.add(alg.e({0, 1}), alg.e({2, 3}))));
}

TEST(Decomposable, EssentialFactorSpan) {
  ExteriorAlgebra alg(6, kField);
  auto ess = alg.add(alg.boundary(IndexSet{1, 4, 5}), alg.boundary(IndexSet{0, 1, 2}));
  ess = alg.sub(alg.add(ess, alg.boundary(IndexSet{0, 3, 4})), alg.boundary(IndexSet{2, 3, 5}));
  const auto [l, m] = factor_decomposable(alg, ess);
  EXPECT_EQ(alg.wedge(l, m), ess);
  Matrix got(kField, 0, 6);
  got.append_row(alg.to_vector(l));
  got.append_row(alg.to_vector(m));
  Matrix both = got;
  both.append_row(alg.to_vector(lin(alg, {1, -1, 0, -1, 0, 1})));
  both.append_row(alg.to_vector(lin(alg, {0, 1, -1, 1, -1, 0})));
  EXPECT_EQ(got.rank(), 2u);
  EXPECT_EQ(both.rank(), 2u);
  EXPECT_EQ(plane_of(alg, ess), plane(alg, {1, -1, 0, -1, 0, 1}, {0, 1, -1, 1, -1, 0}));
}

TEST(Decomposable, FactorRoundTrip) {
  for (std::uint32_t p : {5u, 31991u}) {
    PrimeField f(p);
    ExteriorAlgebra alg(7, f);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Coeff> a(7), b(7);
      for (auto& c : a) c = support::random_coeff(f);
      for (auto& c : b) c = support::random_coeff(f);
      const auto u = alg.wedge(alg.linear(a), alg.linear(b));
      if (u.is_zero()) continue;
      EXPECT_TRUE(is_decomposable(alg, u));
      const auto [l, m] = factor_decomposable(alg, u);
      EXPECT_EQ(alg.wedge(l, m), u);
      // a and b lie in span{l, m}
      EXPECT_TRUE(alg.wedge(u, alg.linear(a)).is_zero());
      EXPECT_TRUE(alg.wedge(alg.wedge(l, m), alg.linear(b)).is_zero());
    }
  }
}

TEST(Decomposable, RejectsIndecomposable) {
  ExteriorAlgebra alg(4, kField);
  EXPECT_THROW(factor_decomposable(alg, alg.add(alg.e({0, 1}), alg.e({2, 3}))), MathError);
  EXPECT_THROW(plane_of(alg, ExtElement(2)), MathError);
}

TEST(BruteForce, BraidFiveComponents) {
  for (std::uint32_t q : {5u, 7u}) {
    const PrimeField f(q);
    ExteriorAlgebra alg(6, f);
    const auto planes = decomposables_in_I2_bruteforce(fixture("A3"), q, 10'000'000);
    std::set<Plane> expected{
        plane(alg, {1, -1, 0, 0, 0, 0}, {0, 1, -1, 0, 0, 0}),      // flat {0,1,2}
        plane(alg, {1, 0, 0, -1, 0, 0}, {0, 0, 0, 1, -1, 0}),      // flat {0,3,4}
        plane(alg, {0, 1, 0, 0, -1, 0}, {0, 0, 0, 0, 1, -1}),      // flat {1,4,5}
        plane(alg, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 1, 0, -1}),      // flat {2,3,5}
        plane(alg, {1, -1, 0, -1, 0, 1}, {0, 1, -1, 1, -1, 0})};  // essential
    EXPECT_EQ(std::set<Plane>(planes.begin(), planes.end()), expected) << "q = " << q;
  }
}

TEST(BruteForce, PencilAndBoolean) {
  EXPECT_EQ(decomposables_in_I2_bruteforce(kPencil, 3, 100).size(), 1u);
  EXPECT_TRUE(decomposables_in_I2_bruteforce(kBoolean, 3, 100).empty());
}

TEST(BruteForce, BudgetIsEnforced) {
  EXPECT_THROW(decomposables_in_I2_bruteforce(fixture("A3"), 5, 100), BudgetError);
}

TEST(BruteForce, PlanePoints) {
  ExteriorAlgebra alg(6, PrimeField(5));
  const auto pts = plane_points(plane(alg, {1, -1, 0, 0, 0, 0}, {0, 1, -1, 0, 0, 0}), 5);
  EXPECT_EQ(pts.size(), 6u);
  for (const auto& p : pts) EXPECT_EQ((p[0] + p[1] + p[2]) % 5, 0u);
}
