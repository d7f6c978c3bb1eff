#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "resgrass/arrangement.hpp"
#include "resgrass/exterior.hpp"
#include "resgrass/resonance.hpp"

namespace resgrass {

/// The Aomoto complex A^0 -> A^1 -> ... -> A^top with differential a ∧ -, where
/// A^k = Λ^k / I_k is coordinatized by the non-pivot basis subsets of I_k.
class AomotoComplex {
 public:
  AomotoComplex(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point, int top);

  int top() const { return top_; }
  std::size_t dim(int k) const { return ideals_.at(k).complement().size(); }
  /// Matrix of d_k : A^k -> A^{k+1}, for 0 ≤ k < top.
  const Matrix& differential(int k) const { return differentials_.at(k); }

 private:
  int top_;
  std::vector<Subspace> ideals_;
  std::vector<Matrix> differentials_;
};

struct CohomologyProfile {
  std::vector<std::size_t> h;           // h^0 .. h^up_to
  std::vector<std::size_t> chain_dims;  // dim A^0 .. dim A^up_to
  std::int64_t euler_characteristic() const;
  std::int64_t chain_euler_characteristic() const;
};

/// Cohomology of (A, a) in degrees 0..up_to. Needs I_{up_to+1}, so a
/// realization when up_to ≥ 2. Throws InputError for a zero point.
CohomologyProfile aomoto_profile(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point,
                                 int up_to);

/// Pointwise membership in R¹ by the decomposability criterion: some b outside
/// span(a) has a ∧ b ∈ I₂.
class ResonanceTester {
 public:
  ResonanceTester(const Arrangement& a, const ExteriorAlgebra& alg);
  bool is_resonant_1(const ExtElement& point) const;
  /// dim {b ∈ E₁ : a ∧ b ∈ I₂}.
  std::size_t annihilator_dim(const ExtElement& point) const;

 private:
  const ExteriorAlgebra& alg_;
  Subspace i2_;
};

bool is_resonant_1(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point);

struct ResonanceKVerdict {
  bool cohomology_nonzero = false;  // h^k ≠ 0
  bool witness_exists = false;      // some ρ ∉ I_k with 0 ≠ a ∧ ρ ∈ I_{k+1}
  bool diverges() const { return cohomology_nonzero != witness_exists; }
};

ResonanceKVerdict is_resonant_k(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point, int k);

/// Normalized points of P^{n-1}(F_q) in R¹, sorted.
std::vector<std::vector<Coeff>> enumerate_r1(const Arrangement& a, std::uint32_t q, std::uint64_t budget);

struct PlaneCheckReport {
  bool agree = false;
  bool planes_disjoint = false;
  std::vector<std::vector<Coeff>> resonant_points;
  std::vector<Plane> planes;
  std::vector<std::vector<Coeff>> only_resonant;  // in R¹ but on no plane
  std::vector<std::vector<Coeff>> only_planes;    // on a plane but not in R¹
};

/// Compares R¹(F_q) with the union of the decomposable planes of I₂.
PlaneCheckReport check_plane_union(const Arrangement& a, std::uint32_t q, std::uint64_t budget);

}  // namespace resgrass
