#include "resgrass/oracle.hpp"

#include <algorithm>
#include <mutex>

#include "resgrass/enumerate.hpp"
#include "resgrass/errors.hpp"

namespace resgrass {

namespace {

void require_point(const ExtElement& point) {
  if (point.is_zero()) throw InputError("the zero vector is not a projective point");
  if (point.grade() != 1) throw MathError("Aomoto complexes need a grade-1 point");
}

// Matrix of x ↦ (point ∧ x mod target) from source coset coordinates to target ones.
Matrix multiplication_matrix(const ExteriorAlgebra& alg, const ExtElement& point, const Subspace& source,
                             const Subspace& target) {
  const int k = source.grade();
  Matrix m(alg.field(), target.complement().size(), source.complement().size());
  for (std::size_t c = 0; c < source.complement().size(); ++c) {
    const Mask s = alg.basis(k)[source.complement()[c]];
    const auto img = target.reduce(alg.to_vector(alg.wedge(point, alg.e(from_mask(s)))));
    for (std::size_t r = 0; r < target.complement().size(); ++r) m(r, c) = img[target.complement()[r]];
  }
  return m;
}

}  // namespace

AomotoComplex::AomotoComplex(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point, int top)
    : top_(top) {
  require_point(point);
  if (top < 0 || top > alg.n()) throw InputError("complex degree out of range");
  for (int k = 0; k <= top; ++k) ideals_.push_back(os_ideal_part(a, alg, k));
  for (int k = 0; k < top; ++k) differentials_.push_back(multiplication_matrix(alg, point, ideals_[k], ideals_[k + 1]));
}

std::int64_t CohomologyProfile::euler_characteristic() const {
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < h.size(); ++k) acc += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h[k]);
  return acc;
}

std::int64_t CohomologyProfile::chain_euler_characteristic() const {
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < chain_dims.size(); ++k)
    acc += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(chain_dims[k]);
  return acc;
}

CohomologyProfile aomoto_profile(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point,
                                 int up_to) {
  require_point(point);
  const int rank = a.rank(alg.field());
  if (up_to < 0 || up_to > rank)
    throw InputError("cohomology degree " + std::to_string(up_to) + " exceeds the arrangement rank " +
                     std::to_string(rank));
  const int top = std::min(up_to + 1, alg.n());
  const AomotoComplex cx(a, alg, point, top);
  CohomologyProfile prof;
  std::size_t prev_rank = 0;
  for (int k = 0; k <= up_to; ++k) {
    const std::size_t rk = k < top ? cx.differential(k).rank() : 0;
    prof.chain_dims.push_back(cx.dim(k));
    prof.h.push_back(cx.dim(k) - rk - prev_rank);
    prev_rank = rk;
  }
  return prof;
}

ResonanceTester::ResonanceTester(const Arrangement& a, const ExteriorAlgebra& alg)
    : alg_(alg), i2_(os_ideal_part(a, alg, 2)) {}

std::size_t ResonanceTester::annihilator_dim(const ExtElement& point) const {
  require_point(point);
  const std::size_t n = static_cast<std::size_t>(alg_.n());
  Matrix m(alg_.field(), i2_.complement().size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto img = i2_.reduce(alg_.to_vector(alg_.wedge(point, alg_.e(static_cast<int>(i)))));
    for (std::size_t r = 0; r < i2_.complement().size(); ++r) m(r, i) = img[i2_.complement()[r]];
  }
  return n - m.rank();
}

bool ResonanceTester::is_resonant_1(const ExtElement& point) const { return annihilator_dim(point) >= 2; }

bool is_resonant_1(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point) {
  return ResonanceTester(a, alg).is_resonant_1(point);
}

ResonanceKVerdict is_resonant_k(const Arrangement& a, const ExteriorAlgebra& alg, const ExtElement& point, int k) {
  ResonanceKVerdict v;
  const auto prof = aomoto_profile(a, alg, point, k);
  v.cohomology_nonzero = prof.h[k] != 0;

  // K = {ρ ∈ Λ^k : a∧ρ ∈ I_{k+1}} contains both I_k and Z = ker(a∧). A witness
  // exists iff K is strictly larger than each (no space is a union of two proper subspaces).
  const Subspace ik = os_ideal_part(a, alg, k);
  const Subspace ik1 = os_ideal_part(a, alg, k + 1);
  const Subspace none(alg, k, {});
  const Subspace zero_next(alg, k + 1, {});
  const std::size_t dk = alg.basis(k).size();
  const std::size_t dim_k = dk - multiplication_matrix(alg, point, none, ik1).rank();
  const std::size_t dim_z = dk - multiplication_matrix(alg, point, none, zero_next).rank();
  v.witness_exists = dim_k > ik.dim() && dim_k > dim_z;
  return v;
}

std::vector<std::vector<Coeff>> enumerate_r1(const Arrangement& a, std::uint32_t q, std::uint64_t budget) {
  const PrimeField field(q);
  const ExteriorAlgebra alg(a.n, field);
  const std::size_t n = static_cast<std::size_t>(a.n);
  const std::uint64_t count = projective_count(q, n);
  require_budget(count, budget, "R^1 enumeration");
  const ResonanceTester tester(a, alg);

  std::vector<std::vector<Coeff>> out;
  std::mutex mu;
  parallel_chunks(count, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    std::vector<std::vector<Coeff>> local;
    std::vector<Coeff> pt(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      projective_point(q, n, idx, pt);
      if (tester.is_resonant_1(alg.linear(pt))) local.push_back(pt);
    }
    std::lock_guard lock(mu);
    out.insert(out.end(), local.begin(), local.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

PlaneCheckReport check_plane_union(const Arrangement& a, std::uint32_t q, std::uint64_t budget) {
  PlaneCheckReport rep;
  rep.planes = decomposables_in_I2_bruteforce(a, q, budget);
  rep.resonant_points = enumerate_r1(a, q, budget);

  std::vector<std::vector<Coeff>> on_planes;
  std::size_t total = 0;
  for (const auto& p : rep.planes) {
    const auto pts = plane_points(p, q);
    total += pts.size();
    on_planes.insert(on_planes.end(), pts.begin(), pts.end());
  }
  std::sort(on_planes.begin(), on_planes.end());
  on_planes.erase(std::unique(on_planes.begin(), on_planes.end()), on_planes.end());
  rep.planes_disjoint = on_planes.size() == total;

  std::set_difference(rep.resonant_points.begin(), rep.resonant_points.end(), on_planes.begin(), on_planes.end(),
                      std::back_inserter(rep.only_resonant));
  std::set_difference(on_planes.begin(), on_planes.end(), rep.resonant_points.begin(), rep.resonant_points.end(),
                      std::back_inserter(rep.only_planes));
  rep.agree = rep.only_resonant.empty() && rep.only_planes.empty();
  return rep;
}

}  // namespace resgrass
