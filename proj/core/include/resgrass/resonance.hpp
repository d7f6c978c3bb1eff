#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resgrass/arrangement.hpp"
#include "resgrass/exterior.hpp"
#include "resgrass/grobner.hpp"
#include "resgrass/hilbert.hpp"

namespace resgrass {

/// Point of P(Λ²E₁) in Plücker coordinates w_{ij}, i < j, lex order.
struct PluckerPoint {
  std::vector<Coeff> coords;
  friend auto operator<=>(const PluckerPoint&, const PluckerPoint&) = default;
};

/// A 2-plane in E₁ = F_q^n, stored by its reduced row echelon basis.
struct Plane {
  std::array<std::vector<Coeff>, 2> rows;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

/// One point per dependent triple {i<j<k}: w_ij = 1, w_ik = -1, w_jk = 1.
std::vector<PluckerPoint> os_points(const Arrangement& a, const PrimeField& field);

/// Echelon basis of the linear forms vanishing on every point.
std::vector<Poly> span_forms(const std::vector<PluckerPoint>& pts, const PolyRing& ring);

struct ResonanceOptions {
  MonomialOrder order = MonomialOrder::grevlex;
  /// Solve the linear forms before Buchberger instead of adding them as generators.
  bool eliminate_linear = true;
};

struct ResonanceReport {
  std::string arrangement;
  int n = 0;
  HilbertPoly hilbert;
  std::size_t n_os_points = 0;
  std::size_t n_span_forms = 0;
  std::size_t groebner_size = 0;
  std::size_t ring_vars = 0;  // variables left for Buchberger
  /// Wall-clock milliseconds per stage: span, eliminate, groebner, hilbert, total.
  std::map<std::string, double> timings_ms;
};

/// Hilbert polynomial of the intersection of G(2,n) with the span of the
/// Orlik-Solomon points; its support is the set of 2-planes whose lines make up R¹.
ResonanceReport r1_hilbert(const Arrangement& a, const PrimeField& field, const ResonanceOptions& opts = {});

/// u ∧ u = 0, tested through the Plücker quadrics (valid in every characteristic).
bool is_decomposable(const ExteriorAlgebra& alg, const ExtElement& u);

/// (λ, μ) with λ ∧ μ = u; λ and the direction of μ are the echelon basis of
/// {a : a ∧ u = 0}. Throws MathError for zero or indecomposable u.
std::pair<ExtElement, ExtElement> factor_decomposable(const ExteriorAlgebra& alg, const ExtElement& u);

/// The 2-plane {a : a ∧ u = 0} of a nonzero decomposable u.
Plane plane_of(const ExteriorAlgebra& alg, const ExtElement& u);

/// All points of P(I₂)(F_q) that are decomposable, as the planes they span (sorted).
std::vector<Plane> decomposables_in_I2_bruteforce(const Arrangement& a, std::uint32_t q, std::uint64_t budget);

/// Normalized F_q-points of a plane (q + 1 of them), sorted.
std::vector<std::vector<Coeff>> plane_points(const Plane& p, std::uint32_t q);

}  // namespace resgrass
