#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resgrass/arrangement.hpp"
#include "resgrass/scalars.hpp"

namespace resgrass {

/// Subset of {0..63} as a bitmask; bit i stands for e_i.
using Mask = std::uint64_t;

Mask to_mask(const IndexSet& s);
IndexSet from_mask(Mask m);

/// Lex order on sorted index tuples of equal size: the smaller set owns the
/// lowest index where the two differ.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

/// Homogeneous element of the exterior algebra: coefficients on e_S for
/// |S| = grade, kept sorted by lex_less with no zero entries.
class ExtElement {
 public:
  using Term = std::pair<Mask, Coeff>;

  ExtElement() = default;
  explicit ExtElement(int grade) : grade_(grade) {}
  /// Terms may be unsorted and repeated; they are combined in `field`.
  ExtElement(int grade, std::vector<Term> terms, const PrimeField& field);

  int grade() const { return grade_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Coeff coeff(Mask s) const;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  int grade_ = 0;
  std::vector<Term> terms_;
};

/// Λ(F_p^n) with lex-ordered monomial bases in each grade.
class ExteriorAlgebra {
 public:
  ExteriorAlgebra(int n, PrimeField field);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }

  /// Lex-sorted k-subsets.
  const std::vector<Mask>& basis(int k) const { return bases_.at(k); }
  std::size_t index_of(Mask s) const { return index_.at(s); }

  ExtElement unit() const;
  ExtElement e(int i) const;
  ExtElement e(const IndexSet& s) const;
  /// Σ c_i e_i.
  ExtElement linear(std::span<const Coeff> coeffs) const;
  /// Σ c_i e_i with signed integer coefficients.
  ExtElement linear_int(std::span<const std::int64_t> coeffs) const;

  ExtElement add(const ExtElement& x, const ExtElement& y) const;
  ExtElement sub(const ExtElement& x, const ExtElement& y) const;
  ExtElement scale(Coeff c, const ExtElement& x) const;
  ExtElement wedge(const ExtElement& x, const ExtElement& y) const;

  /// ∂e_S = Σ_q (-1)^(q-1) e_{S \ s_q}. Throws MathError on the empty set.
  ExtElement boundary(const IndexSet& s) const;
  /// ∂ extended linearly to a homogeneous element.
  ExtElement boundary(const ExtElement& x) const;

  /// Dense coordinates in basis(grade).
  std::vector<Coeff> to_vector(const ExtElement& x) const;
  ExtElement from_vector(int grade, std::span<const Coeff> v) const;

 private:
  int n_;
  PrimeField field_;
  std::vector<std::vector<Mask>> bases_;
  std::unordered_map<Mask, std::size_t> index_;
};

/// Sign of e_a ∧ e_b for disjoint a, b: (-1)^{#{(i,j) : i ∈ a, j ∈ b, i > j}}.
int wedge_sign(Mask a, Mask b);

/// Linear subspace of Λ^k held as a reduced row echelon basis over the lex basis.
class Subspace {
 public:
  Subspace(const ExteriorAlgebra& alg, int grade, std::span<const ExtElement> spanning);

  int grade() const { return grade_; }
  std::size_t dim() const { return echelon_.rows(); }
  std::size_t ambient_dim() const { return echelon_.cols(); }
  const Matrix& echelon() const { return echelon_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis indices not used as pivots; they index a basis of Λ^k / this.
  const std::vector<std::size_t>& complement() const { return complement_; }

  std::vector<ExtElement> basis(const ExteriorAlgebra& alg) const;

  /// Canonical coset representative: dense vector vanishing on pivot columns.
  std::vector<Coeff> reduce(std::vector<Coeff> v) const;
  bool contains(const ExteriorAlgebra& alg, const ExtElement& x) const;

 private:
  int grade_;
  Matrix echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> complement_;
};

/// Degree-k part of the Orlik-Solomon ideal, spanned by e_J ∧ ∂e_S over
/// dependent S with |J| + |S| - 1 = k.
Subspace os_ideal_part(const Arrangement& a, const ExteriorAlgebra& alg, int k);

}  // namespace resgrass
