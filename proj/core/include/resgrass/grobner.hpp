#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resgrass/scalars.hpp"

namespace resgrass {

enum class MonomialOrder { grevlex, lex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& name);

/// Exponent vector stored as [total degree, e_0, ..., e_{n-1}], one byte each.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : bytes_(nvars + 1, 0) {}
  Monomial(const std::uint8_t* raw, std::size_t nvars) : bytes_(raw, raw + nvars + 1) {}
  /// Throws MathError if an exponent or the degree exceeds 255.
  static Monomial from_exponents(std::span<const int> exps);

  std::size_t nvars() const { return bytes_.empty() ? 0 : bytes_.size() - 1; }
  int degree() const { return bytes_[0]; }
  int operator[](std::size_t var) const { return bytes_[var + 1]; }
  std::vector<int> exponents() const { return {bytes_.begin() + 1, bytes_.end()}; }

  const std::uint8_t* data() const { return bytes_.data(); }
  std::uint8_t* data() { return bytes_.data(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Sparse polynomial. Terms are strictly decreasing in the owning ring's order;
/// monomials are packed in `exps` with stride nvars + 1.
struct Poly {
  std::vector<std::uint8_t> exps;
  std::vector<Coeff> coeffs;

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const { return coeffs.empty(); }
  Coeff leading_coeff() const { return coeffs.front(); }

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// F_p[x_0..x_{n-1}] under grevlex or lex, with x_0 the largest variable.
class PolyRing {
 public:
  PolyRing(std::size_t nvars, PrimeField field, MonomialOrder order = MonomialOrder::grevlex,
           std::vector<std::string> names = {});

  std::size_t nvars() const { return nvars_; }
  std::size_t stride() const { return nvars_ + 1; }
  const PrimeField& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  PolyRing with_order(MonomialOrder order) const { return PolyRing(nvars_, field_, order, names_); }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const std::uint8_t* a, const std::uint8_t* b) const;
  int compare(const Monomial& a, const Monomial& b) const { return compare(a.data(), b.data()); }
  bool divides(const std::uint8_t* a, const std::uint8_t* b) const;
  bool divides(const Monomial& a, const Monomial& b) const { return divides(a.data(), b.data()); }
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  /// b / a; requires divides(a, b).
  Monomial quotient(const Monomial& b, const Monomial& a) const;
  Monomial product(const Monomial& a, const Monomial& b) const;
  bool coprime(const Monomial& a, const Monomial& b) const;

  Monomial one() const { return Monomial(nvars_); }
  Monomial variable_monomial(std::size_t var) const;

  Poly zero() const { return {}; }
  Poly constant(Coeff c) const;
  Poly variable(std::size_t var) const;
  /// Combines repeated monomials, drops zeros and sorts.
  Poly make(std::vector<std::pair<Monomial, Coeff>> terms) const;

  Monomial leading_monomial(const Poly& f) const;
  Monomial monomial(const Poly& f, std::size_t i) const { return Monomial(term(f, i), nvars_); }
  const std::uint8_t* term(const Poly& f, std::size_t i) const { return f.exps.data() + i * stride(); }

  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly scale(Coeff c, const Poly& f) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly mul_term(Coeff c, const Monomial& m, const Poly& f) const;
  Poly monic(Poly f) const;
  bool is_homogeneous(const Poly& f) const;

  /// Image of f under x_i -> images[i] (polynomials in `target`).
  Poly substitute(const Poly& f, const std::vector<Poly>& images, const PolyRing& target) const;
  /// Same polynomial re-sorted for this ring (same variables, possibly another order).
  Poly resort(const Poly& f) const;

  /// Value at a point of F_p^n.
  Coeff evaluate(const Poly& f, std::span<const Coeff> point) const;

  std::string to_string(const Poly& f) const;
  std::string to_string(const Monomial& m) const;

 private:
  std::size_t nvars_;
  PrimeField field_;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

/// Variables w_{ij}, i < j < n, in lex order of the pairs.
PolyRing plucker_ring(int n, PrimeField field, MonomialOrder order = MonomialOrder::grevlex);
/// Position of w_{ij} (i < j) in plucker_ring(n).
std::size_t plucker_var(int n, int i, int j);

/// w_ab w_cd - w_ac w_bd + w_ad w_bc for each 4-subset a < b < c < d.
std::vector<Poly> plucker_ideal(const PolyRing& ring, int n);

struct GroebnerBasis {
  PolyRing ring;
  /// Monic, inter-reduced, sorted by increasing leading monomial.
  std::vector<Poly> generators;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_degree = 0;
};

/// Full reduction of f by the leading terms of `basis`.
Poly normal_form(const Poly& f, const GroebnerBasis& basis);
Poly normal_form(const PolyRing& ring, const Poly& f, std::span<const Poly> divisors);

Poly s_polynomial(const PolyRing& ring, const Poly& f, const Poly& g);

/// Reduced Groebner basis via Buchberger's algorithm with the Gebauer-Moeller
/// update and normal selection strategy.
GroebnerBasis buchberger(const PolyRing& ring, std::vector<Poly> gens, BuchbergerStats* stats = nullptr);

/// Checks that every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Result of solving linear generators for their leading variables and
/// substituting into the remaining generators.
struct LinearElimination {
  PolyRing ring;                         // ring on the surviving variables
  std::vector<std::size_t> kept;         // surviving variable indices in the source ring
  std::vector<Poly> polys;               // substituted nonzero generators
  bool inconsistent = false;             // a nonzero constant was produced
};

LinearElimination eliminate_linear(const PolyRing& ring, std::span<const Poly> linear,
                                   std::span<const Poly> others);

}  // namespace resgrass
