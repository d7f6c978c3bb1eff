#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resgrass/grobner.hpp"

namespace resgrass {

/// Exponent vector of a monomial generator.
using Exponents = std::vector<int>;

/// Monomial ideal by its divisibility-minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Drops duplicates and non-minimal generators; keeps the rest sorted.
  MonomialIdeal(std::size_t nvars, std::vector<Exponents> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool contains(const Exponents& m) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Exponents> gens_;
};

/// Integer polynomial in t, coefficient of t^k at index k.
using IntPoly = std::vector<std::int64_t>;

/// Σ c_i · P_i with P_i(d) = C(d+i, i).
struct HilbertPoly {
  std::map<int, std::int64_t> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::int64_t evaluate(std::int64_t d) const;
  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

MonomialIdeal leading_ideal(const GroebnerBasis& gb);

/// h(t) with Σ_d dim(k[x]/m)_d t^d = h(t) / (1-t)^nvars.
IntPoly hilbert_numerator(const MonomialIdeal& m);

/// dim (k[x]/m)_d read off the numerator.
std::int64_t hilbert_function(const IntPoly& numerator, std::size_t nvars, std::int64_t d);

HilbertPoly hilbert_polynomial(const IntPoly& numerator, std::size_t nvars);

/// "54*P_0 + 10*P_2"; the zero polynomial prints as "0".
std::string format_hp(const HilbertPoly& hp);

/// Binomial coefficient C(n, k) for n possibly negative (zero when k < 0).
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace resgrass
