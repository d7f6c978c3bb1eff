#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "resgrass/exterior.hpp"
#include "resgrass/scalars.hpp"

namespace resgrass::support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234);
  return gen;
}

inline Coeff random_coeff(const PrimeField& f) {
  return static_cast<Coeff>(std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng()));
}

inline Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, double density = 1.0) {
  Matrix m(f, r, c);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng())) m(i, j) = random_coeff(f);
  return m;
}

// Random grade-1 element whose coefficients do not sum to zero.
inline ExtElement random_exact_point(const ExteriorAlgebra& alg) {
  const auto& f = alg.field();
  std::vector<Coeff> v(alg.n());
  for (;;) {
    Coeff sum = 0;
    for (auto& c : v) {
      c = random_coeff(f);
      sum = f.add(sum, c);
    }
    if (sum != 0) return alg.linear(v);
  }
}

}  // namespace resgrass::support

#include <map>

#include "resgrass/grobner.hpp"
#include "resgrass/hilbert.hpp"

namespace resgrass::support {

inline void monomials_rec(int nvars, int var, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (var == nvars - 1) {
    cur[var] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[var] = e;
    monomials_rec(nvars, var + 1, left - e, cur, out);
  }
}

inline std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
  std::vector<std::vector<int>> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(nvars, 0);
  monomials_rec(nvars, 0, d, cur, out);
  return out;
}

inline Monomial mono(const std::vector<int>& e) { return Monomial::from_exponents(e); }

inline Poly random_homogeneous(const PolyRing& ring, int degree, int terms) {
  const auto all = monomials_of_degree(static_cast<int>(ring.nvars()), degree);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<std::pair<Monomial, Coeff>> t;
  for (int i = 0; i < terms; ++i) {
    Coeff c = random_coeff(ring.field());
    t.emplace_back(mono(all[pick(rng())]), c ? c : 1);
  }
  return ring.make(std::move(t));
}

// Dimension of the degree-d part of the homogeneous ideal generated by gens, by linear algebra on m*g.
inline std::size_t ideal_dim_in_degree(const PolyRing& ring, const std::vector<Poly>& gens, int d) {
  const int n = static_cast<int>(ring.nvars());
  const auto basis = monomials_of_degree(n, d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Matrix m(ring.field(), 0, basis.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int gd = ring.leading_monomial(g).degree();
    if (gd > d) continue;
    for (const auto& mult : monomials_of_degree(n, d - gd)) {
      const Poly p = ring.mul_term(1, mono(mult), g);
      std::vector<Coeff> row(basis.size(), 0);
      for (std::size_t t = 0; t < p.size(); ++t) row[index.at(ring.monomial(p, t).exponents())] = p.coeffs[t];
      m.append_row(row);
    }
  }
  return m.rank();
}

inline std::size_t standard_count(const MonomialIdeal& m, int nvars, int d) {
  std::size_t count = 0;
  for (const auto& e : monomials_of_degree(nvars, d))
    if (!m.contains(e)) ++count;
  return count;
}

inline MonomialIdeal random_monomial_ideal(int nvars, int ngens, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::vector<Exponents> gens;
  for (int i = 0; i < ngens; ++i) {
    const auto all = monomials_of_degree(nvars, deg(rng()));
    gens.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng())]);
  }
  return MonomialIdeal(nvars, gens);
}

}  // namespace resgrass::support
