#include "resgrass/exterior.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "resgrass/errors.hpp"

namespace resgrass {

namespace {

struct LexLess {
  bool operator()(Mask a, Mask b) const { return lex_less(a, b); }
};

}  // namespace

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (int i : s) {
    if (i < 0 || i >= 64) throw MathError("index out of range for exterior algebra");
    const Mask bit = Mask{1} << i;
    if (m & bit) throw MathError("repeated index in exterior monomial");
    m |= bit;
  }
  return m;
}

IndexSet from_mask(Mask m) {
  IndexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const Mask above = j == 63 ? 0 : ~((Mask{1} << (j + 1)) - 1);
    inversions += std::popcount(a & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExtElement::ExtElement(int grade, std::vector<Term> terms, const PrimeField& field) : grade_(grade) {
  std::map<Mask, Coeff, LexLess> acc;
  for (const auto& [s, c] : terms) {
    if (std::popcount(s) != grade) throw MathError("term grade differs from element grade");
    auto& slot = acc[s];
    slot = field.add(slot, c % field.modulus());
  }
  for (const auto& [s, c] : acc)
    if (c != 0) terms_.emplace_back(s, c);
}

Coeff ExtElement::coeff(Mask s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, Mask m) { return lex_less(t.first, m); });
  return it != terms_.end() && it->first == s ? it->second : 0;
}

ExteriorAlgebra::ExteriorAlgebra(int n, PrimeField field) : n_(n), field_(field) {
  if (n < 0 || n > 20) throw MathError("exterior algebra rank must lie in [0, 20]");
  bases_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    for (const auto& s : subsets(n, k)) {
      const Mask m = to_mask(s);
      index_[m] = bases_[k].size();
      bases_[k].push_back(m);
    }
  }
}

ExtElement ExteriorAlgebra::unit() const { return ExtElement(0, {{0, 1}}, field_); }

ExtElement ExteriorAlgebra::e(int i) const { return e(IndexSet{i}); }

ExtElement ExteriorAlgebra::e(const IndexSet& s) const {
  IndexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  int sign = 1;
  // Sign of the permutation sorting s.
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) sign = -sign;
  return ExtElement(static_cast<int>(s.size()), {{to_mask(s), sign > 0 ? 1 : field_.neg(1)}}, field_);
}

ExtElement ExteriorAlgebra::linear(std::span<const Coeff> coeffs) const {
  std::vector<ExtElement::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] % field_.modulus() != 0) terms.emplace_back(Mask{1} << i, coeffs[i]);
  return ExtElement(1, std::move(terms), field_);
}

ExtElement ExteriorAlgebra::linear_int(std::span<const std::int64_t> coeffs) const {
  std::vector<Coeff> c;
  for (auto v : coeffs) c.push_back(field_.reduce(v));
  return linear(c);
}

ExtElement ExteriorAlgebra::add(const ExtElement& x, const ExtElement& y) const {
  if (x.grade() != y.grade() && !x.is_zero() && !y.is_zero())
    throw MathError("adding elements of different grades");
  auto terms = x.terms();
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return ExtElement(x.is_zero() ? y.grade() : x.grade(), std::move(terms), field_);
}

ExtElement ExteriorAlgebra::sub(const ExtElement& x, const ExtElement& y) const {
  return add(x, scale(field_.neg(1), y));
}

ExtElement ExteriorAlgebra::scale(Coeff c, const ExtElement& x) const {
  std::vector<ExtElement::Term> terms;
  for (const auto& [s, v] : x.terms()) terms.emplace_back(s, field_.mul(c, v));
  return ExtElement(x.grade(), std::move(terms), field_);
}

ExtElement ExteriorAlgebra::wedge(const ExtElement& x, const ExtElement& y) const {
  std::vector<ExtElement::Term> terms;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if (a & b) continue;
      const Coeff c = field_.mul(ca, cb);
      terms.emplace_back(a | b, wedge_sign(a, b) > 0 ? c : field_.neg(c));
    }
  return ExtElement(x.grade() + y.grade(), std::move(terms), field_);
}

ExtElement ExteriorAlgebra::boundary(const IndexSet& s) const {
  if (s.empty()) throw MathError("boundary of the empty set");
  const Mask m = to_mask(s);
  std::vector<ExtElement::Term> terms;
  int q = 0;
  for (Mask rest = m; rest; rest &= rest - 1, ++q) {
    const Mask bit = rest & (~rest + 1);
    terms.emplace_back(m ^ bit, q % 2 == 0 ? 1 : field_.neg(1));
  }
  return ExtElement(static_cast<int>(s.size()) - 1, std::move(terms), field_);
}

ExtElement ExteriorAlgebra::boundary(const ExtElement& x) const {
  if (x.grade() == 0) return ExtElement(0);
  std::vector<ExtElement::Term> terms;
  for (const auto& [s, c] : x.terms()) {
    const ExtElement b = boundary(from_mask(s));
    for (const auto& [t, d] : b.terms()) terms.emplace_back(t, field_.mul(c, d));
  }
  return ExtElement(x.grade() - 1, std::move(terms), field_);
}

std::vector<Coeff> ExteriorAlgebra::to_vector(const ExtElement& x) const {
  std::vector<Coeff> v(basis(x.grade()).size(), 0);
  for (const auto& [s, c] : x.terms()) v[index_of(s)] = c;
  return v;
}

ExtElement ExteriorAlgebra::from_vector(int grade, std::span<const Coeff> v) const {
  const auto& b = basis(grade);
  if (v.size() != b.size()) throw MathError("vector length differs from grade dimension");
  std::vector<ExtElement::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.emplace_back(b[i], v[i]);
  return ExtElement(grade, std::move(terms), field_);
}

Subspace::Subspace(const ExteriorAlgebra& alg, int grade, std::span<const ExtElement> spanning)
    : grade_(grade), echelon_(alg.field(), 0, alg.basis(grade).size()) {
  for (const auto& x : spanning) {
    if (x.is_zero()) continue;
    if (x.grade() != grade) throw MathError("spanning element has the wrong grade");
    echelon_.append_row(alg.to_vector(x));
  }
  pivots_ = echelon_.rref();
  std::vector<bool> used(echelon_.cols(), false);
  for (auto p : pivots_) used[p] = true;
  for (std::size_t c = 0; c < used.size(); ++c)
    if (!used[c]) complement_.push_back(c);
}

std::vector<ExtElement> Subspace::basis(const ExteriorAlgebra& alg) const {
  std::vector<ExtElement> out;
  for (std::size_t r = 0; r < echelon_.rows(); ++r) out.push_back(alg.from_vector(grade_, echelon_.row(r)));
  return out;
}

std::vector<Coeff> Subspace::reduce(std::vector<Coeff> v) const {
  const auto& f = echelon_.field();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Coeff c = v[pivots_[r]];
    if (c == 0) continue;
    const auto row = echelon_.row(r);
    for (std::size_t j = pivots_[r]; j < v.size(); ++j)
      if (row[j] != 0) v[j] = f.sub(v[j], f.mul(c, row[j]));
  }
  return v;
}

bool Subspace::contains(const ExteriorAlgebra& alg, const ExtElement& x) const {
  if (x.is_zero()) return true;
  if (x.grade() != grade_) return false;
  const auto r = reduce(alg.to_vector(x));
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

Subspace os_ideal_part(const Arrangement& a, const ExteriorAlgebra& alg, int k) {
  if (k < 0 || k > alg.n()) throw MathError("grade out of range");
  std::vector<ExtElement> gens;
  for (const auto& s : dependent_sets(a, k + 1, alg.field())) {
    const auto ds = alg.boundary(s);
    const int j = k + 1 - static_cast<int>(s.size());
    for (const auto& jset : subsets(alg.n(), j)) gens.push_back(alg.wedge(alg.e(jset), ds));
  }
  return Subspace(alg, k, gens);
}

}  // namespace resgrass
