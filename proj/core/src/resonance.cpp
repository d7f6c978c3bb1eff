#include "resgrass/resonance.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "resgrass/enumerate.hpp"
#include "resgrass/errors.hpp"

namespace resgrass {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

std::vector<PluckerPoint> os_points(const Arrangement& a, const PrimeField& field) {
  std::vector<PluckerPoint> out;
  for (const auto& t : a.dependent_triples()) {
    PluckerPoint p{std::vector<Coeff>(pair_count(a.n), 0)};
    p.coords[plucker_var(a.n, t[0], t[1])] = 1;
    p.coords[plucker_var(a.n, t[0], t[2])] = field.neg(1);
    p.coords[plucker_var(a.n, t[1], t[2])] = 1;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> span_forms(const std::vector<PluckerPoint>& pts, const PolyRing& ring) {
  Matrix eval(ring.field(), 0, ring.nvars());
  for (const auto& p : pts) eval.append_row(p.coords);
  std::vector<Poly> forms;
  for (const auto& v : kernel_basis(eval)) {
    std::vector<std::pair<Monomial, Coeff>> terms;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) terms.emplace_back(ring.variable_monomial(k), v[k]);
    forms.push_back(ring.monic(ring.make(std::move(terms))));
  }
  return forms;
}

ResonanceReport r1_hilbert(const Arrangement& a, const PrimeField& field, const ResonanceOptions& opts) {
  const auto start = Clock::now();
  ResonanceReport rep;
  rep.arrangement = a.name;
  rep.n = a.n;

  auto t0 = Clock::now();
  const PolyRing ring = plucker_ring(a.n, field, opts.order);
  const auto pts = os_points(a, field);
  rep.n_os_points = pts.size();
  if (pts.empty()) {
    // No Orlik-Solomon relations in degree 2: the linear span is empty.
    rep.n_span_forms = ring.nvars();
    rep.timings_ms = {{"span", ms_since(t0)}, {"eliminate", 0.0}, {"groebner", 0.0}, {"hilbert", 0.0}};
    rep.timings_ms["total"] = ms_since(start);
    return rep;
  }
  const auto forms = span_forms(pts, ring);
  rep.n_span_forms = forms.size();
  const auto quadrics = plucker_ideal(ring, a.n);
  rep.timings_ms["span"] = ms_since(t0);

  t0 = Clock::now();
  PolyRing work = ring;
  std::vector<Poly> gens;
  if (opts.eliminate_linear) {
    auto elim = eliminate_linear(ring, forms, quadrics);
    work = elim.ring;
    gens = std::move(elim.polys);
  } else {
    gens = forms;
    gens.insert(gens.end(), quadrics.begin(), quadrics.end());
  }
  rep.ring_vars = work.nvars();
  rep.timings_ms["eliminate"] = ms_since(t0);

  t0 = Clock::now();
  const auto gb = buchberger(work, std::move(gens));
  rep.groebner_size = gb.generators.size();
  rep.timings_ms["groebner"] = ms_since(t0);

  t0 = Clock::now();
  rep.hilbert = hilbert_polynomial(hilbert_numerator(leading_ideal(gb)), work.nvars());
  rep.timings_ms["hilbert"] = ms_since(t0);
  rep.timings_ms["total"] = ms_since(start);
  return rep;
}

bool is_decomposable(const ExteriorAlgebra& alg, const ExtElement& u) {
  if (u.grade() != 2 && !u.is_zero()) throw MathError("decomposability is tested on grade-2 elements");
  const auto& f = alg.field();
  const auto w = [&](int i, int j) { return u.coeff((Mask{1} << i) | (Mask{1} << j)); };
  const int n = alg.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const Coeff v = f.add(f.sub(f.mul(w(a, b), w(c, d)), f.mul(w(a, c), w(b, d))), f.mul(w(a, d), w(b, c)));
          if (v != 0) return false;
        }
  return true;
}

Plane plane_of(const ExteriorAlgebra& alg, const ExtElement& u) {
  if (u.grade() != 2 || u.is_zero()) throw MathError("factorization needs a nonzero grade-2 element");
  const int n = alg.n();
  // Columns: images e_i ∧ u in Λ³.
  Matrix m(alg.field(), alg.basis(3).size(), n);
  for (int i = 0; i < n; ++i) {
    const auto img = alg.to_vector(alg.wedge(alg.e(i), u));
    for (std::size_t r = 0; r < img.size(); ++r) m(r, i) = img[r];
  }
  auto ker = kernel_basis(m);
  if (ker.size() != 2) throw MathError("element is not decomposable");
  Matrix basis = Matrix::from_rows(alg.field(), ker, n);
  basis.rref();
  return Plane{{std::vector<Coeff>(basis.row(0).begin(), basis.row(0).end()),
                std::vector<Coeff>(basis.row(1).begin(), basis.row(1).end())}};
}

std::pair<ExtElement, ExtElement> factor_decomposable(const ExteriorAlgebra& alg, const ExtElement& u) {
  const Plane p = plane_of(alg, u);
  const auto lambda = alg.linear(p.rows[0]);
  auto mu = alg.linear(p.rows[1]);
  const auto prod = alg.wedge(lambda, mu);
  // prod = c * u for a nonzero scalar c.
  const Mask lead = prod.terms().front().first;
  const Coeff c = alg.field().div(prod.terms().front().second, u.coeff(lead));
  mu = alg.scale(alg.field().inv(c), mu);
  if (alg.wedge(lambda, mu) != u) throw MathError("element is not decomposable");
  return {lambda, mu};
}

namespace {

// Walks F_q^d \ {0} in modular Gray order: step idx -> idx+1 adds basis vector m, where m is the
// number of trailing (q-1) digits of idx. Coordinates are Λ² vectors in lex pair order.
template <class T>
class GrayWalk {
 public:
  GrayWalk(int n, std::uint32_t q, const std::vector<std::vector<Coeff>>& basis)
      : n_(n), q_(q), len_(basis.front().size()), dim_(basis.size()) {
    for (const auto& b : basis) flat_.insert(flat_.end(), b.begin(), b.end());
    for (const auto& s : subsets(n, 2)) pairs_.emplace_back(s[0], s[1]);
  }

  // State for affine index idx: Σ g_k b_k with g_k = d_k - d_{k+1} mod q.
  void seek(std::uint64_t idx, std::vector<T>& v) const {
    std::fill(v.begin(), v.end(), T{0});
    std::vector<std::uint64_t> digits(dim_ + 1, 0);
    for (std::size_t k = 0; k < dim_; ++k, idx /= q_) digits[k] = idx % q_;
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::uint64_t r = (digits[k] + q_ - digits[k + 1]) % q_; r > 0; --r) add(v, k);
  }

  void step(std::uint64_t idx, std::vector<T>& v) const {
    std::size_t m = 0;
    for (std::uint64_t x = idx; x % q_ == q_ - 1; x /= q_) ++m;
    add(v, m);
  }

  // Nonzero v is decomposable iff v_kl v_ij = v_ik v_jl - v_il v_jk for the first nonzero v_ij.
  bool decomposable(const std::vector<T>& v) const {
    std::size_t piv = 0;
    while (piv < len_ && v[piv] == 0) ++piv;
    if (piv == len_) return false;
    const int i = pairs_[piv].first, j = pairs_[piv].second;
    const auto at = [&](int a, int b) -> std::int64_t {
      if (a == b) return 0;
      return a < b ? v[index(a, b)] : static_cast<std::int64_t>(q_) - v[index(b, a)];
    };
    const std::int64_t vij = v[piv];
    for (int k = 0; k < n_; ++k) {
      if (k == i || k == j) continue;
      const std::int64_t vik = at(i, k), vjk = at(j, k);
      for (int l = k + 1; l < n_; ++l) {
        if (l == i || l == j) continue;
        const std::int64_t lhs = vij * v[index(k, l)];
        const std::int64_t rhs = vik * at(j, l) - at(i, l) * vjk;
        if ((lhs - rhs) % static_cast<std::int64_t>(q_) != 0) return false;
      }
    }
    return true;
  }

 private:
  std::size_t index(int a, int b) const { return plucker_var(n_, a, b); }

  void add(std::vector<T>& v, std::size_t k) const {
    const Coeff* b = flat_.data() + k * len_;
    for (std::size_t t = 0; t < len_; ++t) {
      const unsigned s = static_cast<unsigned>(v[t]) + b[t];
      v[t] = static_cast<T>(s >= q_ ? s - q_ : s);
    }
  }

  int n_;
  std::uint32_t q_;
  std::size_t len_;
  std::size_t dim_;
  std::vector<Coeff> flat_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

std::vector<Plane> decomposables_in_I2_bruteforce(const Arrangement& a, std::uint32_t q, std::uint64_t budget) {
  const PrimeField field(q);
  if (q > 255) throw InputError("brute-force enumeration needs q < 256");
  const ExteriorAlgebra alg(a.n, field);
  std::vector<std::vector<Coeff>> basis;
  for (const auto& b : os_ideal_part(a, alg, 2).basis(alg)) basis.push_back(alg.to_vector(b));
  const std::size_t d = basis.size();
  if (d == 0) return {};
  require_budget(projective_count(q, d), budget, "decomposables in I_2");
  const std::uint64_t affine = (q - 1) * projective_count(q, d) + 1;

  const GrayWalk<std::uint8_t> walk(a.n, q, basis);
  std::vector<Plane> planes;
  std::mutex mu;
  parallel_chunks(affine - 1, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    std::vector<std::uint8_t> v(basis.front().size());
    std::vector<Plane> local;
    // chunk [begin, end) covers affine indices begin+1 .. end
    walk.seek(begin + 1, v);
    for (std::uint64_t idx = begin + 1; idx <= end; ++idx) {
      if (idx > begin + 1) walk.step(idx - 1, v);
      if (walk.decomposable(v)) {
        const std::vector<Coeff> c(v.begin(), v.end());
        local.push_back(plane_of(alg, alg.from_vector(2, c)));
      }
    }
    std::lock_guard lock(mu);
    planes.insert(planes.end(), local.begin(), local.end());
  });
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
  return planes;
}

std::vector<std::vector<Coeff>> plane_points(const Plane& p, std::uint32_t q) {
  const PrimeField field(q);
  std::vector<std::vector<Coeff>> out;
  const std::size_t n = p.rows[0].size();
  std::vector<Coeff> coeffs(2);
  for (std::uint64_t idx = 0; idx < projective_count(q, 2); ++idx) {
    projective_point(q, 2, idx, coeffs);
    std::vector<Coeff> v(n);
    for (std::size_t k = 0; k < n; ++k)
      v[k] = field.add(field.mul(coeffs[0], p.rows[0][k]), field.mul(coeffs[1], p.rows[1][k]));
    normalize_projective(field, v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace resgrass
