#include "resgrass/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "resgrass/errors.hpp"

namespace resgrass {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

int degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    const int da = degree(a), db = degree(b);
    return da != db ? da < db : a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Exponents& o) { return divides(o, g); }))
      out.push_back(std::move(g));
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("Hilbert series coefficient overflow");
  return r;
}

void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift, std::int64_t sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] = checked_add(acc[k + shift], sign * p[k]);
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Numerator for minimal generators `gens` (Bayer-Stillman pivot recursion).
IntPoly numerator(std::vector<Exponents> gens) {
  if (gens.empty()) return {1};
  const std::size_t nv = gens.front().size();

  // Every generator a pure power: complete intersection.
  bool pure = true;
  for (const auto& g : gens)
    pure = pure && std::count_if(g.begin(), g.end(), [](int e) { return e > 0; }) <= 1;
  if (pure || gens.size() == 1) {
    if (gens.size() == 1) {
      IntPoly p(degree(gens[0]) + 1, 0);
      p[0] = 1;
      p.back() = checked_add(p.back(), -1);
      trim(p);
      return p;
    }
    IntPoly acc{1};
    for (const auto& g : gens) {
      IntPoly next = acc;
      add_shifted(next, acc, degree(g), -1);
      acc = std::move(next);
    }
    trim(acc);
    return acc;
  }

  // Pivot x_var^e on the variable occurring in the most mixed (non pure power)
  // generators, e taken from those generators so that x_var^e ∉ I.
  const auto is_mixed = [](const Exponents& g) {
    return std::count_if(g.begin(), g.end(), [](int x) { return x > 0; }) > 1;
  };
  std::vector<int> count(nv, 0);
  for (const auto& g : gens)
    if (is_mixed(g))
      for (std::size_t v = 0; v < nv; ++v)
        if (g[v] > 0) ++count[v];
  const std::size_t var = std::max_element(count.begin(), count.end()) - count.begin();
  std::vector<int> exps;
  for (const auto& g : gens)
    if (is_mixed(g) && g[var] > 0) exps.push_back(g[var]);
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  const int e = exps[exps.size() / 2];
  Exponents pivot(nv, 0);
  pivot[var] = e;

  // N(I) = N(I + <p>) + t^deg(p) N(I : p)
  std::vector<Exponents> sum{pivot};
  for (const auto& g : gens)
    if (!divides(pivot, g)) sum.push_back(g);
  std::vector<Exponents> colon;
  for (auto g : gens) {
    g[var] = std::max(0, g[var] - e);
    colon.push_back(std::move(g));
  }
  IntPoly out = numerator(minimalize(std::move(sum)));
  add_shifted(out, numerator(minimalize(std::move(colon))), e, 1);
  trim(out);
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponents> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw MathError("generator has the wrong number of variables");
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Exponents& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return divides(g, m); });
}

MonomialIdeal leading_ideal(const GroebnerBasis& gb) {
  std::vector<Exponents> gens;
  for (const auto& g : gb.generators) gens.push_back(gb.ring.leading_monomial(g).exponents());
  return MonomialIdeal(gb.ring.nvars(), std::move(gens));
}

IntPoly hilbert_numerator(const MonomialIdeal& m) { return numerator(m.generators()); }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    const std::int64_t b = binomial(k - n - 1, k);
    return k % 2 == 0 ? b : -b;
  }
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw MathError("binomial coefficient overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t hilbert_function(const IntPoly& numerator, std::size_t nvars, std::int64_t d) {
  // coefficient of t^d in h(t) / (1-t)^n is Σ_j h_j C(d - j + n - 1, n - 1)
  std::int64_t acc = 0;
  const auto n = static_cast<std::int64_t>(nvars);
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    const std::int64_t dj = d - static_cast<std::int64_t>(j);
    if (dj < 0) break;
    const std::int64_t b = n == 0 ? (dj == 0 ? 1 : 0) : binomial(dj + n - 1, n - 1);
    acc = checked_add(acc, checked_mul(numerator[j], b));
  }
  return acc;
}

HilbertPoly hilbert_polynomial(const IntPoly& numerator, std::size_t nvars) {
  IntPoly g = numerator;
  trim(g);
  HilbertPoly hp;
  if (g.empty()) return hp;
  // Strip factors (1 - t): g(1) = 0 means (1 - t) | g.
  std::int64_t dim = static_cast<std::int64_t>(nvars);
  while (!g.empty() && std::accumulate(g.begin(), g.end(), std::int64_t{0}) == 0) {
    IntPoly q(g.size() - 1);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < g.size(); ++k) q[k] = run = checked_add(run, g[k]);
    g = std::move(q);
    --dim;
  }
  if (dim <= 0) return hp;
  // t^j / (1-t)^dim contributes P_{dim-1}(d - j) = Σ_i (-1)^i C(j, i) P_{dim-1-i}(d).
  for (std::int64_t i = 0; i < dim; ++i) {
    std::int64_t c = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const std::int64_t term = checked_mul(g[j], binomial(static_cast<std::int64_t>(j), i));
      c = checked_add(c, i % 2 == 0 ? term : -term);
    }
    if (c != 0) hp.coeffs[static_cast<int>(dim - 1 - i)] = c;
  }
  return hp;
}

std::int64_t HilbertPoly::evaluate(std::int64_t d) const {
  std::int64_t acc = 0;
  for (const auto& [i, c] : coeffs) acc = checked_add(acc, checked_mul(c, binomial(d + i, i)));
  return acc;
}

std::string format_hp(const HilbertPoly& hp) {
  if (hp.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : hp.coeffs) {
    if (first) {
      out << c;
    } else {
      out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    }
    out << "*P_" << i;
    first = false;
  }
  return out.str();
}

}  // namespace resgrass
