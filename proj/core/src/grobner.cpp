#include "resgrass/grobner.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "resgrass/errors.hpp"

namespace resgrass {

namespace {

// Bit (v mod 64) is set when x_v occurs; a | b requires sev(a) ⊆ sev(b).
std::uint64_t short_exponent(const std::uint8_t* m, std::size_t nvars) {
  std::uint64_t s = 0;
  for (std::size_t v = 0; v < nvars; ++v)
    if (m[v + 1]) s |= std::uint64_t{1} << (v & 63);
  return s;
}

void multiply_into(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t stride) {
  unsigned overflow = 0;
  for (std::size_t k = 0; k < stride; ++k) {
    const unsigned s = unsigned{a[k]} + b[k];
    overflow |= s;
    out[k] = static_cast<std::uint8_t>(s);
  }
  if (overflow > 255) throw MathError("monomial exponent or degree exceeds 255");
}

void push_term(Poly& p, const std::uint8_t* m, std::size_t stride, Coeff c) {
  p.exps.insert(p.exps.end(), m, m + stride);
  p.coeffs.push_back(c);
}

// out = f[f_from..] - c * m * g[g_from..], all inputs sorted decreasingly.
void sub_mul_merge(const PolyRing& ring, const Poly& f, std::size_t f_from, Coeff c,
                   const std::uint8_t* m, const Poly& g, std::size_t g_from, Poly& out,
                   std::vector<std::uint8_t>& scratch) {
  const auto& field = ring.field();
  const std::size_t stride = ring.stride();
  const std::size_t cap = f.size() - f_from + g.size() - g_from;
  out.exps.resize(cap * stride);
  out.coeffs.resize(cap);
  scratch.resize(stride);
  const Coeff neg_c = field.neg(c);

  std::uint8_t* oe = out.exps.data();
  Coeff* oc = out.coeffs.data();
  std::size_t len = 0;
  const auto emit = [&](const std::uint8_t* mono, Coeff coeff) {
    std::memcpy(oe + len * stride, mono, stride);
    oc[len++] = coeff;
  };

  std::size_t i = f_from, j = g_from;
  if (j < g.size()) multiply_into(m, ring.term(g, j), scratch.data(), stride);
  while (i < f.size() && j < g.size()) {
    const int cmp = ring.compare(ring.term(f, i), scratch.data());
    if (cmp > 0) {
      emit(ring.term(f, i), f.coeffs[i]);
      ++i;
      continue;
    }
    const Coeff gc = field.mul(neg_c, g.coeffs[j]);
    if (cmp < 0) {
      emit(scratch.data(), gc);
    } else {
      const Coeff s = field.add(f.coeffs[i], gc);
      if (s != 0) emit(scratch.data(), s);
      ++i;
    }
    if (++j < g.size()) multiply_into(m, ring.term(g, j), scratch.data(), stride);
  }
  if (i < f.size()) {
    const std::size_t rest = f.size() - i;
    std::memcpy(oe + len * stride, ring.term(f, i), rest * stride);
    std::copy(f.coeffs.begin() + i, f.coeffs.end(), oc + len);
    len += rest;
  }
  for (; j < g.size(); ++j) {
    multiply_into(m, ring.term(g, j), oe + len * stride, stride);
    oc[len++] = field.mul(neg_c, g.coeffs[j]);
  }
  out.exps.resize(len * stride);
  out.coeffs.resize(len);
}

// Reduction against a growing list of divisors.
class Reducer {
 public:
  explicit Reducer(const PolyRing& ring) : ring_(ring) {}

  void add(const Poly* p) {
    divisors_.push_back(p);
    sevs_.push_back(short_exponent(ring_.term(*p, 0), ring_.nvars()));
  }
  void clear() {
    divisors_.clear();
    sevs_.clear();
  }

  // Shortest divisor wins; ties go to the earliest.
  const Poly* find_divisor(const std::uint8_t* m) const {
    const std::uint64_t s = short_exponent(m, ring_.nvars());
    const Poly* best = nullptr;
    for (std::size_t k = 0; k < divisors_.size(); ++k) {
      if (sevs_[k] & ~s) continue;
      if ((best == nullptr || divisors_[k]->size() < best->size()) && ring_.divides(ring_.term(*divisors_[k], 0), m))
        best = divisors_[k];
    }
    return best;
  }

  /// Reduces until the leading term is irreducible (or full=true: every term).
  Poly reduce(Poly f, bool full) {
    const auto& field = ring_.field();
    const std::size_t stride = ring_.stride();
    Poly remainder;
    std::size_t pos = 0;
    Poly next;
    std::vector<std::uint8_t> quot(stride);
    while (pos < f.size()) {
      const std::uint8_t* lead = ring_.term(f, pos);
      const Poly* g = find_divisor(lead);
      if (g == nullptr) {
        if (!full) break;
        push_term(remainder, lead, stride, f.coeffs[pos]);
        ++pos;
        continue;
      }
      const std::uint8_t* glead = ring_.term(*g, 0);
      for (std::size_t k = 0; k < stride; ++k) quot[k] = lead[k] - glead[k];
      const Coeff c = field.div(f.coeffs[pos], g->coeffs[0]);
      sub_mul_merge(ring_, f, pos + 1, c, quot.data(), *g, 1, next, scratch_);
      std::swap(f, next);
      pos = 0;
    }
    if (!full) {
      if (pos == 0) return f;
      Poly rest;
      rest.exps.assign(f.exps.begin() + pos * stride, f.exps.end());
      rest.coeffs.assign(f.coeffs.begin() + pos, f.coeffs.end());
      return rest;
    }
    return remainder;
  }

 private:
  const PolyRing& ring_;
  std::vector<const Poly*> divisors_;
  std::vector<std::uint64_t> sevs_;
  std::vector<std::uint8_t> scratch_;
};

// lcm(a, b) == l, given a | l and b | l.
bool lcm_is(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* l, std::size_t nvars) {
  for (std::size_t v = 1; v <= nvars; ++v)
    if (l[v] != std::max(a[v], b[v])) return false;
  return true;
}

}  // namespace

std::string to_string(MonomialOrder order) { return order == MonomialOrder::grevlex ? "grevlex" : "lex"; }

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  throw InputError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m(exps.size());
  int deg = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] < 0 || exps[v] > 255) throw MathError("exponent out of range");
    m.bytes_[v + 1] = static_cast<std::uint8_t>(exps[v]);
    deg += exps[v];
  }
  if (deg > 255) throw MathError("monomial degree exceeds 255");
  m.bytes_[0] = static_cast<std::uint8_t>(deg);
  return m;
}

PolyRing::PolyRing(std::size_t nvars, PrimeField field, MonomialOrder order, std::vector<std::string> names)
    : nvars_(nvars), field_(field), order_(order), names_(std::move(names)) {
  if (names_.empty())
    for (std::size_t v = 0; v < nvars_; ++v) names_.push_back("x" + std::to_string(v));
  if (names_.size() != nvars_) throw MathError("variable name count differs from nvars");
}

int PolyRing::compare(const std::uint8_t* a, const std::uint8_t* b) const {
  if (order_ == MonomialOrder::grevlex) {
    if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
    for (std::size_t v = nvars_; v >= 1; --v)
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    return 0;
  }
  for (std::size_t v = 1; v <= nvars_; ++v)
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  return 0;
}

bool PolyRing::divides(const std::uint8_t* a, const std::uint8_t* b) const {
  if (a[0] > b[0]) return false;
  for (std::size_t v = 1; v <= nvars_; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  std::vector<int> e(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) e[v] = std::max(a[v], b[v]);
  return Monomial::from_exponents(e);
}

Monomial PolyRing::quotient(const Monomial& b, const Monomial& a) const {
  if (!divides(a, b)) throw MathError("monomial quotient of non-divisible pair");
  Monomial q(nvars_);
  for (std::size_t k = 0; k < stride(); ++k) q.data()[k] = b.data()[k] - a.data()[k];
  return q;
}

Monomial PolyRing::product(const Monomial& a, const Monomial& b) const {
  Monomial p(nvars_);
  multiply_into(a.data(), b.data(), p.data(), stride());
  return p;
}

bool PolyRing::coprime(const Monomial& a, const Monomial& b) const {
  for (std::size_t v = 0; v < nvars_; ++v)
    if (a[v] && b[v]) return false;
  return true;
}

Monomial PolyRing::variable_monomial(std::size_t var) const {
  std::vector<int> e(nvars_, 0);
  e.at(var) = 1;
  return Monomial::from_exponents(e);
}

Poly PolyRing::constant(Coeff c) const {
  Poly p;
  c %= field_.modulus();
  if (c != 0) push_term(p, one().data(), stride(), c);
  return p;
}

Poly PolyRing::variable(std::size_t var) const {
  Poly p;
  push_term(p, variable_monomial(var).data(), stride(), 1);
  return p;
}

Poly PolyRing::make(std::vector<std::pair<Monomial, Coeff>> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const auto& x, const auto& y) { return compare(x.first, y.first) > 0; });
  Poly p;
  for (std::size_t i = 0; i < terms.size();) {
    if (terms[i].first.nvars() != nvars_) throw MathError("monomial from another ring");
    Coeff c = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j)
      c = field_.add(c, terms[j].second % field_.modulus());
    if (c != 0) push_term(p, terms[i].first.data(), stride(), c);
    i = j;
  }
  return p;
}

Monomial PolyRing::leading_monomial(const Poly& f) const {
  if (f.is_zero()) throw MathError("leading monomial of zero");
  return monomial(f, 0);
}

Poly PolyRing::add(const Poly& f, const Poly& g) const {
  Poly out;
  std::vector<std::uint8_t> scratch;
  sub_mul_merge(*this, f, 0, field_.neg(1), one().data(), g, 0, out, scratch);
  return out;
}

Poly PolyRing::sub(const Poly& f, const Poly& g) const {
  Poly out;
  std::vector<std::uint8_t> scratch;
  sub_mul_merge(*this, f, 0, 1, one().data(), g, 0, out, scratch);
  return out;
}

Poly PolyRing::scale(Coeff c, const Poly& f) const {
  c %= field_.modulus();
  if (c == 0) return {};
  Poly out = f;
  for (auto& x : out.coeffs) x = field_.mul(x, c);
  return out;
}

Poly PolyRing::mul_term(Coeff c, const Monomial& m, const Poly& f) const {
  Poly out;
  std::vector<std::uint8_t> scratch;
  sub_mul_merge(*this, Poly{}, 0, field_.neg(c % field_.modulus()), m.data(), f, 0, out, scratch);
  return out;
}

Poly PolyRing::mul(const Poly& f, const Poly& g) const {
  Poly acc;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc = add(acc, mul_term(f.coeffs[i], monomial(f, i), g));
  return acc;
}

Poly PolyRing::monic(Poly f) const {
  if (f.is_zero()) return f;
  return scale(field_.inv(f.leading_coeff()), f);
}

bool PolyRing::is_homogeneous(const Poly& f) const {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (term(f, i)[0] != term(f, 0)[0]) return false;
  return true;
}

Poly PolyRing::substitute(const Poly& f, const std::vector<Poly>& images, const PolyRing& target) const {
  if (images.size() != nvars_) throw MathError("substitution needs one image per variable");
  Poly acc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Poly t = target.constant(f.coeffs[i]);
    const std::uint8_t* m = term(f, i);
    for (std::size_t v = 0; v < nvars_; ++v)
      for (int e = 0; e < m[v + 1]; ++e) t = target.mul(t, images[v]);
    acc = target.add(acc, t);
  }
  return acc;
}

Poly PolyRing::resort(const Poly& f) const {
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) terms.emplace_back(monomial(f, i), f.coeffs[i]);
  return make(std::move(terms));
}

Coeff PolyRing::evaluate(const Poly& f, std::span<const Coeff> point) const {
  if (point.size() != nvars_) throw MathError("evaluation point has the wrong length");
  Coeff acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Coeff t = f.coeffs[i];
    const std::uint8_t* m = term(f, i);
    for (std::size_t v = 0; v < nvars_; ++v)
      for (int e = 0; e < m[v + 1]; ++e) t = field_.mul(t, point[v] % field_.modulus());
    acc = field_.add(acc, t);
  }
  return acc;
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::to_string(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t c = field_.lift(f.coeffs[i]);
    const Monomial m = monomial(f, i);
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (m.degree() == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << to_string(m);
    }
  }
  return out.str();
}

std::size_t plucker_var(int n, int i, int j) {
  if (!(0 <= i && i < j && j < n)) throw MathError("Plücker index pair must satisfy i < j < n");
  // Pairs (a, b) with a < i come first: sum_{a<i} (n - 1 - a).
  const std::size_t before = static_cast<std::size_t>(i) * (2 * n - i - 1) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

PolyRing plucker_ring(int n, PrimeField field, MonomialOrder order) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) names.push_back("w_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  const std::size_t nvars = names.size();
  return PolyRing(nvars, field, order, std::move(names));
}

std::vector<Poly> plucker_ideal(const PolyRing& ring, int n) {
  const auto& field = ring.field();
  std::vector<Poly> out;
  const auto w = [&](int i, int j) { return ring.variable_monomial(plucker_var(n, i, j)); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          out.push_back(ring.make({{ring.product(w(a, b), w(c, d)), 1},
                                   {ring.product(w(a, c), w(b, d)), field.neg(1)},
                                   {ring.product(w(a, d), w(b, c)), 1}}));
  return out;
}

Poly normal_form(const PolyRing& ring, const Poly& f, std::span<const Poly> divisors) {
  Reducer r(ring);
  for (const auto& g : divisors)
    if (!g.is_zero()) r.add(&g);
  return r.reduce(f, true);
}

Poly normal_form(const Poly& f, const GroebnerBasis& basis) {
  return normal_form(basis.ring, f, basis.generators);
}

Poly s_polynomial(const PolyRing& ring, const Poly& f, const Poly& g) {
  const Monomial lf = ring.leading_monomial(f), lg = ring.leading_monomial(g);
  const Monomial l = ring.lcm(lf, lg);
  const auto& field = ring.field();
  // (l/lf) f / lc(f) - (l/lg) g / lc(g)
  const Poly a = ring.mul_term(field.inv(f.leading_coeff()), ring.quotient(l, lf), f);
  const Poly b = ring.mul_term(field.inv(g.leading_coeff()), ring.quotient(l, lg), g);
  return ring.sub(a, b);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sev;
};

class Buchberger {
 public:
  Buchberger(const PolyRing& ring, BuchbergerStats* stats)
      : ring_(ring), stats_(stats), queue_(PairLess{&ring_}), reducer_(ring) {}

  void add_generator(Poly f) {
    f = reducer_.reduce(std::move(f), false);
    if (!f.is_zero()) insert(ring_.monic(std::move(f)));
  }

  void run() {
    while (!queue_.empty()) {
      const Pair p = *queue_.begin();
      queue_.erase(queue_.begin());
      if (stats_) {
        ++stats_->pairs_reduced;
        stats_->max_degree = std::max<std::size_t>(stats_->max_degree, p.lcm.degree());
      }
      Poly s = s_poly_from_pair(p);
      s = reducer_.reduce(std::move(s), false);
      if (s.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      insert(ring_.monic(std::move(s)));
    }
  }

  std::vector<Poly> reduced_basis() {
    std::vector<std::size_t> act;
    for (std::size_t k = 0; k < pool_.size(); ++k)
      if (active_[k]) act.push_back(k);
    std::vector<Poly> out;
    for (std::size_t k : act) {
      Reducer others(ring_);
      for (std::size_t o : act)
        if (o != k) others.add(&pool_[o]);
      Poly tail = pool_[k];
      Poly head;
      push_term(head, ring_.term(tail, 0), ring_.stride(), tail.coeffs[0]);
      tail.exps.erase(tail.exps.begin(), tail.exps.begin() + ring_.stride());
      tail.coeffs.erase(tail.coeffs.begin());
      out.push_back(ring_.add(head, others.reduce(std::move(tail), true)));
    }
    std::sort(out.begin(), out.end(),
              [this](const Poly& a, const Poly& b) { return ring_.compare(ring_.term(a, 0), ring_.term(b, 0)) < 0; });
    return out;
  }

 private:
  struct PairLess {
    const PolyRing* ring;
    bool operator()(const Pair& a, const Pair& b) const {
      const int c = ring->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }
  };

  Poly s_poly_from_pair(const Pair& p) const {
    const Poly& f = pool_[p.i];
    const Poly& g = pool_[p.j];
    const Monomial qf = ring_.quotient(p.lcm, leads_[p.i]);
    const Monomial qg = ring_.quotient(p.lcm, leads_[p.j]);
    // Both monic: the leading terms cancel.
    Poly ff = ring_.mul_term(1, qf, f);
    Poly out;
    std::vector<std::uint8_t> scratch;
    sub_mul_merge(ring_, ff, 1, 1, qg.data(), g, 1, out, scratch);
    return out;
  }

  void insert(Poly h) {
    const std::size_t hi = pool_.size();
    const Monomial lh = ring_.leading_monomial(h);
    const std::size_t nv = ring_.nvars();

    // Gebauer-Moeller: drop old pairs whose lcm is strictly refined by h.
    const std::uint64_t hs = short_exponent(lh.data(), nv);
    for (auto it = queue_.begin(); it != queue_.end();) {
      const Pair& p = *it;
      if ((hs & ~p.sev) == 0 && ring_.divides(lh, p.lcm) &&
          !lcm_is(leads_[p.i].data(), lh.data(), p.lcm.data(), nv) &&
          !lcm_is(leads_[p.j].data(), lh.data(), p.lcm.data(), nv))
        it = queue_.erase(it);
      else
        ++it;
    }

    struct Candidate {
      Monomial lcm;
      std::size_t g;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < pool_.size(); ++g)
      if (active_[g]) cands.push_back({ring_.lcm(leads_[g], lh), g, ring_.coprime(leads_[g], lh)});
    std::stable_sort(cands.begin(), cands.end(), [this](const Candidate& a, const Candidate& b) {
      return ring_.compare(a.lcm, b.lcm) < 0;
    });
    std::vector<std::pair<Monomial, std::uint64_t>> minimal;
    for (std::size_t a = 0; a < cands.size();) {
      std::size_t b = a;
      bool any_coprime = false;
      for (; b < cands.size() && cands[b].lcm == cands[a].lcm; ++b) any_coprime |= cands[b].coprime;
      const Monomial& l = cands[a].lcm;
      const std::uint64_t ls = short_exponent(l.data(), nv);
      const bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
        return (m.second & ~ls) == 0 && ring_.divides(m.first, l);
      });
      if (!covered) {
        minimal.emplace_back(l, ls);
        if (!any_coprime) queue_.insert(Pair{cands[a].g, hi, l, ls});
        if (stats_) ++stats_->pairs_considered;
      }
      a = b;
    }

    for (std::size_t g = 0; g < pool_.size(); ++g)
      if (active_[g] && ring_.divides(lh, leads_[g])) active_[g] = false;

    pool_.push_back(std::move(h));
    leads_.push_back(lh);
    active_.push_back(true);
    rebuild_reducer();
  }

  void rebuild_reducer() {
    reducer_.clear();
    for (std::size_t k = 0; k < pool_.size(); ++k)
      if (active_[k]) reducer_.add(&pool_[k]);
  }

  const PolyRing& ring_;
  BuchbergerStats* stats_;
  std::vector<Poly> pool_;
  std::vector<Monomial> leads_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> queue_;
  Reducer reducer_;
};

}  // namespace

GroebnerBasis buchberger(const PolyRing& ring, std::vector<Poly> gens, BuchbergerStats* stats) {
  std::erase_if(gens, [](const Poly& f) { return f.is_zero(); });
  std::stable_sort(gens.begin(), gens.end(), [&ring](const Poly& a, const Poly& b) {
    return ring.compare(ring.term(a, 0), ring.term(b, 0)) < 0;
  });
  Buchberger engine(ring, stats);
  for (auto& f : gens) engine.add_generator(std::move(f));
  engine.run();
  return GroebnerBasis{ring, engine.reduced_basis()};
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(gb.ring, g[i], g[j]), gb).is_zero()) return false;
  return true;
}

LinearElimination eliminate_linear(const PolyRing& ring, std::span<const Poly> linear,
                                   std::span<const Poly> others) {
  const auto& field = ring.field();
  Matrix m(field, 0, ring.nvars());
  for (const auto& f : linear) {
    std::vector<Coeff> row(ring.nvars(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::uint8_t* t = ring.term(f, i);
      if (t[0] != 1) throw MathError("eliminate_linear expects homogeneous linear forms");
      for (std::size_t v = 0; v < ring.nvars(); ++v)
        if (t[v + 1]) row[v] = f.coeffs[i];
    }
    m.append_row(row);
  }
  // Columns are in variable order, so each pivot is the form's leading variable
  // under both supported orders.
  const auto pivots = m.rref();
  std::vector<int> pivot_row(ring.nvars(), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);

  std::vector<std::size_t> kept;
  std::vector<std::string> names;
  std::vector<std::size_t> new_index(ring.nvars(), 0);
  for (std::size_t v = 0; v < ring.nvars(); ++v)
    if (pivot_row[v] < 0) {
      new_index[v] = kept.size();
      kept.push_back(v);
      names.push_back(ring.names()[v]);
    }
  const std::size_t kept_count = kept.size();
  PolyRing target(kept_count, field, ring.order(), std::move(names));

  std::vector<Poly> images(ring.nvars());
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    if (pivot_row[v] < 0) {
      images[v] = target.variable(new_index[v]);
      continue;
    }
    std::vector<std::pair<Monomial, Coeff>> terms;
    for (std::size_t u : kept) {
      const Coeff c = m(pivot_row[v], u);
      if (c != 0) terms.emplace_back(target.variable_monomial(new_index[u]), field.neg(c));
    }
    images[v] = target.make(std::move(terms));
  }

  LinearElimination out{target, kept, {}, false};
  for (const auto& f : others) {
    Poly g = ring.substitute(f, images, target);
    if (g.is_zero()) continue;
    if (g.size() == 1 && target.term(g, 0)[0] == 0) out.inconsistent = true;
    out.polys.push_back(std::move(g));
  }
  return out;
}

}  // namespace resgrass
