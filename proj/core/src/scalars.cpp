#include "resgrass/scalars.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "resgrass/errors.hpp"

namespace resgrass {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw MathError("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<Coeff>>& rows,
                         std::size_t cols) {
  Matrix m(field, 0, cols);
  std::vector<Coeff> reduced(cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw MathError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) reduced[j] = r[j] % field.modulus();
    m.append_row(reduced);
  }
  return m;
}

void Matrix::append_row(std::span<const Coeff> values) {
  if (values.size() != cols_) throw MathError("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t sel = rank;
    while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != rank)
      std::swap_ranges(row(sel).begin(), row(sel).end(), row(rank).begin());
    auto pr = row(rank);
    const Coeff inv = field_.inv(pr[c]);
    for (std::size_t j = c; j < cols_; ++j) pr[j] = field_.mul(pr[j], inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      const Coeff f = (*this)(r, c);
      if (f == 0) continue;
      auto rr = row(r);
      for (std::size_t j = c; j < cols_; ++j)
        if (pr[j] != 0) rr[j] = field_.sub(rr[j], field_.mul(f, pr[j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows_ = rank;
  data_.resize(rows_ * cols_);
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<Coeff> Matrix::apply(std::span<const Coeff> v) const {
  if (v.size() != cols_) throw MathError("vector length mismatch");
  std::vector<Coeff> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const auto rr = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{rr[c]} * v[c]) % field_.modulus();
    out[r] = static_cast<Coeff>(acc);
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw MathError("matrix shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coeff a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

std::vector<std::vector<Coeff>> kernel_basis(const Matrix& m) {
  Matrix e = m;
  const auto pivots = e.rref();
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(e(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool normalize_projective(const PrimeField& field, std::span<Coeff> v) {
  auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
  if (it == v.end()) return false;
  const Coeff inv = field.inv(*it);
  for (auto& c : v) c = field.mul(c, inv);
  return true;
}

}  // namespace resgrass
