#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace resgrass {

/// Residue in [0, p). The modulus lives in the PrimeField, not in the value.
using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 31991;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Coeff reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws MathError on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2], for printing.
  std::int64_t lift(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<Coeff>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Coeff> values);

  /// In-place reduced row echelon form; zero rows are dropped. Returns pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Product m * v.
  std::vector<Coeff> apply(std::span<const Coeff> v) const;
  Matrix multiply(const Matrix& rhs) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

/// Basis of {v : m v = 0}. One vector per free column f, with v[f] = 1 and
/// pivot entries determined by the reduced echelon form of m.
std::vector<std::vector<Coeff>> kernel_basis(const Matrix& m);

/// Scale v so that its first nonzero entry is 1. Returns false for the zero vector.
bool normalize_projective(const PrimeField& field, std::span<Coeff> v);

}  // namespace resgrass
