#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace latkit {

using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-sized dimensions are allowed; they show up naturally as the kernel
/// of an injective map or the basis of the zero sublattice.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(const IntMatrix& other);
  IntMatrix(IntMatrix&&) noexcept = default;
  IntMatrix& operator=(const IntMatrix& other);
  IntMatrix& operator=(IntMatrix&&) noexcept = default;
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Int& c);
  static IntMatrix diagonal(std::span<const Int> entries);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> entries() const { return data_; }
  std::span<Int> entries() { return data_; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Int> values);
  void set_row(std::size_t i, std::span<const Int> values);

  IntMatrix transpose() const;
  IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                      std::size_t ncols) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  bool is_symmetric() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Int& c);
  IntMatrix operator-() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& c, IntMatrix a);
IntVector operator*(const IntMatrix& a, std::span<const Int> x);

/// [a | b], same row count.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// a over b, same column count.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Row-major flattening of a square matrix, and its inverse.
IntVector flatten(const IntMatrix& m);
IntMatrix unflatten(std::span<const Int> v, std::size_t n);

Int dot(std::span<const Int> a, std::span<const Int> b);
/// Bilinear form x^T G y.
Int bilinear(const IntMatrix& gram, std::span<const Int> x, std::span<const Int> y);

std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Matrix with entries reduced to canonical representatives in [0, modulus).
class ResidueMatrix {
 public:
  ResidueMatrix(Int modulus, IntMatrix lift);

  const Int& modulus() const { return modulus_; }
  const IntMatrix& lift() const { return lift_; }
  std::size_t rows() const { return lift_.rows(); }
  std::size_t cols() const { return lift_.cols(); }
  const Int& operator()(std::size_t i, std::size_t j) const { return lift_(i, j); }

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  Int modulus_;
  IntMatrix lift_;
};

/// Canonical representative of x modulo m, in [0, m).
Int mod_floor(const Int& x, const Int& m);
void reduce_mod(IntMatrix& m, const Int& modulus);
void reduce_mod(IntVector& v, const Int& modulus);

}  // namespace latkit
