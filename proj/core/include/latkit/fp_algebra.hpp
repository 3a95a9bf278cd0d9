#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace latkit {

using FpVector = std::vector<std::uint64_t>;
/// Row-major list of rows.
using FpMatrix = std::vector<FpVector>;

/// Associative unital algebra over F_p given by structure constants.
///
/// sc[(i * dim + j) * dim + k] is the coefficient of e_k in e_i e_j.
/// Associativity and the unit are checked on construction.
class FpAlgebra {
 public:
  FpAlgebra(std::uint64_t p, std::size_t dim, std::vector<std::uint64_t> sc, FpVector unit);

  /// Mat_n(F_p) on matrix units E_ab, index a * n + b.
  static FpAlgebra matrix_algebra(std::uint64_t p, std::size_t n);
  /// F_p[x] / (f), f monic given by its coefficients c_0 .. c_{n-1} (leading 1 implied).
  static FpAlgebra polynomial_quotient(std::uint64_t p, const std::vector<std::int64_t>& low_coeffs);
  /// Group algebra of the cyclic group of order n.
  static FpAlgebra cyclic_group_algebra(std::uint64_t p, std::size_t n);
  static FpAlgebra product(const FpAlgebra& a, const FpAlgebra& b);

  std::uint64_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  std::uint64_t coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<std::uint64_t>& structure_constants() const { return sc_; }
  const FpVector& unit() const { return unit_; }

  FpVector basis_vector(std::size_t i) const;
  FpVector multiply(const FpVector& x, const FpVector& y) const;
  /// Matrix of y -> x y on the basis.
  FpMatrix left_mult(const FpVector& x) const;

 private:
  std::uint64_t p_;
  std::size_t dim_;
  std::vector<std::uint64_t> sc_;
  FpVector unit_;
};

/// Basis of {x : m x = 0} over F_p.
std::vector<FpVector> fp_nullspace(const FpMatrix& m, std::size_t cols, std::uint64_t p);
/// Reduced row echelon basis of the span of the rows.
std::vector<FpVector> fp_row_reduce(std::vector<FpVector> rows, std::uint64_t p);

/// Jacobson radical in reduced row echelon form.
///
/// p > dim: kernel of the trace form Tr(L_x L_y). Otherwise the iterated
/// p-power trace conditions on the left regular representation.
std::vector<FpVector> radical(const FpAlgebra& a);
bool is_semisimple(const FpAlgebra& a);
std::vector<FpVector> center(const FpAlgebra& a);

/// A / I for a two-sided ideal I given by any spanning set.
FpAlgebra quotient(const FpAlgebra& a, const std::vector<FpVector>& ideal);

bool is_prime(std::uint64_t n);

}  // namespace latkit
