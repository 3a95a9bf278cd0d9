#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latkit/int_matrix.hpp"

namespace latkit {

/// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

/// U * m * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

/// Deterministic Smith normal form.
///
/// Pivot: smallest nonzero |entry| of the active block, ties broken by the
/// leftmost column and then the topmost row. With `track` false U and V are
/// left empty, which is much cheaper on tall inputs.
SmithForm smith_normal_form(const IntMatrix& m, bool track = true);

/// Nonzero diagonal entries of the Smith form (the divisibility chain).
std::vector<Int> elementary_divisors(const IntMatrix& m);

/// Column-style Hermite normal form.
///
/// Lower echelon: pivot of each nonzero column is positive, lies strictly
/// below the previous pivot, and entries to the left of a pivot in its row
/// lie in [0, pivot). Zero columns are moved to the right; shape is kept.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// HNF with the zero columns dropped: a canonical basis of the column span.
IntMatrix column_span_basis(const IntMatrix& m);

/// Canonical (HNF) basis of the integer kernel {x : m x = 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Some integral x with m x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Int> b);

/// Smith-form generating set of a finite module: generator i has additive
/// order orders[i], and the orders form a divisibility chain.
struct ModuleGenerators {
  Int modulus;
  std::vector<IntVector> generators;
  std::vector<Int> orders;

  std::size_t size() const { return generators.size(); }
};

/// Generators of {x in (Z/N)^n : m x = 0 mod N}.
ModuleGenerators kernel_basis_mod(const ResidueMatrix& m);

/// Inverse modulo a prime power, or nullopt when the reduction is singular.
std::optional<IntMatrix> inverse_mod(const IntMatrix& m, const Int& modulus);

/// Largest v with p^v | x. x must be nonzero.
unsigned valuation(const Int& x, const Int& p);

Int ipow(const Int& base, unsigned long exponent);

}  // namespace latkit
