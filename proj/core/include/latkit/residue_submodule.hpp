#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latkit/exact_linalg.hpp"
#include "latkit/int_matrix.hpp"

namespace latkit {

/// Submodule of (Z/N)^k, stored as the lattice S in Z^k with N Z^k <= S.
///
/// The lattice is kept in canonical lower-triangular HNF, so two
/// submodules with the same span have identical representations.
class ResidueSubmodule {
 public:
  /// Span of the given columns (entries taken mod N).
  static ResidueSubmodule from_generators(const Int& modulus, std::size_t dim,
                                          const IntMatrix& columns);
  static ResidueSubmodule from_generators(const ModuleGenerators& gens, std::size_t dim);
  static ResidueSubmodule zero(const Int& modulus, std::size_t dim);
  static ResidueSubmodule full(const Int& modulus, std::size_t dim);

  /// {x : a x in target}, a submodule of (Z/N)^{a.cols()}.
  static ResidueSubmodule preimage(const IntMatrix& a, const ResidueSubmodule& target);

  const Int& modulus() const { return modulus_; }
  std::size_t dim() const { return hnf_.rows(); }
  /// Square lower-triangular basis; diagonal entries divide N.
  const IntMatrix& hnf() const { return hnf_; }

  bool contains(std::span<const Int> v) const;
  bool contains(const ResidueSubmodule& other) const;
  bool is_zero() const;

  ResidueSubmodule sum(const ResidueSubmodule& other) const;
  ResidueSubmodule intersection(const ResidueSubmodule& other) const;
  /// c * S (+ N Z^k).
  ResidueSubmodule scaled(const Int& c) const;
  /// a S, a submodule of (Z/N)^{a.rows()}.
  ResidueSubmodule image(const IntMatrix& a) const;

  /// Invariant factors (> 1) of S / N Z^k.
  std::vector<Int> invariants() const;
  /// Invariant factors (> 1) of (Z/N)^k / S.
  std::vector<Int> quotient_invariants() const;
  /// Smith-form generators of S / N Z^k.
  ModuleGenerators smith_generators() const;
  /// Number of elements of S / N Z^k.
  Int order() const;

  friend bool operator==(const ResidueSubmodule& a, const ResidueSubmodule& b) {
    return a.modulus_ == b.modulus_ && a.contains(b) && b.contains(a);
  }

 private:
  ResidueSubmodule(Int modulus, IntMatrix hnf) : modulus_(std::move(modulus)), hnf_(std::move(hnf)) {}
  static IntMatrix modular_hnf(const Int& modulus, std::size_t dim, std::vector<IntVector> pool);

  Int modulus_;
  IntMatrix hnf_;
};

/// Invariant factors (> 1) of big / small; small must be contained in big.
std::vector<Int> relative_invariants(const ResidueSubmodule& big, const ResidueSubmodule& small);

/// Smallest e >= 0 with p^e * big <= small (p prime, N a power of p).
unsigned relative_exponent(const ResidueSubmodule& big, const ResidueSubmodule& small,
                           const Int& p);

}  // namespace latkit
