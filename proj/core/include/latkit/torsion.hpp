#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latkit/int_matrix.hpp"
#include "latkit/residue_submodule.hpp"

namespace latkit {

/// (Z/l^n)^{2g} with a perfect alternating pairing J and a finite list of similitudes.
///
/// Homomorphisms T -> T^dual are 2g x 2g matrices U, read as the form x^T U y.
/// Gamma acts on them by U -> chi(g)^{-1} g^T U g and on End(T) by conjugation.
class TorsionPairingModule {
 public:
  TorsionPairingModule(std::uint64_t ell, unsigned level, std::size_t g, IntMatrix pairing,
                       std::vector<IntMatrix> gamma = {});

  /// Standard pairing [[0, I], [-I, 0]].
  static IntMatrix standard_pairing(std::size_t g);

  std::uint64_t ell() const { return ell_; }
  unsigned level() const { return level_; }
  std::size_t g() const { return g_; }
  std::size_t rank() const { return 2 * g_; }
  const Int& modulus() const { return modulus_; }
  const IntMatrix& pairing() const { return pairing_; }
  const std::vector<IntMatrix>& gamma() const { return gamma_; }
  /// chi(gamma_i), reduced to [0, l^n).
  const std::vector<Int>& multipliers() const { return multipliers_; }

  /// Matrix of the Gamma_i action on row-major Hom(T, T^dual).
  IntMatrix hom_action(std::size_t i) const;
  /// Matrix of conjugation by Gamma_i on row-major End(T).
  IntMatrix end_action(std::size_t i) const;

 private:
  std::uint64_t ell_;
  unsigned level_;
  std::size_t g_;
  Int modulus_;
  IntMatrix pairing_;
  std::vector<IntMatrix> gamma_;
  std::vector<Int> multipliers_;
};

struct HomDecomposition {
  ResidueSubmodule symmetric;    // skew-symmetric forms
  ResidueSubmodule alternating;  // alternating forms
  std::vector<Int> index_invariants;  // of symmetric / alternating
  Int index;
  bool contained = false;
};
HomDecomposition hom_decompose(const TorsionPairingModule& t);

/// Invariant factors (> 1) of (Hom(wedge^2 T, mu) / image(NS))^Gamma.
/// NS generators must be skew-symmetric modulo l^n.
std::vector<Int> brauer_quotient_invariants(const TorsionPairingModule& t,
                                            const std::vector<IntMatrix>& ns);

struct Ker2Result {
  std::size_t symmetric_rank = 0;  // rank of the self-dual part of R over Z
  std::vector<Int> kernel_invariants;
  bool holds = false;  // 2 * kernel = 0
};
/// R is given by integral generators; its span must be stable under U -> -U^T
/// and (mod l^n) under Gamma.
Ker2Result ker2_exponent_check(const TorsionPairingModule& t, const std::vector<IntMatrix>& r);

/// Invariant factors (> 1) of (End(T) / span(endos))^Gamma. The span must be
/// a Gamma-stable subring mod l^n.
std::vector<Int> third_summand_invariants(const TorsionPairingModule& t,
                                          const std::vector<IntMatrix>& endos);

}  // namespace latkit
