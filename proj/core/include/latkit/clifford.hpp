#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "latkit/int_matrix.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

inline constexpr std::size_t kCliffordRankCap = 6;
inline constexpr std::size_t kComplementRankCap = 4;

/// Integral Clifford algebra of a lattice, with e_i e_j + e_j e_i = 2 (e_i.e_j).
///
/// Basis element b_S is the ordered product of e_i over i in S (ascending),
/// indexed by the bitmask of S. Elements are coefficient vectors of length 2^r.
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(Lattice base, std::size_t rank_cap = kCliffordRankCap);

  const Lattice& base() const { return base_; }
  std::size_t rank() const { return base_.rank(); }
  std::size_t dim() const { return dim_; }

  /// b_S b_T as a sparse list of (mask, coefficient).
  const std::vector<std::pair<std::uint32_t, Int>>& product(std::uint32_t s, std::uint32_t t) const {
    return table_[s * dim_ + t];
  }

  IntVector unit() const;
  IntVector basis_element(std::uint32_t mask) const;
  /// Image of a lattice vector (coordinates in the lattice basis).
  IntVector from_lattice(std::span<const Int> v) const;

  IntVector multiply(std::span<const Int> x, std::span<const Int> y) const;
  /// Anti-automorphism fixing each e_i.
  IntVector reversal(std::span<const Int> x) const;
  /// Matrix of y -> x y.
  IntMatrix left_mult_matrix(std::span<const Int> x) const;
  /// Trace of left multiplication by x.
  Int trace(std::span<const Int> x) const;

  static bool is_even(std::uint32_t mask) { return __builtin_popcount(mask) % 2 == 0; }

 private:
  // e_j b_T, expanded.
  std::vector<std::pair<std::uint32_t, Int>> generator_times(std::size_t j, std::uint32_t t) const;

  Lattice base_;
  std::size_t dim_;
  std::vector<std::vector<std::pair<std::uint32_t, Int>>> table_;
  std::vector<IntVector> reversed_;
};

struct TraceRestrictionReport {
  IntMatrix traces;  // Tr(L_{e_i} L_{e_j})
  Int scalar;        // 2^rank
  bool holds = false;
};
TraceRestrictionReport trace_restriction_check(const CliffordAlgebra& c);

struct SymplecticReport {
  IntMatrix gram;  // (v, w) -> Tr(f1 f2 v* w) on the monomial basis
  bool skew = false;
  Int det;
};
/// f1, f2 are lattice vectors: orthogonal with positive norms, else PreconditionError.
SymplecticReport symplectic_form(const CliffordAlgebra& c, std::span<const Int> f1,
                                 std::span<const Int> f2);

struct ComplementReport {
  std::vector<Int> invariants;  // of F = End(C(L)) / (L + L^perp), entries > 1
  Int order;
  std::size_t complement_rank = 0;
  Int restricted_discriminant;  // det of the form Tr(xy) on the image of L
  bool matches = false;         // order == |restricted_discriminant|
};
/// L embedded by left multiplication in End(C(L)) = Mat_{2^r}(Z) with Tr(xy).
ComplementReport complement_index(const Lattice& l, std::size_t rank_cap = kComplementRankCap);

}  // namespace latkit
