#pragma once

#include <cstddef>
#include <vector>

#include "latkit/int_matrix.hpp"

namespace latkit {

/// Free Z-module with a nondegenerate symmetric integral Gram matrix.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  /// Signed determinant of the Gram matrix.
  Int discriminant() const;
  /// Invariant factors (> 1) of L^* / L.
  std::vector<Int> discriminant_group() const;

  Int inner(std::span<const Int> x, std::span<const Int> y) const { return bilinear(gram_, x, y); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  IntMatrix gram_;
};

/// Sublattice given by independent basis columns in ambient coordinates.
struct Sublattice {
  Lattice ambient;
  IntMatrix basis;

  Sublattice(Lattice ambient, IntMatrix basis);

  std::size_t rank() const { return basis.cols(); }
  /// basis^T * gram * basis; may be degenerate.
  IntMatrix restricted_gram() const;
  Int discriminant() const;
};

Sublattice orthogonal_complement(const Sublattice& s);
Sublattice saturate(const Sublattice& s);
/// Ambient quotient is torsion-free.
bool is_primitive(const Sublattice& s);

struct IsometryGroup {
  std::vector<IntMatrix> generators;
  std::vector<IntMatrix> elements;

  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Breadth-first closure under multiplication by the generators.
/// Throws CapExceeded past `cap` elements and InvalidInput for non-isometries.
IsometryGroup close_group(const Lattice& l, std::vector<IntMatrix> generators,
                          std::size_t cap = kDefaultGroupCap);

struct FixedSublatticeReport {
  Sublattice fixed;
  std::size_t group_order = 0;
  Int discriminant;  // of the restricted form; 1 when L^G = 0
  Int bound;         // (|discr(L)| * |G|)^rank(L^G)
  bool divides = true;

  bool empty() const { return fixed.rank() == 0; }
};

FixedSublatticeReport fixed_sublattice(const Lattice& l, const IsometryGroup& g);

}  // namespace latkit
