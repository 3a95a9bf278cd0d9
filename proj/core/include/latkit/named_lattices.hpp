#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// Gram matrix of the positive-definite E8 root lattice (Bourbaki labelling).
IntMatrix e8_gram();

Lattice e8(long sign = 1);
Lattice hyperbolic_plane();
Lattice rank_one(const Int& n);
Lattice diagonal_lattice(const std::vector<Int>& entries);
Lattice orthogonal_sum(const Lattice& a, const Lattice& b);
/// L(n): Gram scaled by n.
Lattice twist(const Lattice& l, const Int& n);
Lattice power(const Lattice& l, unsigned k);

/// E8(-1)^2 + U^3.
Lattice k3_lattice();
/// E8(-1)^2 + U^2 + <-2d>.
Lattice lambda_2d(const Int& d);
/// E8(-1)^2 + U^2 + <-1>^5, unimodular of rank 25.
Lattice lambda_sharp();

/// Parse a lattice name.
///
/// Accepted: `k3`, `lambda-sharp`, `lambda2d(d)`, and sums of terms joined
/// by `+`, each term `E8`, `E8(n)`, `U`, `U(n)`, `<n>` or `diag(a,b,...)`
/// with an optional `^k`. Example: `E8(-1)^2+U^2+<-2>`.
Lattice named_lattice(std::string_view expr);

/// Descending search for x1 >= x2 >= x3 >= x4 >= 0 with sum of squares n.
std::array<Int, 4> four_squares(const Int& n);

struct PolarizationEmbedding {
  Int d;
  IntVector vector;     // (x1, x2, x3, x4, 1) in <-1>^5
  IntMatrix embedding;  // 25 x 21, columns = images of the basis of lambda_2d(d)
  bool isometric = false;
  bool primitive = false;
};

/// Embed lambda_2d(d) primitively into lambda_sharp() via four squares.
PolarizationEmbedding embed_polarization(const Int& d);

/// Recheck a witness on the full 25 x 21 matrix: pullback equals the Gram of
/// lambda_2d(d) and the saturation of the image is the image itself.
bool verify_embedding_fully(const PolarizationEmbedding& e);

}  // namespace latkit
