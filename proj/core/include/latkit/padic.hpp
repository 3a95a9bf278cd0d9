#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "latkit/fp_algebra.hpp"
#include "latkit/int_matrix.hpp"
#include "latkit/residue_submodule.hpp"

namespace latkit {

/// Free Z_l-module of the given rank, known modulo l^precision.
struct PadicModule {
  std::uint64_t ell = 2;
  unsigned precision = 1;
  std::size_t rank = 0;
  std::optional<IntMatrix> gram;

  Int modulus(unsigned n) const { return ipow(Int(ell), n); }
  /// Throws InvalidInput on a non-prime ell, zero precision or a bad Gram.
  void validate() const;
};

/// Finite list of matrices mod l^precision acting on Z_l^dim.
struct ActionData {
  std::uint64_t ell = 2;
  unsigned precision = 1;
  std::vector<IntMatrix> generators;

  std::size_t dim() const;
  Int modulus(unsigned n) const { return ipow(Int(ell), n); }
  void validate() const;
};

/// Checks the generators act on m, are invertible mod l and preserve its Gram.
void validate_group_action(const PadicModule& m, const ActionData& a);

/// (M / l^n)^Gamma as a submodule of (Z/l^n)^rank.
ResidueSubmodule invariants_mod(const PadicModule& m, const ActionData& a, unsigned n);

struct Lemma16Report {
  unsigned level = 0;
  Int discriminant;
  unsigned valuation = 0;
  std::vector<Int> quotient_invariants;  // of ((M/L)/l^n)^Gamma
  std::vector<Int> image_invariants;     // of the image of (M/l^n)^Gamma there
  bool holds = false;                    // d * ((M/L)/l^n)^Gamma <= image
};
/// `sub` holds a basis of the Gamma-stable submodule L as columns.
/// Needs precision >= n + v_l(d) + 2, else InsufficientPrecision.
Lemma16Report check_lemma_16may(const PadicModule& m, const IntMatrix& sub, const ActionData& a,
                                unsigned n);

/// The Z/l^n-algebra generated by the action, in row-major End coordinates.
ResidueSubmodule generated_algebra(const ActionData& a, unsigned n);
/// {x : x g = g x mod l^n for all generators}, in row-major End coordinates.
ResidueSubmodule centralizer_mod(const ActionData& a, unsigned n);
/// Centralizer of the integer lifts over Z, as columns in row-major End coordinates.
IntMatrix centralizer_exact(const ActionData& a);

struct Lemma13Row {
  unsigned level = 0;
  bool contained = false;      // End_Lambda(N)/l^n <= End_Lambda(N/l^n)
  unsigned r = 0;              // minimal r with l^r End_Lambda(N/l^n) <= End_Lambda(N)/l^n
  unsigned perp_exponent = 0;  // exponent of (L^perp/l^n) cap End_Lambda(N/l^n)
  bool divisible = false;      // that intersection lies in l (L^perp/l^n)
};
struct Lemma13Report {
  Int discriminant;
  unsigned a = 0;
  std::vector<Lemma13Row> rows;
  unsigned r_max = 0;
  unsigned b = 0;           // smallest b with the divisibility at every b < n <= n_max
  bool stabilized = false;  // divisibility observed at n_max
  bool holds = false;
};
/// Throws PreconditionError if the trace form on the centralizer is degenerate,
/// InsufficientPrecision unless precision >= n_max + a + 2.
Lemma13Report check_lemma_13aug(const ActionData& a, unsigned n_max);

/// The generated algebra mod l as an F_l-algebra.
FpAlgebra generated_algebra_mod_ell(const ActionData& a);

/// Whether the centralizer of the centralizer is the generated algebra at level n.
/// nullopt when the generated algebra mod l is not semisimple.
std::optional<bool> double_centralizer_check(const ActionData& a, unsigned n);

}  // namespace latkit
