#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latkit/fp_algebra.hpp"
#include "latkit/int_matrix.hpp"

namespace latkit {

/// Commutative ring of integers with Z-basis w_0 = 1, w_1, ..., w_{e-1}.
/// table[(a * e + b) * e + c] is the coefficient of w_c in w_a w_b.
struct NumberRing {
  std::size_t degree = 1;
  std::vector<Int> table;

  static NumberRing integers();
  /// Z[x] / (x^2 - t x + n) on the basis 1, x.
  static NumberRing quadratic(const Int& t, const Int& n);

  /// Field trace of w_c.
  Int trace(std::size_t c) const;
  /// det of [Tr(w_a w_b)].
  Int discriminant() const;
};

/// One simple summand: Mat_r over a number ring, or an order in (a, b / Q).
class OrderBlock {
 public:
  enum class Kind { matrix, quaternion };

  static OrderBlock matrix(NumberRing ring, std::size_t r);
  /// Basis columns are coordinates in 1, i, j, k, divided by `denominator`.
  static OrderBlock quaternion(const Int& a, const Int& b, const IntMatrix& basis,
                               const Int& denominator = 1);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return trd_.size(); }
  /// d * r, the factor between intrinsic and reduced trace on this block.
  std::size_t trace_factor() const { return trace_factor_; }
  /// e: degree of the centre over Q.
  std::size_t centre_degree() const { return centre_degree_; }
  const std::vector<Int>& structure_constants() const { return sc_; }
  const std::vector<Int>& reduced_trace() const { return trd_; }
  const IntVector& unit() const { return unit_; }
  const NumberRing* ring() const { return kind_ == Kind::matrix ? &ring_ : nullptr; }
  std::size_t matrix_size() const { return r_; }

 private:
  OrderBlock() = default;

  Kind kind_ = Kind::matrix;
  std::size_t trace_factor_ = 1;
  std::size_t centre_degree_ = 1;
  std::size_t r_ = 1;
  NumberRing ring_;
  std::vector<Int> sc_;
  std::vector<Int> trd_;
  IntVector unit_;
};

/// Direct sum of blocks, with an optional representation on Z^{2g}.
class Order {
 public:
  struct Span {
    std::size_t offset;
    std::size_t size;
    std::size_t trace_factor;
  };

  explicit Order(std::vector<OrderBlock> blocks, std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Span>& spans() const { return spans_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  /// Coefficient of b_u in b_s b_t.
  const Int& coeff(std::size_t s, std::size_t t, std::size_t u) const {
    return sc_[(s * rank_ + t) * rank_ + u];
  }
  const std::vector<Int>& reduced_trace() const { return trd_; }
  const IntVector& unit() const { return unit_; }

  IntVector multiply(std::span<const Int> x, std::span<const Int> y) const;
  /// Matrix of y -> x y on the order's basis.
  IntMatrix left_mult(std::span<const Int> x) const;

  /// Attach images of the basis elements; checked to be a unital homomorphism.
  void set_representation(std::vector<IntMatrix> images);
  const std::optional<std::vector<IntMatrix>>& representation() const { return rep_; }

  /// Suborder spanned by the given columns (coordinates in this basis).
  /// Columns must respect the block decomposition and span a unital subring.
  Order suborder(const IntMatrix& basis, std::string name = {}) const;

 private:
  Order() = default;

  std::string name_;
  std::vector<OrderBlock> blocks_;
  std::vector<Span> spans_;
  std::size_t rank_ = 0;
  std::vector<Int> sc_;
  std::vector<Int> trd_;
  IntVector unit_;
  std::optional<std::vector<IntMatrix>> rep_;
};

IntMatrix reduced_trace_form(const Order& o);
/// Throws PreconditionError when the form is degenerate.
Int reduced_trace_discriminant(const Order& o);
/// Gram of Tr(L_{xy}) from the left regular representation.
IntMatrix intrinsic_trace_form(const Order& o);
FpAlgebra reduce_mod(const Order& o, std::uint64_t p);

struct PropB1Row {
  std::uint64_t prime = 0;
  unsigned valuation = 0;
  bool semisimple = false;
  bool holds = false;
};

/// v_l(discr) = 0 iff O / l is semisimple, for one prime.
PropB1Row verify_prop_b1(const Order& o, std::uint64_t prime);
/// Same for every prime up to lmax.
std::vector<PropB1Row> verify_prop_b1_upto(const Order& o, std::uint64_t lmax);

struct TraceRatioReport {
  bool elementwise = true;  // Tr(b) = d r trd(b) for every basis element
  Int reduced_det;
  Int intrinsic_det;
  Int expected_ratio;  // prod over blocks of (d r)^{block rank}
  bool det_ratio = true;
};

TraceRatioReport check_trace_ratio(const Order& o);

/// For a matrix block over a number ring R: |discr| = |discr(R)|^{r^2}.
bool check_matrix_block_discriminant(const OrderBlock& b);

/// discr(sub) = [O : sub]^2 discr(O), with the index from the basis determinant.
struct IndexLawReport {
  Int index;
  Int sub_discriminant;
  Int order_discriminant;
  bool holds = false;
};

IndexLawReport check_index_law(const Order& o, const Order& sub, const IntMatrix& basis);

std::vector<std::uint64_t> primes_upto(std::uint64_t n);

}  // namespace latkit
