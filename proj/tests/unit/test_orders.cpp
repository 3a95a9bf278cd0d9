#include <doctest.h>

#include "latkit/curated_orders.hpp"
#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"
#include "latkit/fp_algebra.hpp"
#include "latkit/order.hpp"
#include "test_util.hpp"

using namespace latkit;

TEST_CASE("reduced trace discriminant examples") {
  CHECK(reduced_trace_form(order_gaussian()) == IntMatrix{{2, 0}, {0, -2}});
  CHECK(reduced_trace_discriminant(order_gaussian()) == -4);
  CHECK(abs(reduced_trace_discriminant(order_mat2())) == 1);
  CHECK(reduced_trace_discriminant(order_integers()) == 1);
  CHECK(reduced_trace_discriminant(order_z3i()) == -36);
  CHECK(reduced_trace_discriminant(order_golden()) == 5);
  CHECK(reduced_trace_discriminant(order_lipschitz()) == -16);
  CHECK(reduced_trace_discriminant(order_quaternion_m13()) == -9);
}

TEST_CASE("intrinsic trace examples") {
  CHECK(intrinsic_trace_form(order_gaussian()) == IntMatrix{{2, 0}, {0, -2}});
  CHECK(det(intrinsic_trace_form(order_mat2())) == -16);
  CHECK(det(intrinsic_trace_form(order_lipschitz())) == -256);
}

TEST_CASE("reduction mod l examples") {
  CHECK(is_semisimple(reduce_mod(order_gaussian(), 5)));
  const FpAlgebra zi2 = reduce_mod(order_gaussian(), 2);
  CHECK_FALSE(is_semisimple(zi2));
  REQUIRE(radical(zi2).size() == 1);
  CHECK(radical(zi2)[0] == FpVector{1, 1});
  for (auto p : primes_upto(50)) CHECK(is_semisimple(reduce_mod(order_mat2(), p)));
}

TEST_CASE("discriminant valuation vs semisimplicity examples") {
  const PropB1Row two = verify_prop_b1(order_gaussian(), 2);
  CHECK(two.valuation == 2);
  CHECK_FALSE(two.semisimple);
  CHECK(two.holds);
  const PropB1Row five = verify_prop_b1(order_gaussian(), 5);
  CHECK(five.valuation == 0);
  CHECK(five.semisimple);
  CHECK(five.holds);
  for (const auto& row : verify_prop_b1_upto(order_mat2(), 50)) {
    CHECK(row.valuation == 0);
    CHECK(row.holds);
  }
}

TEST_CASE("valuation-semisimplicity equivalence on every curated order, l <= 50") {
  for (const Order& o : curated_orders())
    for (const auto& row : verify_prop_b1_upto(o, 50)) {
      CAPTURE(o.name());
      CAPTURE(row.prime);
      CHECK(row.holds);
    }
}

TEST_CASE("reduced trace is integral and the unit has trace sum e d r") {
  for (const Order& o : curated_orders()) {
    const IntMatrix f = reduced_trace_form(o);
    CHECK(f.is_symmetric());
    Int unit_trace = dot(o.unit(), o.reduced_trace());
    Int expected = 0;
    for (const auto& b : o.blocks()) {
      const std::size_t r = b.matrix_size();
      const std::size_t deg = b.ring() ? b.ring()->degree : 1;
      expected += b.kind() == OrderBlock::Kind::matrix ? Int(static_cast<unsigned long>(deg * r)) : Int(2);
    }
    CAPTURE(o.name());
    CHECK(unit_trace == expected);
  }
}

TEST_CASE("intrinsic trace is the blockwise multiple of the reduced trace") {
  for (const Order& o : curated_orders()) {
    const TraceRatioReport r = check_trace_ratio(o);
    CAPTURE(o.name());
    CHECK(r.elementwise);
    CHECK(r.det_ratio);
    CHECK(r.intrinsic_det == r.expected_ratio * r.reduced_det);
  }
}

TEST_CASE("index-squared law for suborders") {
  const IndexLawReport z3i = check_index_law(order_gaussian(), order_z3i(), IntMatrix{{1, 0}, {0, 3}});
  CHECK(z3i.index == 3);
  CHECK(z3i.holds);
  for (long m = 2; m <= 7; ++m) {
    const IntMatrix basis{{1, 0}, {0, m}};
    const Order sub = order_golden().suborder(basis);
    const IndexLawReport r = check_index_law(order_golden(), sub, basis);
    CHECK(r.holds);
    CHECK(r.sub_discriminant == m * m * 5);
  }
  // Z + 2 Mat2(Z)
  const IntMatrix basis{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 0, 0, 2}};
  const IndexLawReport mat = check_index_law(order_mat2(), order_mat2().suborder(basis), basis);
  CHECK(mat.index == 8);
  CHECK(mat.holds);
}

TEST_CASE("matrix blocks over number rings") {
  CHECK(check_matrix_block_discriminant(OrderBlock::matrix(NumberRing::integers(), 3)));
  CHECK(check_matrix_block_discriminant(OrderBlock::matrix(NumberRing::quadratic(0, 1), 2)));
  const Order m2i({OrderBlock::matrix(NumberRing::quadratic(0, 1), 2)}, "mat2-zi");
  CHECK(abs(reduced_trace_discriminant(m2i)) == 256);
  for (const auto& row : verify_prop_b1_upto(m2i, 20)) CHECK(row.holds);
}

TEST_CASE("suborder and representation validation") {
  CHECK_THROWS_AS(order_gaussian().suborder(IntMatrix{{2, 0}, {0, 1}}), InvalidInput);
  Order o = order_gaussian();
  CHECK_THROWS_AS(o.set_representation({IntMatrix::identity(2), IntMatrix::identity(2)}), InvalidInput);
  CHECK_THROWS(OrderBlock::quaternion(-1, -1, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                                      2));
  CHECK_THROWS_AS(curated_order("nope"), InvalidInput);
}

TEST_CASE("associativity of curated orders") {
  for (const Order& o : curated_orders()) {
    const std::size_t n = o.rank();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          IntVector ea(n), eb(n), ec(n);
          ea[a] = 1;
          eb[b] = 1;
          ec[c] = 1;
          CHECK(o.multiply(o.multiply(ea, eb), ec) == o.multiply(ea, o.multiply(eb, ec)));
        }
  }
}
