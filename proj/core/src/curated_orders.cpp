#include "latkit/curated_orders.hpp"

#include "latkit/error.hpp"

namespace latkit {

Order order_integers() {
  Order o({OrderBlock::matrix(NumberRing::integers(), 1)}, "z");
  o.set_representation({IntMatrix::identity(2)});
  return o;
}

Order order_gaussian() {
  Order o({OrderBlock::matrix(NumberRing::quadratic(0, 1), 1)}, "zi");
  o.set_representation({IntMatrix::identity(2), IntMatrix{{0, -1}, {1, 0}}});
  return o;
}

Order order_z3i() {
  return order_gaussian().suborder(IntMatrix{{1, 0}, {0, 3}}, "z3i");
}

Order order_golden() {
  return Order({OrderBlock::matrix(NumberRing::quadratic(1, -1), 1)}, "golden");
}

Order order_mat2() {
  Order o({OrderBlock::matrix(NumberRing::integers(), 2)}, "mat2");
  std::vector<IntMatrix> images;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      IntMatrix unit(2, 2);
      unit(a, b) = 1;
      images.push_back(kronecker(unit, IntMatrix::identity(2)));
    }
  o.set_representation(std::move(images));
  return o;
}

Order order_lipschitz() {
  return Order({OrderBlock::quaternion(-1, -1, IntMatrix::identity(4))}, "lipschitz");
}

Order order_quaternion_m13() {
  // Columns: 2*1, 2*i, 1 + j, i + k, over the common denominator 2.
  IntMatrix basis{{2, 0, 1, 0}, {0, 2, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  return Order({OrderBlock::quaternion(-1, -3, basis, 2)}, "quat-1-3");
}

std::vector<Order> curated_orders() {
  return {order_integers(), order_gaussian(), order_z3i(), order_golden(),
          order_mat2(), order_lipschitz(), order_quaternion_m13()};
}

std::vector<std::string> curated_order_names() {
  return {"z", "zi", "z3i", "golden", "mat2", "lipschitz", "quat-1-3"};
}

Order curated_order(std::string_view name) {
  for (auto& o : curated_orders())
    if (o.name() == name) return o;
  throw InvalidInput("unknown order '" + std::string(name) + "'");
}

}  // namespace latkit
