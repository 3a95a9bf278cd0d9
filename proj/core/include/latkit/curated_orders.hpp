#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latkit/order.hpp"

namespace latkit {

/// Z, represented on Z^2 by scalars.
Order order_integers();
/// Z[i], acting on Z^2 = Z[i] by multiplication.
Order order_gaussian();
/// Z[3i], the index-3 suborder of Z[i].
Order order_z3i();
/// Z[x] / (x^2 - x - 1).
Order order_golden();
/// Mat_2(Z) on matrix units, acting diagonally on Z^2 + Z^2.
Order order_mat2();
/// Lipschitz order Z<1, i, j, k> in (-1, -1 / Q).
Order order_lipschitz();
/// Maximal order <1, i, (1 + j)/2, (i + k)/2> in (-1, -3 / Q).
Order order_quaternion_m13();

/// All of the above, in a fixed order.
std::vector<Order> curated_orders();
/// Lookup by name: z, zi, z3i, golden, mat2, lipschitz, quat-1-3.
Order curated_order(std::string_view name);
std::vector<std::string> curated_order_names();

}  // namespace latkit
