#pragma once

#include <optional>
#include <vector>

#include "latkit/int_matrix.hpp"
#include "latkit/order.hpp"

namespace latkit {

/// One isotypic factor: centre of degree e, division algebra of degree d,
/// simple factor of dimension g, multiplicity m.
struct IsotypicDatum {
  unsigned long e = 1;
  unsigned long d = 1;
  unsigned long g = 1;
  unsigned long m = 1;
};

struct EndData {
  std::vector<IsotypicDatum> factors;
  Int base_discr;
  std::optional<Order> order;
};

/// Throws InvalidInput unless each e d divides 2 g and base_discr != 0.
void validate(const EndData& data);

/// base_discr * prod (d m)^(e d^2 m^2).
Int intrinsic_discriminant(const EndData& data);
/// base_discr * prod (2 g / (e d))^(e d^2 m^2).
Int degree_discriminant(const EndData& data);

/// Gram [Tr(rho(b_s b_t))] of the attached representation.
IntMatrix degree_form_from_representation(const Order& o);

/// floor(2 g exp(2 g / e)), certified by interval evaluation.
Int q_of_g(unsigned long g);

/// |GL(n, F_q)|.
Int gl_order(unsigned long n, unsigned long q);
/// |GL(n, Z/4)| = |GL(n, F_2)| * 2^(n^2).
Int gl_order_z4(unsigned long n);
/// |GL(2g, F_3)| if p != 3, |GL(2g, Z/4)| if p = 3. p is 0 or a prime.
Int d_p_of_g(unsigned long p, unsigned long g);

}  // namespace latkit
