#include "latkit/av_forms.hpp"

#include <mpfr.h>

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"

namespace latkit {

void validate(const EndData& data) {
  if (sgn(data.base_discr) == 0) throw InvalidInput("base discriminant must be nonzero");
  if (data.factors.empty()) throw InvalidInput("endomorphism data needs at least one factor");
  for (const auto& f : data.factors) {
    if (f.e == 0 || f.d == 0 || f.g == 0 || f.m == 0) throw InvalidInput("isotypic datum entries must be positive");
    if ((2 * f.g) % (f.e * f.d) != 0) throw InvalidInput("e d must divide 2 g");
  }
}

Int intrinsic_discriminant(const EndData& data) {
  validate(data);
  Int out = data.base_discr;
  for (const auto& f : data.factors)
    out *= ipow(Int(f.d * f.m), f.e * f.d * f.d * f.m * f.m);
  return out;
}

Int degree_discriminant(const EndData& data) {
  validate(data);
  Int out = data.base_discr;
  for (const auto& f : data.factors)
    out *= ipow(Int(2 * f.g / (f.e * f.d)), f.e * f.d * f.d * f.m * f.m);
  return out;
}

IntMatrix degree_form_from_representation(const Order& o) {
  if (!o.representation()) throw PreconditionError("order carries no representation");
  const auto& rep = *o.representation();
  const std::size_t n = o.rank();
  IntVector traces(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t i = 0; i < rep[u].rows(); ++i) traces[u] += rep[u](i, i);
  IntMatrix g(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (sgn(o.coeff(s, t, u)) != 0) g(s, t) += o.coeff(s, t, u) * traces[u];
  return g;
}

namespace {

// Bounds lo <= 2g exp(2g/e) <= hi at the given precision.
void q_bounds(unsigned long g, mpfr_prec_t prec, Int& lo_floor, Int& hi_floor) {
  mpfr_t e_lo, e_hi, x_lo, x_hi;
  mpfr_inits2(prec, e_lo, e_hi, x_lo, x_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(e_lo, 1, MPFR_RNDN);
  mpfr_exp(e_lo, e_lo, MPFR_RNDD);
  mpfr_set_ui(e_hi, 1, MPFR_RNDN);
  mpfr_exp(e_hi, e_hi, MPFR_RNDU);

  mpfr_ui_div(x_lo, 2 * g, e_hi, MPFR_RNDD);
  mpfr_ui_div(x_hi, 2 * g, e_lo, MPFR_RNDU);
  mpfr_exp(x_lo, x_lo, MPFR_RNDD);
  mpfr_exp(x_hi, x_hi, MPFR_RNDU);
  mpfr_mul_ui(x_lo, x_lo, 2 * g, MPFR_RNDD);
  mpfr_mul_ui(x_hi, x_hi, 2 * g, MPFR_RNDU);

  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, x_lo, MPFR_RNDD);
  lo_floor = Int(z);
  mpfr_get_z(z, x_hi, MPFR_RNDD);
  hi_floor = Int(z);
  mpz_clear(z);
  mpfr_clears(e_lo, e_hi, x_lo, x_hi, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

Int q_of_g(unsigned long g) {
  if (g == 0) throw InvalidInput("q_of_g needs g >= 1");
  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    Int lo, hi;
    q_bounds(g, prec, lo, hi);
    if (lo == hi) return lo;
  }
  throw InsufficientPrecision("q_of_g: floor not determined at 2^20 bits");
}

Int gl_order(unsigned long n, unsigned long q) {
  Int out = 1;
  const Int qn = ipow(Int(q), n);
  for (unsigned long i = 0; i < n; ++i) out *= qn - ipow(Int(q), i);
  return out;
}

Int gl_order_z4(unsigned long n) { return gl_order(n, 2) * ipow(Int(2), n * n); }

Int d_p_of_g(unsigned long p, unsigned long g) {
  if (g == 0) throw InvalidInput("d_p_of_g needs g >= 1");
  if (p != 0 && !is_prime(p)) throw InvalidInput("p must be 0 or a prime");
  return p == 3 ? gl_order_z4(2 * g) : gl_order(2 * g, 3);
}

}  // namespace latkit
