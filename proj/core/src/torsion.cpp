#include "latkit/torsion.hpp"

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"
#include "latkit/fp_algebra.hpp"

namespace latkit {

namespace {

Int inverse_unit(const Int& x, const Int& modulus) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw PreconditionError("multiplier is not a unit");
  return inv;
}

ResidueSubmodule span_of(const std::vector<IntMatrix>& ms, std::size_t n, const Int& modulus) {
  if (ms.empty()) return ResidueSubmodule::zero(modulus, n * n);
  IntMatrix cols(n * n, ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (ms[j].rows() != n || ms[j].cols() != n) throw InvalidInput("matrix has wrong shape");
    cols.set_column(j, flatten(ms[j]));
  }
  return ResidueSubmodule::from_generators(modulus, n * n, cols);
}

ResidueSubmodule alternating_forms(std::size_t n, const Int& modulus) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IntMatrix e(n, n);
      e(i, j) = 1;
      e(j, i) = -1;
      gens.push_back(std::move(e));
    }
  return span_of(gens, n, modulus);
}

// Row-major vec of U -> U + U^T.
IntMatrix symmetrizer(std::size_t n) {
  IntMatrix m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i * n + j, i * n + j) += 1;
      m(i * n + j, j * n + i) += 1;
    }
  return m;
}

// {x in big : act_i x - x in small for all i} / small.
std::vector<Int> invariants_of_quotient(const std::vector<IntMatrix>& actions,
                                        const ResidueSubmodule& big, const ResidueSubmodule& small) {
  ResidueSubmodule fixed = big;
  const std::size_t d = big.dim();
  for (const auto& a : actions) {
    if (!small.contains(small.image(a))) throw PreconditionError("subspace is not Gamma-stable");
    fixed = fixed.intersection(ResidueSubmodule::preimage(a - IntMatrix::identity(d), small));
  }
  return relative_invariants(fixed, small);
}

}  // namespace

TorsionPairingModule::TorsionPairingModule(std::uint64_t ell, unsigned level, std::size_t g,
                                           IntMatrix pairing, std::vector<IntMatrix> gamma)
    : ell_(ell), level_(level), g_(g), pairing_(std::move(pairing)), gamma_(std::move(gamma)) {
  if (!is_prime(ell)) throw InvalidInput("ell must be prime");
  if (level == 0) throw InvalidInput("level must be positive");
  if (g == 0) throw InvalidInput("g must be positive");
  modulus_ = ipow(Int(ell), level);
  const std::size_t n = 2 * g;
  if (pairing_.rows() != n || pairing_.cols() != n) throw InvalidInput("pairing has wrong shape");
  reduce_mod(pairing_, modulus_);
  IntMatrix sum = pairing_ + pairing_.transpose();
  reduce_mod(sum, modulus_);
  if (!sum.is_zero()) throw InvalidInput("pairing is not skew-symmetric");
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(pairing_(i, i)) != 0) throw InvalidInput("pairing is not alternating");
  if (det(pairing_) % Int(ell) == 0) throw InvalidInput("pairing is not perfect");

  // Any unit entry of J recovers chi from gamma^T J gamma.
  std::size_t pa = 0, pb = 1;
  while (pairing_(pa, pb) % Int(ell) == 0) {
    if (++pb == n) {
      pb = 0;
      ++pa;
    }
  }
  const Int jinv = inverse_unit(pairing_(pa, pb), modulus_);
  for (auto& gm : gamma_) {
    if (gm.rows() != n || gm.cols() != n) throw InvalidInput("Gamma element has wrong shape");
    reduce_mod(gm, modulus_);
    IntMatrix img = gm.transpose() * pairing_ * gm;
    reduce_mod(img, modulus_);
    const Int chi = mod_floor(img(pa, pb) * jinv, modulus_);
    if (chi % Int(ell) == 0) throw InvalidInput("Gamma element has a non-unit multiplier");
    IntMatrix diff = img - chi * pairing_;
    reduce_mod(diff, modulus_);
    if (!diff.is_zero()) throw InvalidInput("Gamma element is not a similitude of the pairing");
    multipliers_.push_back(chi);
  }
}

IntMatrix TorsionPairingModule::standard_pairing(std::size_t g) {
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

IntMatrix TorsionPairingModule::hom_action(std::size_t i) const {
  const IntMatrix& gm = gamma_.at(i);
  // vec(A U B) = (A kron B^T) vec(U) with A = g^T, B = g.
  IntMatrix m = inverse_unit(multipliers_[i], modulus_) * kronecker(gm.transpose(), gm.transpose());
  reduce_mod(m, modulus_);
  return m;
}

IntMatrix TorsionPairingModule::end_action(std::size_t i) const {
  const IntMatrix& gm = gamma_.at(i);
  const auto inv = inverse_mod(gm, modulus_);
  if (!inv) throw PreconditionError("Gamma element is not invertible");
  IntMatrix m = kronecker(gm, inv->transpose());
  reduce_mod(m, modulus_);
  return m;
}

HomDecomposition hom_decompose(const TorsionPairingModule& t) {
  const std::size_t n = t.rank();
  HomDecomposition out{
      ResidueSubmodule::from_generators(kernel_basis_mod(ResidueMatrix(t.modulus(), symmetrizer(n))),
                                        n * n),
      alternating_forms(n, t.modulus()),
      {},
      1,
      false};
  out.contained = out.symmetric.contains(out.alternating);
  out.index_invariants = relative_invariants(out.symmetric, out.alternating);
  for (const Int& d : out.index_invariants) out.index *= d;
  return out;
}

std::vector<Int> brauer_quotient_invariants(const TorsionPairingModule& t,
                                            const std::vector<IntMatrix>& ns) {
  const std::size_t n = t.rank();
  std::vector<IntMatrix> image;
  for (const auto& u : ns) {
    if (u.rows() != n || u.cols() != n) throw InvalidInput("NS generator has wrong shape");
    IntMatrix sym = u + u.transpose();
    reduce_mod(sym, t.modulus());
    if (!sym.is_zero()) throw PreconditionError("NS generator is not skew-symmetric mod l^n");
    image.push_back(-u);
  }
  const ResidueSubmodule alt = alternating_forms(n, t.modulus());
  std::vector<IntMatrix> actions;
  for (std::size_t i = 0; i < t.gamma().size(); ++i) actions.push_back(t.hom_action(i));
  return invariants_of_quotient(actions, alt, span_of(image, n, t.modulus()));
}

Ker2Result ker2_exponent_check(const TorsionPairingModule& t, const std::vector<IntMatrix>& r) {
  const std::size_t n = t.rank();
  if (r.empty()) throw InvalidInput("R needs at least one generator");
  IntMatrix cols(n * n, r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j].rows() != n || r[j].cols() != n) throw InvalidInput("R generator has wrong shape");
    cols.set_column(j, flatten(r[j]));
  }
  const IntMatrix basis = column_span_basis(cols);
  for (const auto& u : r)
    if (!solve_integer(basis, flatten(-u.transpose())))
      throw PreconditionError("R is not stable under the dual involution");

  const ResidueSubmodule rn = span_of(r, n, t.modulus());
  for (std::size_t i = 0; i < t.gamma().size(); ++i)
    if (!rn.contains(rn.image(t.hom_action(i)))) throw PreconditionError("R is not Gamma-stable");

  // Self-dual part over Z: combinations c with basis c + (basis c)^T = 0.
  const IntMatrix sym_coeffs = kernel_basis(symmetrizer(n) * basis);
  const IntMatrix ns = basis * sym_coeffs;
  std::vector<IntMatrix> ns_gens;
  for (std::size_t j = 0; j < ns.cols(); ++j) ns_gens.push_back(unflatten(ns.column(j), n));

  const ResidueSubmodule alt = alternating_forms(n, t.modulus());
  const ResidueSubmodule ns_image = span_of(ns_gens, n, t.modulus());
  const ResidueSubmodule lifted = alt.intersection(rn);

  Ker2Result out;
  out.symmetric_rank = ns.cols();
  out.kernel_invariants = relative_invariants(lifted, ns_image);
  out.holds = ns_image.contains(lifted.scaled(2));
  return out;
}

std::vector<Int> third_summand_invariants(const TorsionPairingModule& t,
                                          const std::vector<IntMatrix>& endos) {
  const std::size_t n = t.rank();
  const ResidueSubmodule span = span_of(endos, n, t.modulus());
  for (const auto& x : endos)
    for (const auto& y : endos)
      if (!span.contains(flatten(x * y))) throw PreconditionError("endomorphisms do not span a subring");
  std::vector<IntMatrix> actions;
  for (std::size_t i = 0; i < t.gamma().size(); ++i) actions.push_back(t.end_action(i));
  return invariants_of_quotient(actions, ResidueSubmodule::full(t.modulus(), n * n), span);
}

}  // namespace latkit
