#include "latkit/residue_submodule.hpp"

#include <algorithm>

#include "latkit/error.hpp"

namespace latkit {

namespace {

Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Solve lower-triangular h * x = rhs exactly; every division must be exact.
IntMatrix lower_solve(const IntMatrix& h, const IntMatrix& rhs) {
  const std::size_t k = h.rows();
  IntMatrix x(k, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      Int r = rhs(i, c);
      for (std::size_t j = 0; j < i; ++j) r -= h(i, j) * x(j, c);
      if (!mpz_divisible_p(r.get_mpz_t(), h(i, i).get_mpz_t()))
        throw PreconditionError("submodule is not contained in the reference submodule");
      x(i, c) = r / h(i, i);
    }
  }
  return x;
}

std::vector<Int> nontrivial(const std::vector<Int>& divisors) {
  std::vector<Int> out;
  for (const auto& d : divisors)
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace

IntMatrix ResidueSubmodule::modular_hnf(const Int& modulus, std::size_t dim,
                                        std::vector<IntVector> pool) {
  IntMatrix h(dim, dim);
  for (auto& v : pool) reduce_mod(v, modulus);
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector p(dim);
    p[i] = modulus;
    for (auto& c : pool) {
      if (sgn(c[i]) == 0) continue;
      if (mpz_divisible_p(c[i].get_mpz_t(), p[i].get_mpz_t())) {
        Int q = c[i] / p[i];
        for (std::size_t r = i; r < dim; ++r) c[r] -= q * p[r];
      } else {
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[i].get_mpz_t(),
                   c[i].get_mpz_t());
        const Int a = p[i] / g;
        const Int b = c[i] / g;
        for (std::size_t r = i; r < dim; ++r) {
          const Int x = p[r];
          const Int y = c[r];
          p[r] = s * x + t * y;
          c[r] = b * x - a * y;
        }
      }
      for (std::size_t r = i + 1; r < dim; ++r) c[r] = mod_floor(c[r], modulus);
      c[i] = 0;
      for (std::size_t r = i + 1; r < dim; ++r) p[r] = mod_floor(p[r], modulus);
    }
    for (std::size_t r = i; r < dim; ++r) h(r, i) = p[r];
    std::erase_if(pool, [&](const IntVector& v) {
      return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
    });
  }
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Int q = fdiv_q(h(i, j), h(i, i));
      if (sgn(q) == 0) continue;
      for (std::size_t r = i; r < dim; ++r) h(r, j) -= q * h(r, i);
    }
  }
  return h;
}

ResidueSubmodule ResidueSubmodule::from_generators(const Int& modulus, std::size_t dim,
                                                   const IntMatrix& columns) {
  if (modulus <= 0) throw InvalidInput("modulus must be positive");
  if (columns.rows() != dim && columns.cols() != 0)
    throw InvalidInput("generator length does not match the ambient rank");
  std::vector<IntVector> pool;
  pool.reserve(columns.cols());
  for (std::size_t j = 0; j < columns.cols(); ++j) pool.push_back(columns.column(j));
  return ResidueSubmodule(modulus, modular_hnf(modulus, dim, std::move(pool)));
}

ResidueSubmodule ResidueSubmodule::from_generators(const ModuleGenerators& gens, std::size_t dim) {
  return ResidueSubmodule(gens.modulus, modular_hnf(gens.modulus, dim, gens.generators));
}

ResidueSubmodule ResidueSubmodule::zero(const Int& modulus, std::size_t dim) {
  return ResidueSubmodule(modulus, IntMatrix::scalar(dim, modulus));
}

ResidueSubmodule ResidueSubmodule::full(const Int& modulus, std::size_t dim) {
  return ResidueSubmodule(modulus, IntMatrix::identity(dim));
}

ResidueSubmodule ResidueSubmodule::preimage(const IntMatrix& a, const ResidueSubmodule& target) {
  if (a.rows() != target.dim()) throw InvalidInput("preimage: map does not land in the target");
  const std::size_t m = a.cols();
  IntMatrix k = kernel_basis(hstack(a, -target.hnf_));
  return from_generators(target.modulus_, m, k.submatrix(0, 0, m, k.cols()));
}

bool ResidueSubmodule::contains(std::span<const Int> v) const {
  if (v.size() != dim()) throw InvalidInput("contains: vector length mismatch");
  IntVector w(v.begin(), v.end());
  reduce_mod(w, modulus_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(w[i]) == 0) continue;
    if (!mpz_divisible_p(w[i].get_mpz_t(), hnf_(i, i).get_mpz_t())) return false;
    Int q = w[i] / hnf_(i, i);
    for (std::size_t r = i; r < dim(); ++r) w[r] = mod_floor(w[r] - q * hnf_(r, i), modulus_);
  }
  return true;
}

bool ResidueSubmodule::contains(const ResidueSubmodule& other) const {
  if (other.modulus_ != modulus_ || other.dim() != dim()) return false;
  for (std::size_t j = 0; j < dim(); ++j)
    if (!contains(other.hnf_.column(j))) return false;
  return true;
}

bool ResidueSubmodule::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (hnf_(i, i) != modulus_) return false;
  return true;
}

ResidueSubmodule ResidueSubmodule::sum(const ResidueSubmodule& other) const {
  if (other.modulus_ != modulus_ || other.dim() != dim())
    throw InvalidInput("sum of submodules of different modules");
  return from_generators(modulus_, dim(), hstack(hnf_, other.hnf_));
}

ResidueSubmodule ResidueSubmodule::intersection(const ResidueSubmodule& other) const {
  if (other.modulus_ != modulus_ || other.dim() != dim())
    throw InvalidInput("intersection of submodules of different modules");
  const std::size_t k = dim();
  IntMatrix ker = kernel_basis(hstack(hnf_, -other.hnf_));
  return from_generators(modulus_, k, hnf_ * ker.submatrix(0, 0, k, ker.cols()));
}

ResidueSubmodule ResidueSubmodule::scaled(const Int& c) const {
  return from_generators(modulus_, dim(), c * hnf_);
}

ResidueSubmodule ResidueSubmodule::image(const IntMatrix& a) const {
  if (a.cols() != dim()) throw InvalidInput("image: map does not start at this module");
  return from_generators(modulus_, a.rows(), a * hnf_);
}

ModuleGenerators ResidueSubmodule::smith_generators() const {
  // S = H Z^k and N Z^k = H C Z^k, so S / N Z^k is the cokernel of C.
  IntMatrix c = lower_solve(hnf_, IntMatrix::scalar(dim(), modulus_));
  SmithForm s = smith_normal_form(c, true);
  ModuleGenerators out{modulus_, {}, {}};
  for (std::size_t i = 0; i < dim(); ++i) {
    const Int& d = s.D(i, i);
    if (d == 1) continue;
    IntVector v = s.V.column(i);
    Int scale = modulus_ / d;
    for (auto& x : v) x *= scale;
    reduce_mod(v, modulus_);
    out.generators.push_back(std::move(v));
    out.orders.push_back(d);
  }
  return out;
}

std::vector<Int> ResidueSubmodule::invariants() const { return smith_generators().orders; }

std::vector<Int> ResidueSubmodule::quotient_invariants() const {
  return nontrivial(elementary_divisors(hnf_));
}

Int ResidueSubmodule::order() const {
  Int o = ipow(modulus_, dim());
  for (std::size_t i = 0; i < dim(); ++i) o /= hnf_(i, i);
  return o;
}

std::vector<Int> relative_invariants(const ResidueSubmodule& big, const ResidueSubmodule& small) {
  if (big.modulus() != small.modulus() || big.dim() != small.dim())
    throw InvalidInput("relative_invariants: submodules of different modules");
  return nontrivial(elementary_divisors(lower_solve(big.hnf(), small.hnf())));
}

unsigned relative_exponent(const ResidueSubmodule& big, const ResidueSubmodule& small,
                           const Int& p) {
  unsigned e = 0;
  for (const auto& d : relative_invariants(big, small)) e = std::max(e, valuation(d, p));
  return e;
}

}  // namespace latkit
