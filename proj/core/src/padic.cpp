#include "latkit/padic.hpp"

#include <algorithm>

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"

namespace latkit {

namespace {

// Row-major vec of x -> x g - g x.
IntMatrix commutator_map(const IntMatrix& g) {
  const std::size_t k = g.rows();
  return kronecker(IntMatrix::identity(k), g.transpose()) - kronecker(g, IntMatrix::identity(k));
}

IntMatrix columns_of(const std::vector<IntVector>& vs, std::size_t dim) {
  IntMatrix out(dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) out.set_column(j, vs[j]);
  return out;
}

ResidueSubmodule reduce(const IntMatrix& columns, const Int& modulus) {
  return ResidueSubmodule::from_generators(modulus, columns.rows(), columns);
}

void check_level(unsigned n, unsigned precision) {
  if (n == 0) throw InvalidInput("level n must be positive");
  if (n > precision)
    throw InsufficientPrecision("level " + std::to_string(n) + " exceeds precision " +
                                std::to_string(precision));
}

}  // namespace

void PadicModule::validate() const {
  if (!is_prime(ell)) throw InvalidInput("ell must be prime");
  if (precision == 0) throw InvalidInput("precision must be positive");
  if (rank == 0) throw InvalidInput("rank must be positive");
  if (gram) {
    if (gram->rows() != rank || gram->cols() != rank) throw InvalidInput("Gram has wrong shape");
    if (!gram->is_symmetric()) throw InvalidInput("Gram must be symmetric");
  }
}

std::size_t ActionData::dim() const { return generators.empty() ? 0 : generators.front().rows(); }

void ActionData::validate() const {
  if (!is_prime(ell)) throw InvalidInput("ell must be prime");
  if (precision == 0) throw InvalidInput("precision must be positive");
  if (generators.empty()) throw InvalidInput("action needs at least one generator");
  const std::size_t k = dim();
  if (k == 0) throw InvalidInput("generators must be nonempty matrices");
  for (const auto& g : generators)
    if (g.rows() != k || g.cols() != k) throw InvalidInput("generators must be square of equal size");
}

void validate_group_action(const PadicModule& m, const ActionData& a) {
  m.validate();
  a.validate();
  if (a.dim() != m.rank) throw InvalidInput("action and module ranks differ");
  if (a.ell != m.ell) throw InvalidInput("action and module primes differ");
  const Int mod = m.modulus(m.precision);
  for (const auto& g : a.generators) {
    if (sgn(det(g)) == 0 || det(g) % Int(m.ell) == 0)
      throw PreconditionError("group generator is not invertible mod ell");
    if (m.gram) {
      IntMatrix diff = g.transpose() * *m.gram * g - *m.gram;
      reduce_mod(diff, mod);
      if (!diff.is_zero()) throw PreconditionError("group generator does not preserve the form");
    }
  }
}

ResidueSubmodule invariants_mod(const PadicModule& m, const ActionData& a, unsigned n) {
  m.validate();
  a.validate();
  if (a.dim() != m.rank) throw InvalidInput("action and module ranks differ");
  check_level(n, std::min(m.precision, a.precision));
  const std::size_t k = m.rank;
  std::vector<IntMatrix> blocks;
  for (const auto& g : a.generators) blocks.push_back(g - IntMatrix::identity(k));
  IntMatrix stacked = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) stacked = vstack(stacked, blocks[i]);
  return ResidueSubmodule::from_generators(kernel_basis_mod(ResidueMatrix(m.modulus(n), stacked)), k);
}

Lemma16Report check_lemma_16may(const PadicModule& m, const IntMatrix& sub, const ActionData& a,
                                unsigned n) {
  validate_group_action(m, a);
  if (!m.gram) throw PreconditionError("module needs a Gram matrix");
  if (sub.rows() != m.rank || sub.cols() == 0) throw InvalidInput("submodule basis has wrong shape");
  check_level(n, std::min(m.precision, a.precision));

  const unsigned big = std::min(m.precision, a.precision);
  const Int full_mod = m.modulus(big);
  const ResidueSubmodule sub_full = reduce(sub, full_mod);
  for (const auto& g : a.generators)
    if (!sub_full.contains(sub_full.image(g)))
      throw PreconditionError("submodule is not stable under the action");

  Lemma16Report rep;
  rep.level = n;
  rep.discriminant = det(sub.transpose() * *m.gram * sub);
  if (sgn(rep.discriminant) == 0 || rep.discriminant % full_mod == 0)
    throw PreconditionError("restricted form is degenerate at this precision");
  rep.valuation = valuation(rep.discriminant, Int(m.ell));
  if (big < n + rep.valuation + 2)
    throw InsufficientPrecision("need precision >= n + v + 2 = " +
                                std::to_string(n + rep.valuation + 2));

  const Int mod = m.modulus(n);
  const ResidueSubmodule sl = reduce(sub, mod);
  ResidueSubmodule fixed = ResidueSubmodule::full(mod, m.rank);
  for (const auto& g : a.generators)
    fixed = fixed.intersection(ResidueSubmodule::preimage(g - IntMatrix::identity(m.rank), sl));
  const ResidueSubmodule image = invariants_mod(m, a, n).sum(sl);

  rep.quotient_invariants = relative_invariants(fixed, sl);
  rep.image_invariants = relative_invariants(image, sl);
  rep.holds = image.contains(fixed.scaled(rep.discriminant));
  return rep;
}

ResidueSubmodule generated_algebra(const ActionData& a, unsigned n) {
  a.validate();
  check_level(n, a.precision);
  const std::size_t k = a.dim();
  const Int mod = a.modulus(n);
  ResidueSubmodule span = reduce(columns_of({flatten(IntMatrix::identity(k))}, k * k), mod);
  while (true) {
    std::vector<IntVector> pool;
    for (const auto& v : span.smith_generators().generators) {
      const IntMatrix x = unflatten(v, k);
      for (const auto& g : a.generators) pool.push_back(flatten(x * g));
    }
    const ResidueSubmodule next = span.sum(reduce(columns_of(pool, k * k), mod));
    if (span.contains(next)) return span;
    span = next;
  }
}

ResidueSubmodule centralizer_mod(const ActionData& a, unsigned n) {
  a.validate();
  check_level(n, a.precision);
  IntMatrix stacked = commutator_map(a.generators.front());
  for (std::size_t i = 1; i < a.generators.size(); ++i)
    stacked = vstack(stacked, commutator_map(a.generators[i]));
  return ResidueSubmodule::from_generators(kernel_basis_mod(ResidueMatrix(a.modulus(n), stacked)),
                                           a.dim() * a.dim());
}

IntMatrix centralizer_exact(const ActionData& a) {
  a.validate();
  IntMatrix stacked = commutator_map(a.generators.front());
  for (std::size_t i = 1; i < a.generators.size(); ++i)
    stacked = vstack(stacked, commutator_map(a.generators[i]));
  return kernel_basis(stacked);
}

Lemma13Report check_lemma_13aug(const ActionData& a, unsigned n_max) {
  a.validate();
  if (n_max == 0) throw InvalidInput("n_max must be positive");
  const std::size_t k = a.dim();
  const IntMatrix cent = centralizer_exact(a);
  const std::size_t c = cent.cols();

  std::vector<IntMatrix> basis;
  for (std::size_t j = 0; j < c; ++j) basis.push_back(unflatten(cent.column(j), k));
  // Row i is y -> Tr(L_i y).
  IntMatrix functionals(c, k * k);
  for (std::size_t i = 0; i < c; ++i) functionals.set_row(i, flatten(basis[i].transpose()));
  IntMatrix trace_gram(c, c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) trace_gram(i, j) = dot(functionals.row(i), cent.column(j));

  Lemma13Report rep;
  rep.discriminant = det(trace_gram);
  if (sgn(rep.discriminant) == 0) throw PreconditionError("trace form on the centralizer is degenerate");
  rep.a = valuation(rep.discriminant, Int(a.ell));
  if (a.precision < n_max + rep.a + 2)
    throw InsufficientPrecision("need precision >= n_max + a + 2 = " +
                                std::to_string(n_max + rep.a + 2));

  const IntMatrix perp = kernel_basis(functionals);
  const Int ell(a.ell);
  for (unsigned n = 1; n <= n_max; ++n) {
    const Int mod = a.modulus(n);
    const ResidueSubmodule local = centralizer_mod(a, n);
    const ResidueSubmodule global = reduce(cent, mod);
    const ResidueSubmodule perp_n =
        perp.cols() == 0 ? ResidueSubmodule::zero(mod, k * k) : reduce(perp, mod);
    const ResidueSubmodule meet = perp_n.intersection(local);

    Lemma13Row row;
    row.level = n;
    row.contained = local.contains(global);
    row.r = relative_exponent(local, global.intersection(local), ell);
    row.perp_exponent = relative_exponent(meet, ResidueSubmodule::zero(mod, k * k), ell);
    row.divisible = perp_n.scaled(ell).contains(meet);
    rep.rows.push_back(row);
  }

  rep.b = 0;
  for (const auto& row : rep.rows)
    if (!row.divisible) rep.b = row.level;
  rep.stabilized = rep.rows.back().divisible;
  rep.holds = true;
  for (const auto& row : rep.rows) {
    rep.r_max = std::max(rep.r_max, row.r);
    if (!row.contained || row.r > rep.a + row.perp_exponent) rep.holds = false;
  }
  if (rep.r_max > rep.a + rep.b) rep.holds = false;
  return rep;
}

FpAlgebra generated_algebra_mod_ell(const ActionData& a) {
  const ResidueSubmodule span = generated_algebra(a, 1);
  const std::size_t k = a.dim();
  const std::uint64_t p = a.ell;
  std::vector<FpVector> rows;
  for (const auto& v : span.smith_generators().generators) {
    FpVector r(k * k);
    for (std::size_t i = 0; i < k * k; ++i) r[i] = mod_floor(v[i], Int(p)).get_ui();
    rows.push_back(std::move(r));
  }
  const std::vector<FpVector> basis = fp_row_reduce(std::move(rows), p);
  const std::size_t d = basis.size();
  std::vector<std::size_t> pivots;
  for (const auto& b : basis)
    pivots.push_back(static_cast<std::size_t>(
        std::find_if(b.begin(), b.end(), [](std::uint64_t x) { return x != 0; }) - b.begin()));

  auto coords = [&](const FpVector& x) {
    FpVector out(d);
    for (std::size_t t = 0; t < d; ++t) out[t] = x[pivots[t]];
    return out;
  };
  auto mat_mult = [&](const FpVector& x, const FpVector& y) {
    FpVector out(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t m = 0; m < k; ++m) {
        if (x[i * k + m] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
          out[i * k + j] = (out[i * k + j] + x[i * k + m] * y[m * k + j]) % p;
      }
    return out;
  };

  std::vector<std::uint64_t> sc(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const FpVector c = coords(mat_mult(basis[i], basis[j]));
      for (std::size_t t = 0; t < d; ++t) sc[(i * d + j) * d + t] = c[t];
    }
  FpVector id(k * k);
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = 1;
  return FpAlgebra(p, d, std::move(sc), coords(id));
}

std::optional<bool> double_centralizer_check(const ActionData& a, unsigned n) {
  a.validate();
  check_level(n, a.precision);
  if (!is_semisimple(generated_algebra_mod_ell(a))) return std::nullopt;
  const std::size_t k = a.dim();
  const ResidueSubmodule cent = centralizer_mod(a, n);
  ActionData second{a.ell, a.precision, {}};
  for (const auto& v : cent.smith_generators().generators) second.generators.push_back(unflatten(v, k));
  if (second.generators.empty()) second.generators.push_back(IntMatrix(k, k));
  return centralizer_mod(second, n) == generated_algebra(a, n);
}

}  // namespace latkit
