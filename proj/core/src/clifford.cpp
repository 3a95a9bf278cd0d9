#include "latkit/clifford.hpp"

#include <bit>

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"

namespace latkit {

namespace {

using Sparse = std::vector<std::pair<std::uint32_t, Int>>;

Sparse compress(std::vector<Int>& acc) {
  Sparse out;
  for (std::uint32_t m = 0; m < acc.size(); ++m)
    if (sgn(acc[m]) != 0) {
      out.emplace_back(m, acc[m]);
      acc[m] = 0;
    }
  return out;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(Lattice base, std::size_t rank_cap) : base_(std::move(base)) {
  const std::size_t r = base_.rank();
  if (r > rank_cap)
    throw CapExceeded("Clifford algebra of rank " + std::to_string(r) + " exceeds cap " +
                      std::to_string(rank_cap));
  dim_ = std::size_t{1} << r;
  table_.resize(dim_ * dim_);
  std::vector<Int> acc(dim_);
  for (std::uint32_t t = 0; t < dim_; ++t) {
    for (std::uint32_t s = 0; s < dim_; ++s) {
      Sparse cur{{t, Int(1)}};
      for (std::size_t j = r; j-- > 0;) {
        if (!(s >> j & 1u)) continue;
        for (const auto& [m, c] : cur)
          for (const auto& [m2, c2] : generator_times(j, m)) acc[m2] += c * c2;
        cur = compress(acc);
      }
      table_[s * dim_ + t] = std::move(cur);
    }
  }
  reversed_.resize(dim_);
  for (std::uint32_t s = 0; s < dim_; ++s) {
    // e_{s_k} ... e_{s_1}: apply generators lowest first from the left.
    Sparse cur{{0u, Int(1)}};
    for (std::size_t j = 0; j < r; ++j) {
      if (!(s >> j & 1u)) continue;
      for (const auto& [m, c] : cur)
        for (const auto& [m2, c2] : generator_times(j, m)) acc[m2] += c * c2;
      cur = compress(acc);
    }
    reversed_[s] = IntVector(dim_);
    for (const auto& [m, c] : cur) reversed_[s][m] = c;
  }
}

std::vector<std::pair<std::uint32_t, Int>> CliffordAlgebra::generator_times(std::size_t j,
                                                                            std::uint32_t t) const {
  const std::uint32_t bit = 1u << j;
  if (t == 0) return {{bit, Int(1)}};
  const std::size_t low = static_cast<std::size_t>(std::countr_zero(t));
  const std::uint32_t rest = t & (t - 1);
  if (j < low) return {{t | bit, Int(1)}};
  const IntMatrix& g = base_.gram();
  if (j == low) {
    if (sgn(g(j, j)) == 0) return {};
    return {{rest, g(j, j)}};
  }
  // e_j e_low = 2 (e_low.e_j) - e_low e_j, and e_low prepends to anything above it.
  Sparse out;
  if (sgn(g(low, j)) != 0) out.emplace_back(rest, 2 * g(low, j));
  for (auto& [m, c] : generator_times(j, rest)) out.emplace_back(m | (1u << low), -c);
  return out;
}

IntVector CliffordAlgebra::unit() const { return basis_element(0); }

IntVector CliffordAlgebra::basis_element(std::uint32_t mask) const {
  IntVector v(dim_);
  v.at(mask) = 1;
  return v;
}

IntVector CliffordAlgebra::from_lattice(std::span<const Int> v) const {
  if (v.size() != rank()) throw InvalidInput("lattice vector has wrong length");
  IntVector x(dim_);
  for (std::size_t i = 0; i < v.size(); ++i) x[std::size_t{1} << i] = v[i];
  return x;
}

IntVector CliffordAlgebra::multiply(std::span<const Int> x, std::span<const Int> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InvalidInput("Clifford element has wrong length");
  IntVector out(dim_);
  for (std::uint32_t s = 0; s < dim_; ++s) {
    if (sgn(x[s]) == 0) continue;
    for (std::uint32_t t = 0; t < dim_; ++t) {
      if (sgn(y[t]) == 0) continue;
      const Int st = x[s] * y[t];
      for (const auto& [m, c] : product(s, t)) out[m] += st * c;
    }
  }
  return out;
}

IntVector CliffordAlgebra::reversal(std::span<const Int> x) const {
  if (x.size() != dim_) throw InvalidInput("Clifford element has wrong length");
  IntVector out(dim_);
  for (std::uint32_t s = 0; s < dim_; ++s) {
    if (sgn(x[s]) == 0) continue;
    for (std::uint32_t m = 0; m < dim_; ++m)
      if (sgn(reversed_[s][m]) != 0) out[m] += x[s] * reversed_[s][m];
  }
  return out;
}

IntMatrix CliffordAlgebra::left_mult_matrix(std::span<const Int> x) const {
  if (x.size() != dim_) throw InvalidInput("Clifford element has wrong length");
  IntMatrix out(dim_, dim_);
  for (std::uint32_t s = 0; s < dim_; ++s) {
    if (sgn(x[s]) == 0) continue;
    for (std::uint32_t t = 0; t < dim_; ++t)
      for (const auto& [m, c] : product(s, t)) out(m, t) += x[s] * c;
  }
  return out;
}

Int CliffordAlgebra::trace(std::span<const Int> x) const {
  if (x.size() != dim_) throw InvalidInput("Clifford element has wrong length");
  Int out = 0;
  for (std::uint32_t s = 0; s < dim_; ++s) {
    if (sgn(x[s]) == 0) continue;
    for (std::uint32_t t = 0; t < dim_; ++t)
      for (const auto& [m, c] : product(s, t))
        if (m == t) out += x[s] * c;
  }
  return out;
}

TraceRestrictionReport trace_restriction_check(const CliffordAlgebra& c) {
  const std::size_t r = c.rank();
  TraceRestrictionReport rep{IntMatrix(r, r), ipow(Int(2), r), true};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const IntVector prod = c.multiply(c.basis_element(1u << i), c.basis_element(1u << j));
      rep.traces(i, j) = c.trace(prod);
      if (rep.traces(i, j) != rep.scalar * c.base().gram()(i, j)) rep.holds = false;
    }
  return rep;
}

SymplecticReport symplectic_form(const CliffordAlgebra& c, std::span<const Int> f1,
                                 std::span<const Int> f2) {
  const Lattice& l = c.base();
  if (f1.size() != l.rank() || f2.size() != l.rank()) throw InvalidInput("f1, f2 have wrong length");
  if (sgn(l.inner(f1, f2)) != 0) throw PreconditionError("f1 and f2 must be orthogonal");
  if (sgn(l.inner(f1, f1)) <= 0 || sgn(l.inner(f2, f2)) <= 0)
    throw PreconditionError("f1 and f2 must have positive norm");
  const std::size_t n = c.dim();
  const IntVector f12 = c.multiply(c.from_lattice(f1), c.from_lattice(f2));
  SymplecticReport rep{IntMatrix(n, n), true, 0};
  for (std::uint32_t v = 0; v < n; ++v) {
    const IntVector left = c.multiply(f12, c.reversal(c.basis_element(v)));
    for (std::uint32_t w = 0; w < n; ++w) rep.gram(v, w) = c.trace(c.multiply(left, c.basis_element(w)));
  }
  rep.skew = rep.gram == -rep.gram.transpose();
  rep.det = det(rep.gram);
  return rep;
}

ComplementReport complement_index(const Lattice& l, std::size_t rank_cap) {
  if (l.rank() > rank_cap)
    throw CapExceeded("complement index of rank " + std::to_string(l.rank()) + " exceeds cap " +
                      std::to_string(rank_cap));
  const CliffordAlgebra c(l, rank_cap);
  const std::size_t r = l.rank();
  const std::size_t n = c.dim();

  std::vector<IntMatrix> images;
  for (std::size_t i = 0; i < r; ++i) images.push_back(c.left_mult_matrix(c.basis_element(1u << i)));

  // Row i is the functional y -> Tr(Phi(e_i) y) on row-major End(C(L)).
  IntMatrix functionals(r, n * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (sgn(images[i](a, b)) != 0) functionals(i, b * n + a) = images[i](a, b);

  IntMatrix restricted(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) restricted(i, j) = dot(functionals.row(i), flatten(images[j]));

  ComplementReport rep;
  rep.restricted_discriminant = det(restricted);
  rep.complement_rank = kernel_basis(functionals).cols();

  // End / L^perp is the image of the functionals; L maps onto the restricted Gram's columns.
  const IntMatrix image = column_span_basis(functionals);
  if (image.cols() != r) throw Error("functionals of L are not independent");
  IntMatrix coords(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto x = solve_integer(image, restricted.column(j));
    if (!x) throw Error("image of L does not lie in its own functional lattice");
    for (std::size_t i = 0; i < r; ++i) coords(i, j) = (*x)[i];
  }
  rep.order = 1;
  for (const Int& d : elementary_divisors(coords)) {
    rep.order *= d;
    if (d > 1) rep.invariants.push_back(d);
  }
  rep.matches = rep.order == abs(rep.restricted_discriminant);
  return rep;
}

}  // namespace latkit
