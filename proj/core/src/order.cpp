#include "latkit/order.hpp"

#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"

namespace latkit {

namespace {

// Quaternion product in (a, b / Q) on coordinates (1, i, j, k).
IntVector quaternion_product(const Int& a, const Int& b, const IntVector& x, const IntVector& y) {
  return {
      x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
      x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
      x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
      x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1],
  };
}

// Exact solver for a fixed nonsingular basis, reusing one Smith form.
class BasisSolver {
 public:
  explicit BasisSolver(const IntMatrix& basis) : snf_(smith_normal_form(basis, true)) {
    if (snf_.rank != basis.cols() || !basis.is_square())
      throw InvalidInput("basis is singular or not square");
  }

  std::optional<IntVector> solve(std::span<const Int> rhs) const {
    IntVector u = snf_.U * rhs;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!mpz_divisible_p(u[i].get_mpz_t(), snf_.D(i, i).get_mpz_t())) return std::nullopt;
      u[i] /= snf_.D(i, i);
    }
    return snf_.V * std::span<const Int>(u);
  }

 private:
  SmithForm snf_;
};

}  // namespace

NumberRing NumberRing::integers() { return NumberRing{1, {Int(1)}}; }

NumberRing NumberRing::quadratic(const Int& t, const Int& n) {
  NumberRing r;
  r.degree = 2;
  r.table.assign(8, Int(0));
  r.table[(0 * 2 + 0) * 2 + 0] = 1;
  r.table[(0 * 2 + 1) * 2 + 1] = 1;
  r.table[(1 * 2 + 0) * 2 + 1] = 1;
  r.table[(1 * 2 + 1) * 2 + 0] = -n;
  r.table[(1 * 2 + 1) * 2 + 1] = t;
  return r;
}

Int NumberRing::trace(std::size_t c) const {
  Int s = 0;
  for (std::size_t m = 0; m < degree; ++m) s += table[(c * degree + m) * degree + m];
  return s;
}

Int NumberRing::discriminant() const {
  IntMatrix g(degree, degree);
  for (std::size_t a = 0; a < degree; ++a)
    for (std::size_t b = 0; b < degree; ++b)
      for (std::size_t c = 0; c < degree; ++c) g(a, b) += table[(a * degree + b) * degree + c] * trace(c);
  return det(g);
}

OrderBlock OrderBlock::matrix(NumberRing ring, std::size_t r) {
  if (r == 0) throw InvalidInput("matrix block of size zero");
  const std::size_t e = ring.degree;
  if (ring.table.size() != e * e * e) throw InvalidInput("number ring table has the wrong size");
  const std::size_t n = e * r * r;
  auto idx = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * r + b) * e + c; };

  OrderBlock blk;
  blk.kind_ = Kind::matrix;
  blk.trace_factor_ = r;
  blk.centre_degree_ = e;
  blk.r_ = r;
  blk.sc_.assign(n * n * n, Int(0));
  blk.trd_.assign(n, Int(0));
  blk.unit_.assign(n, Int(0));
  for (std::size_t a = 0; a < r; ++a) {
    blk.unit_[idx(a, a, 0)] = 1;
    for (std::size_t c = 0; c < e; ++c) blk.trd_[idx(a, a, c)] = ring.trace(c);
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t d = 0; d < r; ++d)
        for (std::size_t c = 0; c < e; ++c)
          for (std::size_t c2 = 0; c2 < e; ++c2)
            for (std::size_t m = 0; m < e; ++m)
              blk.sc_[(idx(a, b, c) * n + idx(b, d, c2)) * n + idx(a, d, m)] =
                  ring.table[(c * e + c2) * e + m];
  }
  blk.ring_ = std::move(ring);
  return blk;
}

OrderBlock OrderBlock::quaternion(const Int& a, const Int& b, const IntMatrix& basis,
                                  const Int& denominator) {
  if (basis.rows() != 4 || basis.cols() != 4) throw InvalidInput("quaternion basis must be 4 x 4");
  if (sgn(a) == 0 || sgn(b) == 0 || denominator <= 0) throw InvalidInput("bad quaternion parameters");
  BasisSolver scaled(denominator * basis);
  BasisSolver plain(basis);

  OrderBlock blk;
  blk.kind_ = Kind::quaternion;
  blk.trace_factor_ = 2;
  blk.centre_degree_ = 1;
  blk.r_ = 1;
  blk.sc_.assign(64, Int(0));
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) {
      IntVector p = quaternion_product(a, b, basis.column(s), basis.column(t));
      auto x = scaled.solve(p);
      if (!x) throw InvalidInput("quaternion basis does not span a ring");
      for (std::size_t u = 0; u < 4; ++u) blk.sc_[(s * 4 + t) * 4 + u] = (*x)[u];
    }
  for (std::size_t s = 0; s < 4; ++s) {
    Int twice = 2 * basis(0, s);
    if (!mpz_divisible_p(twice.get_mpz_t(), denominator.get_mpz_t()))
      throw InvalidInput("reduced trace is not integral on the quaternion basis");
    blk.trd_.push_back(twice / denominator);
  }
  IntVector one{denominator, Int(0), Int(0), Int(0)};
  auto u = plain.solve(one);
  if (!u) throw InvalidInput("quaternion basis does not contain 1");
  blk.unit_ = *u;
  return blk;
}

Order::Order(std::vector<OrderBlock> blocks, std::string name)
    : name_(std::move(name)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidInput("order needs at least one block");
  for (const auto& b : blocks_) {
    spans_.push_back(Span{rank_, b.rank(), b.trace_factor()});
    rank_ += b.rank();
  }
  sc_.assign(rank_ * rank_ * rank_, Int(0));
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& b = blocks_[k];
    const std::size_t off = spans_[k].offset, n = b.rank();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
          sc_[((off + s) * rank_ + off + t) * rank_ + off + u] = b.structure_constants()[(s * n + t) * n + u];
    trd_.insert(trd_.end(), b.reduced_trace().begin(), b.reduced_trace().end());
    unit_.insert(unit_.end(), b.unit().begin(), b.unit().end());
  }
}

IntVector Order::multiply(std::span<const Int> x, std::span<const Int> y) const {
  IntVector z(rank_);
  for (std::size_t s = 0; s < rank_; ++s) {
    if (sgn(x[s]) == 0) continue;
    for (std::size_t t = 0; t < rank_; ++t) {
      if (sgn(y[t]) == 0) continue;
      Int f = x[s] * y[t];
      for (std::size_t u = 0; u < rank_; ++u)
        if (sgn(coeff(s, t, u)) != 0) z[u] += f * coeff(s, t, u);
    }
  }
  return z;
}

IntMatrix Order::left_mult(std::span<const Int> x) const {
  IntMatrix m(rank_, rank_);
  for (std::size_t t = 0; t < rank_; ++t) {
    IntVector e(rank_);
    e[t] = 1;
    m.set_column(t, multiply(x, e));
  }
  return m;
}

void Order::set_representation(std::vector<IntMatrix> images) {
  if (images.size() != rank_) throw InvalidInput("representation needs one matrix per basis element");
  const std::size_t n = images[0].rows();
  for (const auto& m : images)
    if (m.rows() != n || m.cols() != n) throw InvalidInput("representation matrices must be square of one size");
  IntMatrix one(n, n);
  for (std::size_t s = 0; s < rank_; ++s) one += unit_[s] * images[s];
  if (!(one == IntMatrix::identity(n))) throw InvalidInput("representation does not send 1 to the identity");
  for (std::size_t s = 0; s < rank_; ++s)
    for (std::size_t t = 0; t < rank_; ++t) {
      IntMatrix expected(n, n);
      for (std::size_t u = 0; u < rank_; ++u)
        if (sgn(coeff(s, t, u)) != 0) expected += coeff(s, t, u) * images[u];
      if (!(images[s] * images[t] == expected))
        throw InvalidInput("representation is not multiplicative");
    }
  rep_ = std::move(images);
}

Order Order::suborder(const IntMatrix& basis, std::string name) const {
  if (basis.rows() != rank_ || basis.cols() != rank_) throw InvalidInput("suborder basis must be square");
  for (std::size_t k = 0; k < spans_.size(); ++k) {
    const auto& sp = spans_[k];
    for (std::size_t j = sp.offset; j < sp.offset + sp.size; ++j)
      for (std::size_t i = 0; i < rank_; ++i)
        if ((i < sp.offset || i >= sp.offset + sp.size) && sgn(basis(i, j)) != 0)
          throw InvalidInput("suborder basis does not respect the block decomposition");
  }
  BasisSolver solver(basis);
  Order out;
  out.name_ = std::move(name);
  out.blocks_ = blocks_;
  out.spans_ = spans_;
  out.rank_ = rank_;
  out.sc_.assign(rank_ * rank_ * rank_, Int(0));
  for (std::size_t s = 0; s < rank_; ++s)
    for (std::size_t t = 0; t < rank_; ++t) {
      auto x = solver.solve(multiply(basis.column(s), basis.column(t)));
      if (!x) throw InvalidInput("suborder basis is not closed under multiplication");
      for (std::size_t u = 0; u < rank_; ++u) out.sc_[(s * rank_ + t) * rank_ + u] = (*x)[u];
    }
  auto u = solver.solve(unit_);
  if (!u) throw InvalidInput("suborder does not contain 1");
  out.unit_ = *u;
  out.trd_ = basis.transpose() * std::span<const Int>(trd_);
  return out;
}

IntMatrix reduced_trace_form(const Order& o) {
  const std::size_t n = o.rank();
  IntMatrix g(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (sgn(o.coeff(s, t, u)) != 0) g(s, t) += o.coeff(s, t, u) * o.reduced_trace()[u];
  return g;
}

Int reduced_trace_discriminant(const Order& o) {
  Int d = det(reduced_trace_form(o));
  if (sgn(d) == 0) throw PreconditionError("reduced trace form is degenerate");
  return d;
}

IntMatrix intrinsic_trace_form(const Order& o) {
  const std::size_t n = o.rank();
  IntVector tau(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t m = 0; m < n; ++m) tau[u] += o.coeff(u, m, m);
  IntMatrix g(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (sgn(o.coeff(s, t, u)) != 0) g(s, t) += o.coeff(s, t, u) * tau[u];
  return g;
}

FpAlgebra reduce_mod(const Order& o, std::uint64_t p) {
  const std::size_t n = o.rank();
  const Int pp(static_cast<unsigned long>(p));
  std::vector<std::uint64_t> sc(n * n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u) sc[(s * n + t) * n + u] = mod_floor(o.coeff(s, t, u), pp).get_ui();
  FpVector unit(n);
  for (std::size_t s = 0; s < n; ++s) unit[s] = mod_floor(o.unit()[s], pp).get_ui();
  return FpAlgebra(p, n, std::move(sc), std::move(unit));
}

PropB1Row verify_prop_b1(const Order& o, std::uint64_t prime) {
  PropB1Row row;
  row.prime = prime;
  row.valuation = valuation(reduced_trace_discriminant(o), Int(static_cast<unsigned long>(prime)));
  row.semisimple = is_semisimple(reduce_mod(o, prime));
  row.holds = (row.valuation == 0) == row.semisimple;
  return row;
}

std::vector<PropB1Row> verify_prop_b1_upto(const Order& o, std::uint64_t lmax) {
  std::vector<PropB1Row> rows;
  for (auto p : primes_upto(lmax)) rows.push_back(verify_prop_b1(o, p));
  return rows;
}

TraceRatioReport check_trace_ratio(const Order& o) {
  TraceRatioReport rep;
  const std::size_t n = o.rank();
  IntVector tau(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t m = 0; m < n; ++m) tau[u] += o.coeff(u, m, m);
  rep.expected_ratio = 1;
  for (const auto& sp : o.spans()) {
    const Int factor(static_cast<unsigned long>(sp.trace_factor));
    for (std::size_t s = sp.offset; s < sp.offset + sp.size; ++s)
      if (tau[s] != factor * o.reduced_trace()[s]) rep.elementwise = false;
    rep.expected_ratio *= ipow(factor, sp.size);
  }
  rep.reduced_det = det(reduced_trace_form(o));
  rep.intrinsic_det = det(intrinsic_trace_form(o));
  rep.det_ratio = rep.intrinsic_det == rep.expected_ratio * rep.reduced_det;
  return rep;
}

bool check_matrix_block_discriminant(const OrderBlock& b) {
  if (b.kind() != OrderBlock::Kind::matrix) throw InvalidInput("not a matrix block");
  Order o({b});
  const std::size_t r = b.matrix_size();
  return abs(reduced_trace_discriminant(o)) == ipow(abs(b.ring()->discriminant()), r * r);
}

IndexLawReport check_index_law(const Order& o, const Order& sub, const IntMatrix& basis) {
  IndexLawReport rep;
  rep.index = abs(det(basis));
  rep.sub_discriminant = reduced_trace_discriminant(sub);
  rep.order_discriminant = reduced_trace_discriminant(o);
  rep.holds = rep.sub_discriminant == rep.index * rep.index * rep.order_discriminant;
  return rep;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace latkit
