#include "latkit/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "latkit/error.hpp"

namespace latkit {

namespace {

Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// row_i += q * row_j
void row_addmul(IntMatrix& a, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (sgn(a(j, c)) != 0) a(i, c) += q * a(j, c);
}

void col_addmul(IntMatrix& a, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (sgn(a(r, j)) != 0) a(r, i) += q * a(r, j);
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) swap(a(r, i), a(r, j));
}

void negate_row(IntMatrix& a, std::size_t i) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
}

void negate_col(IntMatrix& a, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
}

// Column j := s*col_j + t*col_k, column k := u*col_j + v*col_k.
void col_combine(IntMatrix& a, std::size_t j, std::size_t k, const Int& s, const Int& t,
                 const Int& u, const Int& v) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Int x = a(r, j);
    const Int y = a(r, k);
    if (sgn(x) == 0 && sgn(y) == 0) continue;
    a(r, j) = s * x + t * y;
    a(r, k) = u * x + v * y;
  }
}

struct SnfWork {
  IntMatrix a, u, v;
  bool track;

  void rowop(std::size_t i, std::size_t j, const Int& q) {
    row_addmul(a, i, j, q);
    if (track) row_addmul(u, i, j, q);
  }
  void colop(std::size_t i, std::size_t j, const Int& q) {
    col_addmul(a, i, j, q);
    if (track) col_addmul(v, i, j, q);
  }
  void rswap(std::size_t i, std::size_t j) {
    swap_rows(a, i, j);
    if (track) swap_rows(u, i, j);
  }
  void cswap(std::size_t i, std::size_t j) {
    swap_cols(a, i, j);
    if (track) swap_cols(v, i, j);
  }
};

}  // namespace

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

unsigned valuation(const Int& x, const Int& p) {
  if (sgn(x) == 0) throw InvalidInput("valuation of zero");
  Int rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Int det(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("det of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& m, bool track) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfWork w{m, track ? IntMatrix::identity(rows) : IntMatrix(),
            track ? IntMatrix::identity(cols) : IntMatrix(), track};
  IntMatrix& a = w.a;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: smallest |entry|, leftmost column first, then topmost row.
    std::size_t pi = rows, pj = cols;
    for (std::size_t j = t; j < cols && !(pi < rows && cmp_abs(a(pi, pj), 1) == 0); ++j) {
      for (std::size_t i = t; i < rows; ++i) {
        if (sgn(a(i, j)) == 0) continue;
        if (pi == rows || cmp_abs(a(i, j), a(pi, pj)) < 0) {
          pi = i;
          pj = j;
          if (cmp_abs(a(i, j), 1) == 0) break;
        }
      }
    }
    if (pi == rows) break;
    w.rswap(t, pi);
    w.cswap(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(a(i, t)) != 0) w.rowop(i, t, -fdiv_q(a(i, t), a(t, t)));
      std::size_t best = rows;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(a(i, t)) != 0 && (best == rows || cmp_abs(a(i, t), a(best, t)) < 0)) best = i;
      if (best != rows) {
        w.rswap(t, best);
        continue;
      }

      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(a(t, j)) != 0) w.colop(j, t, -fdiv_q(a(t, j), a(t, t)));
      best = cols;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(a(t, j)) != 0 && (best == cols || cmp_abs(a(t, j), a(t, best)) < 0)) best = j;
      if (best != cols) {
        w.cswap(t, best);
        continue;
      }

      if (cmp_abs(a(t, t), 1) == 0) break;
      std::size_t bad = rows;
      for (std::size_t j = t + 1; j < cols && bad == rows; ++j)
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.rowop(t, bad, Int(1));
    }
    if (sgn(a(t, t)) < 0) {
      negate_row(a, t);
      if (track) negate_row(w.u, t);
    }
  }
  return SmithForm{std::move(w.u), std::move(a), std::move(w.v), t};
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m, false);
  std::vector<Int> out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(s.D(i, i));
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < cols; ++i) {
    std::size_t first = k;
    while (first < cols && sgn(h(i, first)) == 0) ++first;
    if (first == cols) continue;
    swap_cols(h, k, first);
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (sgn(h(i, j)) == 0) continue;
      if (mpz_divisible_p(h(i, j).get_mpz_t(), h(i, k).get_mpz_t())) {
        Int q = h(i, j) / h(i, k);
        col_addmul(h, j, k, -q);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(i, k).get_mpz_t(),
                 h(i, j).get_mpz_t());
      const Int a = h(i, k) / g;
      const Int b = h(i, j) / g;
      // [col_k col_j] <- [s col_k + t col_j, b col_k - a col_j]
      col_combine(h, k, j, s, t, b, -a);
    }
    if (sgn(h(i, k)) < 0) negate_col(h, k);
    for (std::size_t j = 0; j < k; ++j) {
      Int q = fdiv_q(h(i, j), h(i, k));
      if (sgn(q) != 0) col_addmul(h, j, k, -q);
    }
    ++k;
  }
  return h;
}

IntMatrix column_span_basis(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m);
  std::size_t r = 0;
  while (r < h.cols()) {
    bool zero = true;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (sgn(h(i, r)) != 0) {
        zero = false;
        break;
      }
    if (zero) break;
    ++r;
  }
  return h.columns(0, r);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntMatrix::identity(n);
  SmithForm s = smith_normal_form(m, true);
  if (s.rank == n) return IntMatrix(n, 0);
  return column_span_basis(s.V.columns(s.rank, n - s.rank));
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, j)) == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, j)) == 0) continue;
      Int g = gcd(a(r, j), a(i, j));
      Int x = a(r, j) / g;
      Int y = a(i, j) / g;
      for (std::size_t c = j; c < a.cols(); ++c) a(i, c) = x * a(i, c) - y * a(r, c);
      Int content = 0;
      for (std::size_t c = j; c < a.cols(); ++c) content = gcd(content, a(i, c));
      if (content > 1)
        for (std::size_t c = j; c < a.cols(); ++c) mpz_divexact(a(i, c).get_mpz_t(), a(i, c).get_mpz_t(), content.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Int> b) {
  if (b.size() != m.rows()) throw InvalidInput("solve_integer: right-hand side length mismatch");
  SmithForm s = smith_normal_form(m, true);
  IntVector ub = s.U * b;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (sgn(ub[i]) != 0) {
      return std::nullopt;
    }
  }
  return s.V * std::span<const Int>(y);
}

ModuleGenerators kernel_basis_mod(const ResidueMatrix& m) {
  const Int& modulus = m.modulus();
  SmithForm s = smith_normal_form(m.lift(), true);
  ModuleGenerators out{modulus, {}, {}};
  for (std::size_t i = 0; i < m.cols(); ++i) {
    Int g = i < s.rank ? gcd(s.D(i, i), modulus) : modulus;
    if (g == 1) continue;
    IntVector v = s.V.column(i);
    Int scale = modulus / g;
    for (auto& x : v) x *= scale;
    reduce_mod(v, modulus);
    out.generators.push_back(std::move(v));
    out.orders.push_back(g);
  }
  return out;
}

std::optional<IntMatrix> inverse_mod(const IntMatrix& m, const Int& modulus) {
  if (!m.is_square()) throw InvalidInput("inverse_mod of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  reduce_mod(a, modulus);
  IntMatrix inv = IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && gcd(a(p, c), modulus) != 1) ++p;
    if (p == n) return std::nullopt;
    swap_rows(a, c, p);
    swap_rows(inv, c, p);
    Int pivinv;
    mpz_invert(pivinv.get_mpz_t(), a(c, c).get_mpz_t(), modulus.get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = mod_floor(a(c, j) * pivinv, modulus);
      inv(c, j) = mod_floor(inv(c, j) * pivinv, modulus);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Int f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = mod_floor(a(i, j) - f * a(c, j), modulus);
        inv(i, j) = mod_floor(inv(i, j) - f * inv(c, j), modulus);
      }
    }
  }
  return inv;
}

}  // namespace latkit
