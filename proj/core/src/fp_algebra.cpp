#include "latkit/fp_algebra.hpp"

#include <algorithm>

#include "latkit/error.hpp"

namespace latkit {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return (a * b) % m; }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce_signed(std::int64_t x, u64 p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, u64 m) {
  const std::size_t n = a.size();
  FpMatrix c(n, FpVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % m;
    }
  return c;
}

FpMatrix mat_pow(FpMatrix a, u64 e, u64 m) {
  const std::size_t n = a.size();
  FpMatrix r(n, FpVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1 % m;
  while (e) {
    if (e & 1) r = mat_mul(r, a, m);
    e >>= 1;
    if (e) a = mat_mul(a, a, m);
  }
  return r;
}

// Subtract multiples of the echelon rows so v has zeros in every pivot column.
void reduce_by(FpVector& v, const std::vector<FpVector>& echelon, u64 p) {
  for (const auto& row : echelon) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (v[c] == 0) continue;
    const u64 f = v[c];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * row[j]) % p;
  }
}

std::vector<std::size_t> pivots(const std::vector<FpVector>& echelon) {
  std::vector<std::size_t> out;
  for (const auto& row : echelon) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpAlgebra::FpAlgebra(std::uint64_t p, std::size_t dim, std::vector<std::uint64_t> sc, FpVector unit)
    : p_(p), dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)) {
  if (!is_prime(p_) || p_ >= (1ULL << 31)) throw InvalidInput("characteristic must be a prime below 2^31");
  if (dim_ == 0) throw InvalidInput("algebra dimension must be positive");
  if (sc_.size() != dim_ * dim_ * dim_) throw InvalidInput("structure constants have the wrong size");
  if (unit_.size() != dim_) throw InvalidInput("unit has the wrong length");
  for (auto& x : sc_) x %= p_;
  for (auto& x : unit_) x %= p_;

  for (std::size_t i = 0; i < dim_; ++i) {
    const FpVector ei = basis_vector(i);
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
      throw InvalidInput("unit is not a two-sided identity");
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      FpVector eij(dim_);
      for (std::size_t k = 0; k < dim_; ++k) eij[k] = coeff(i, j, k);
      for (std::size_t k = 0; k < dim_; ++k) {
        FpVector ejk(dim_);
        for (std::size_t m = 0; m < dim_; ++m) ejk[m] = coeff(j, k, m);
        if (multiply(eij, basis_vector(k)) != multiply(basis_vector(i), ejk))
          throw InvalidInput("structure constants are not associative");
      }
    }
}

FpVector FpAlgebra::basis_vector(std::size_t i) const {
  FpVector v(dim_, 0);
  v[i] = 1;
  return v;
}

FpVector FpAlgebra::multiply(const FpVector& x, const FpVector& y) const {
  FpVector z(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const u64 f = mulmod(x[i], y[j], p_);
      const u64* row = &sc_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k]) z[k] = (z[k] + f * row[k]) % p_;
    }
  }
  return z;
}

FpMatrix FpAlgebra::left_mult(const FpVector& x) const {
  FpMatrix m(dim_, FpVector(dim_, 0));
  for (std::size_t k = 0; k < dim_; ++k) {
    FpVector col = multiply(x, basis_vector(k));
    for (std::size_t r = 0; r < dim_; ++r) m[r][k] = col[r];
  }
  return m;
}

FpAlgebra FpAlgebra::matrix_algebra(std::uint64_t p, std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<u64> sc(dim * dim * dim, 0);
  FpVector unit(dim, 0);
  for (std::size_t a = 0; a < n; ++a) {
    unit[a * n + a] = 1;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) sc[((a * n + b) * dim + (b * n + d)) * dim + (a * n + d)] = 1;
  }
  return FpAlgebra(p, dim, std::move(sc), std::move(unit));
}

FpAlgebra FpAlgebra::polynomial_quotient(std::uint64_t p, const std::vector<std::int64_t>& low) {
  const std::size_t n = low.size();
  if (n == 0) throw InvalidInput("polynomial quotient needs a polynomial of positive degree");
  // powers[e] = x^e reduced, for e < 2n - 1
  std::vector<FpVector> powers;
  FpVector cur(n, 0);
  cur[0] = 1 % p;
  for (std::size_t e = 0; e + 1 < 2 * n; ++e) {
    powers.push_back(cur);
    FpVector next(n, 0);
    const u64 top = cur[n - 1];
    for (std::size_t k = n - 1; k > 0; --k) next[k] = cur[k - 1];
    for (std::size_t k = 0; k < n; ++k) next[k] = (next[k] + (p - reduce_signed(low[k], p)) % p * top) % p;
    cur = next;
  }
  std::vector<u64> sc(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = powers[i + j][k];
  FpVector unit(n, 0);
  unit[0] = 1;
  return FpAlgebra(p, n, std::move(sc), std::move(unit));
}

FpAlgebra FpAlgebra::cyclic_group_algebra(std::uint64_t p, std::size_t n) {
  std::vector<u64> sc(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sc[(i * n + j) * n + (i + j) % n] = 1;
  FpVector unit(n, 0);
  unit[0] = 1;
  return FpAlgebra(p, n, std::move(sc), std::move(unit));
}

FpAlgebra FpAlgebra::product(const FpAlgebra& a, const FpAlgebra& b) {
  if (a.p() != b.p()) throw InvalidInput("product of algebras over different fields");
  const std::size_t da = a.dim(), db = b.dim(), n = da + db;
  std::vector<u64> sc(n * n * n, 0);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) sc[(i * n + j) * n + k] = a.coeff(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        sc[((da + i) * n + (da + j)) * n + (da + k)] = b.coeff(i, j, k);
  FpVector unit(a.unit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return FpAlgebra(a.p(), n, std::move(sc), std::move(unit));
}

std::vector<FpVector> fp_row_reduce(std::vector<FpVector> rows, std::uint64_t p) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 inv = inverse(rows[r][c] % p, p);
    for (auto& x : rows[r]) x = mulmod(x % p, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      const u64 f = rows[i][c] % p;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] % p + (p - f) * rows[r][j]) % p;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<FpVector> fp_nullspace(const FpMatrix& m, std::size_t cols, std::uint64_t p) {
  std::vector<FpVector> echelon = fp_row_reduce(m, p);
  std::vector<std::size_t> piv = pivots(echelon);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<FpVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    FpVector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < echelon.size(); ++r) v[piv[r]] = (p - echelon[r][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FpVector> radical(const FpAlgebra& a) {
  const u64 p = a.p();
  const std::size_t n = a.dim();
  std::vector<u64> tau(n, 0);  // Tr(L_{e_k})
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) tau[k] = (tau[k] + a.coeff(k, m, m)) % p;

  if (p > n) {
    FpMatrix gram(n, FpVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        u64 s = 0;
        for (std::size_t k = 0; k < n; ++k) s = (s + a.coeff(i, j, k) * tau[k]) % p;
        gram[i][j] = s;
      }
    return fp_row_reduce(fp_nullspace(gram, n, p), p);
  }

  unsigned k = 0;
  for (u64 q = p; q <= n; q *= p) ++k;  // k = floor(log_p n)
  std::vector<FpVector> ideal;
  for (std::size_t i = 0; i < n; ++i) ideal.push_back(a.basis_vector(i));
  u64 pi = 1;  // p^i
  for (unsigned i = 0; i <= k; ++i, pi *= p) {
    const u64 mod = pi * p;
    FpMatrix conditions;
    for (std::size_t t = 0; t < n; ++t) {
      FpVector row(ideal.size(), 0);
      for (std::size_t s = 0; s < ideal.size(); ++s) {
        FpVector z = a.multiply(ideal[s], a.basis_vector(t));
        FpMatrix lz = mat_pow(a.left_mult(z), pi, mod);
        u64 tr = 0;
        for (std::size_t d = 0; d < n; ++d) tr = (tr + lz[d][d]) % mod;
        if (tr % pi != 0) throw Error("radical: p-power trace is not divisible as expected");
        row[s] = tr / pi;
      }
      conditions.push_back(std::move(row));
    }
    std::vector<FpVector> coeffs = fp_nullspace(conditions, ideal.size(), p);
    std::vector<FpVector> next;
    for (const auto& c : coeffs) {
      FpVector v(n, 0);
      for (std::size_t s = 0; s < ideal.size(); ++s)
        for (std::size_t d = 0; d < n; ++d) v[d] = (v[d] + c[s] * ideal[s][d]) % p;
      next.push_back(std::move(v));
    }
    ideal = fp_row_reduce(std::move(next), p);
    if (ideal.empty()) break;
  }
  return ideal;
}

bool is_semisimple(const FpAlgebra& a) { return radical(a).empty(); }

std::vector<FpVector> center(const FpAlgebra& a) {
  const u64 p = a.p();
  const std::size_t n = a.dim();
  FpMatrix rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      FpVector row(n, 0);
      for (std::size_t i = 0; i < n; ++i) row[i] = (a.coeff(i, j, l) + p - a.coeff(j, i, l)) % p;
      rows.push_back(std::move(row));
    }
  return fp_row_reduce(fp_nullspace(rows, n, p), p);
}

FpAlgebra quotient(const FpAlgebra& a, const std::vector<FpVector>& ideal) {
  const u64 p = a.p();
  const std::size_t n = a.dim();
  std::vector<FpVector> echelon = fp_row_reduce(ideal, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots(echelon)) is_pivot[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const std::size_t q = keep.size();
  if (q == 0) throw InvalidInput("quotient by the whole algebra");
  auto project = [&](FpVector v) {
    reduce_by(v, echelon, p);
    FpVector out(q);
    for (std::size_t i = 0; i < q; ++i) out[i] = v[keep[i]];
    return out;
  };
  std::vector<u64> sc(q * q * q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      FpVector prod = project(a.multiply(a.basis_vector(keep[i]), a.basis_vector(keep[j])));
      std::copy(prod.begin(), prod.end(), sc.begin() + static_cast<std::ptrdiff_t>((i * q + j) * q));
    }
  return FpAlgebra(p, q, std::move(sc), project(a.unit()));
}

}  // namespace latkit
