#include <doctest.h>

#include "latkit/error.hpp"
#include "latkit/fp_algebra.hpp"

using namespace latkit;

namespace {

FpAlgebra upper_triangular(std::uint64_t p) {
  // E11, E12, E22
  std::vector<std::uint64_t> sc(27, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { sc[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  return FpAlgebra(p, 3, sc, {1, 0, 1});
}

bool is_zero(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

bool in_span(const std::vector<FpVector>& rref, const FpVector& v, std::uint64_t p) {
  auto rows = rref;
  rows.push_back(v);
  return fp_row_reduce(rows, p).size() == rref.size();
}

std::vector<FpVector> span_products(const FpAlgebra& a, const std::vector<FpVector>& x,
                                    const std::vector<FpVector>& y) {
  std::vector<FpVector> out;
  for (const auto& u : x)
    for (const auto& v : y) out.push_back(a.multiply(u, v));
  return fp_row_reduce(out, a.p());
}

bool is_two_sided_ideal(const FpAlgebra& a, const std::vector<FpVector>& basis) {
  for (const auto& b : basis)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const FpVector e = a.basis_vector(j);
      if (!in_span(basis, a.multiply(b, e), a.p()) || !in_span(basis, a.multiply(e, b), a.p())) return false;
    }
  return true;
}

bool is_nilpotent_ideal(const FpAlgebra& a, const std::vector<FpVector>& basis) {
  std::vector<FpVector> power = basis;
  for (std::size_t k = 0; k <= a.dim() && !power.empty(); ++k) power = span_products(a, power, basis);
  return power.empty();
}

// Every subspace of F_p^dim, each given once by its RREF basis.
std::vector<std::vector<FpVector>> all_subspaces(std::size_t dim, std::uint64_t p) {
  std::vector<std::vector<FpVector>> out;
  for (std::uint32_t pivots = 0; pivots < (1u << dim); ++pivots) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < dim; ++i)
      if (pivots >> i & 1) piv.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t c = piv[r] + 1; c < dim; ++c)
        if (!(pivots >> c & 1)) free.emplace_back(r, c);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) combos *= p;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<FpVector> rows(piv.size(), FpVector(dim, 0));
      for (std::size_t r = 0; r < piv.size(); ++r) rows[r][piv[r]] = 1;
      std::size_t c = code;
      for (const auto& [r, col] : free) {
        rows[r][col] = c % p;
        c /= p;
      }
      out.push_back(rows);
    }
  }
  return out;
}

std::vector<FpVector> brute_force_radical(const FpAlgebra& a) {
  std::vector<FpVector> best;
  for (const auto& s : all_subspaces(a.dim(), a.p()))
    if (s.size() >= best.size() && is_two_sided_ideal(a, s) && is_nilpotent_ideal(a, s)) best = s;
  return fp_row_reduce(best, a.p());
}

std::vector<FpAlgebra> small_algebras(std::uint64_t p) {
  std::vector<FpAlgebra> out;
  for (std::size_t deg = 1; deg <= 4; ++deg) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> coeffs;
      std::size_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        coeffs.push_back(static_cast<std::int64_t>(c % p));
        c /= p;
      }
      out.push_back(FpAlgebra::polynomial_quotient(p, coeffs));
    }
  }
  out.push_back(FpAlgebra::matrix_algebra(p, 2));
  out.push_back(upper_triangular(p));
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(FpAlgebra::cyclic_group_algebra(p, n));
  const FpAlgebra fp = FpAlgebra::polynomial_quotient(p, {0});
  const FpAlgebra dual = FpAlgebra::polynomial_quotient(p, {0, 0});
  out.push_back(FpAlgebra::product(fp, dual));
  out.push_back(FpAlgebra::product(dual, dual));
  out.push_back(FpAlgebra::product(fp, upper_triangular(p)));
  return out;
}

}  // namespace

TEST_CASE("radical examples") {
  CHECK(radical(FpAlgebra::matrix_algebra(5, 2)).empty());
  const auto r = radical(FpAlgebra::polynomial_quotient(3, {0, 0}));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == FpVector{0, 1});
  const auto c2 = radical(FpAlgebra::cyclic_group_algebra(2, 2));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == FpVector{1, 1});
  CHECK(radical(FpAlgebra::cyclic_group_algebra(3, 3)).size() == 2);
  CHECK(radical(upper_triangular(7)).size() == 1);
}

TEST_CASE("semisimplicity examples") {
  const FpAlgebra f5 = FpAlgebra::polynomial_quotient(5, {0});
  CHECK(is_semisimple(FpAlgebra::product(f5, f5)));
  CHECK_FALSE(is_semisimple(FpAlgebra::cyclic_group_algebra(2, 2)));
  CHECK(is_semisimple(FpAlgebra::polynomial_quotient(7, {-1, 0})));
  CHECK(is_semisimple(FpAlgebra::cyclic_group_algebra(5, 4)));
  CHECK_FALSE(is_semisimple(FpAlgebra::cyclic_group_algebra(3, 6)));
}

TEST_CASE("center examples") {
  CHECK(center(FpAlgebra::matrix_algebra(3, 2)).size() == 1);
  const FpAlgebra f3 = FpAlgebra::polynomial_quotient(3, {0});
  CHECK(center(FpAlgebra::product(f3, f3)).size() == 2);
  CHECK(center(FpAlgebra::cyclic_group_algebra(2, 2)).size() == 2);
  CHECK(center(upper_triangular(5)).size() == 1);
}

TEST_CASE("constructor rejects bad structure constants") {
  std::vector<std::uint64_t> sc(8, 0);
  // e0 e0 = e1, everything else zero: no unit
  sc[1] = 1;
  CHECK_THROWS_AS(FpAlgebra(2, 2, sc, {1, 0}), InvalidInput);
  CHECK_THROWS_AS(FpAlgebra::matrix_algebra(4, 2), InvalidInput);
}

TEST_CASE("radical matches an exhaustive search over all subspaces, dim <= 4 over F2 and F3") {
  for (std::uint64_t p : {2u, 3u}) {
    int n = 0;
    for (const FpAlgebra& a : small_algebras(p)) {
      CAPTURE(p);
      CAPTURE(n++);
      CHECK(radical(a) == brute_force_radical(a));
    }
  }
}

TEST_CASE("radical is a nilpotent two-sided ideal and the quotient is semisimple") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (const FpAlgebra& a : small_algebras(p)) {
      const auto rad = radical(a);
      CHECK(is_two_sided_ideal(a, rad));
      for (const auto& x : rad) {
        FpVector power = x;
        for (std::size_t k = 0; k < a.dim(); ++k) power = a.multiply(power, x);
        CHECK(is_zero(power));
      }
      if (!rad.empty()) CHECK(is_semisimple(quotient(a, rad)));
    }
  }
}

TEST_CASE("group algebras: F_p[C_n] semisimple iff p does not divide n") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u})
    for (std::size_t n = 1; n <= 12; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(is_semisimple(FpAlgebra::cyclic_group_algebra(p, n)) == (n % p != 0));
    }
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
