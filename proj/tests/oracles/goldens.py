#!/usr/bin/env python3
"""Independent oracles for the golden values frozen into the C++ tests.

Everything here is written without reference to the C++ implementation:
Clifford products use the closed-form sign rule for orthogonal bases,
torsion invariants are counted by brute force, and constants are
evaluated with mpmath at high precision. Run it to regenerate the
numbers quoted in tests/*.cpp.
"""
import itertools
import random

import mpmath
import sympy
from sympy.matrices.normalforms import smith_normal_form


def q_of_g(g):
    mpmath.mp.dps = 80
    val = 2 * g * mpmath.e ** (mpmath.mpf(2 * g) / mpmath.e)
    return int(mpmath.floor(val)), val


def gl_order(n, q):
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


# --- Clifford algebra of a diagonal Gram: e_S e_T = sign * prod(B_ii, i in S&T) e_{S^T}
def clifford_diag_mul(diag, s, t):
    r = len(diag)
    sign = 1
    # moving each generator of T leftwards past the generators of S with larger index
    for j in range(r):
        if t >> j & 1:
            larger = bin(s >> (j + 1)).count("1")
            if larger % 2:
                sign = -sign
    coeff = sign
    for i in range(r):
        if (s & t) >> i & 1:
            coeff *= diag[i]
    return coeff, s ^ t


def clifford_left_matrix(diag, elem):
    r = len(diag)
    dim = 1 << r
    m = [[0] * dim for _ in range(dim)]
    for s, c in elem.items():
        for t in range(dim):
            k, u = clifford_diag_mul(diag, s, t)
            m[u][t] += c * k
    return m


def clifford_mul(diag, x, y):
    out = {}
    for s, a in x.items():
        for t, b in y.items():
            k, u = clifford_diag_mul(diag, s, t)
            out[u] = out.get(u, 0) + a * b * k
    return {k: v for k, v in out.items() if v}


def reversal_sign(mask):
    k = bin(mask).count("1")
    return -1 if (k * (k - 1) // 2) % 2 else 1


def intrinsic_trace(diag, elem):
    m = clifford_left_matrix(diag, elem)
    return sum(m[i][i] for i in range(len(m)))


def symplectic_gram(diag):
    dim = 1 << len(diag)
    f1f2 = clifford_mul(diag, {1: 1}, {2: 1})
    gram = [[0] * dim for _ in range(dim)]
    for s in range(dim):
        vstar = {s: reversal_sign(s)}
        left = clifford_mul(diag, f1f2, vstar)
        for t in range(dim):
            gram[s][t] = intrinsic_trace(diag, clifford_mul(diag, left, {t: 1}))
    return gram


def complement_invariants(diag):
    r = len(diag)
    dim = 1 << r
    cols = []
    for i in range(r):
        m = clifford_left_matrix(diag, {1 << i: 1})
        cols.append([m[a][b] for a in range(dim) for b in range(dim)])
    phi = sympy.Matrix(cols).T  # dim^2 x r
    n = dim * dim
    # ambient form Tr(xy): <E_ab, E_cd> = [b==c][a==d]
    perm = sympy.zeros(n, n)
    for a in range(dim):
        for b in range(dim):
            perm[a * dim + b, b * dim + a] = 1
    rows = (phi.T * perm)
    kernel = rows.nullspace()
    # clear denominators and saturate via sympy's integer nullspace
    basis = []
    for v in kernel:
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
        basis.append([int(x * den) for x in v])
    big = sympy.Matrix.hstack(phi, sympy.Matrix(basis).T)
    snf = smith_normal_form(big, domain=sympy.ZZ)
    return [abs(int(snf[i, i])) for i in range(n) if abs(int(snf[i, i])) != 1]


# --- torsion brute force -------------------------------------------------------
def mat_mul(a, b, p):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def mat_t(a):
    return [list(r) for r in zip(*a)]


def mat_inv(a, p):
    m = sympy.Matrix(a)
    return [[int(x) % p for x in row] for row in m.inv_mod(p).tolist()]


def standard_j(g, p):
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for i in range(g):
        j[i][g + i] = 1
        j[g + i][i] = p - 1
    return j


def char_poly_irreducible(a, p):
    x = sympy.symbols("x")
    poly = sympy.Matrix(a).charpoly(x).as_expr()
    return sympy.Poly(poly, x, modulus=p).is_irreducible


def find_irreducible_similitude(g, p, mult, seed=7):
    rng = random.Random(seed)
    j = standard_j(g, p)
    n = 2 * g
    while True:
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        if sympy.Matrix(a).det() % p == 0:
            continue
        lhs = mat_mul(mat_mul(mat_t(a), j, p), a, p)
        if lhs != [[(mult * x) % p for x in row] for row in j]:
            continue
        if char_poly_irreducible(a, p):
            return a


def alternating_forms(n, p):
    idx = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for vals in itertools.product(range(p), repeat=len(idx)):
        m = [[0] * n for _ in range(n)]
        for (i, j), v in zip(idx, vals):
            m[i][j] = v
            m[j][i] = (-v) % p
        yield m


def brauer_invariant_count(gamma, mult, g, p):
    """Size exponent of (Alt / span J)^Gamma at level 1, by enumeration."""
    n = 2 * g
    j = standard_j(g, p)
    span_j = [tuple(tuple((c * x) % p for x in row) for row in j) for c in range(p)]
    span_set = set(span_j)
    ginv = mat_inv(gamma, p)
    ginv_t = mat_t(ginv)
    fixed = 0
    for a in alternating_forms(n, p):
        act = mat_mul(mat_mul(ginv_t, a, p), ginv, p)
        act = [[(mult * x) % p for x in row] for row in act]
        diff = tuple(tuple((act[r][c] - a[r][c]) % p for c in range(n)) for r in range(n))
        if diff in span_set:
            fixed += 1
    size = fixed // p
    e = 0
    while size > 1:
        assert size % p == 0
        size //= p
        e += 1
    return e


def third_summand_count(gamma, p):
    n = len(gamma)
    ginv = mat_inv(gamma, p)
    scalars = set(tuple(tuple((c if r == s else 0) for s in range(n)) for r in range(n)) for c in range(p))
    fixed = 0
    for vals in itertools.product(range(p), repeat=n * n):
        x = [list(vals[r * n:(r + 1) * n]) for r in range(n)]
        conj = mat_mul(mat_mul(gamma, x, p), ginv, p)
        diff = tuple(tuple((conj[r][c] - x[r][c]) % p for c in range(n)) for r in range(n))
        if diff in scalars:
            fixed += 1
    size = fixed // p
    e = 0
    while size > 1:
        size //= p
        e += 1
    return e


def main():
    for g in range(1, 13):
        q, val = q_of_g(g)
        print(f"Q({g}) = {q}    ({mpmath.nstr(val, 30)})")
    for n in (2, 4, 6):
        print(f"|GL({n},F3)| = {gl_order(n, 3)}   |GL({n},Z/4)| = {gl_order(n, 2) * 2 ** (n * n)}")

    for diag in ([1, 1], [2, 2], [1, 2], [1, 3]):
        gram = symplectic_gram(diag)
        det = sympy.Matrix(gram).det()
        print(f"symplectic <{diag}>: det={det}")
        print("   gram=", gram)

    for diag in ([1], [1, 1], [1, 2], [2]):
        print(f"complement invariants <{diag}>: {complement_invariants(diag)}")

    gamma = find_irreducible_similitude(2, 3, -1)
    print("irreducible similitude (g=2, l=3, mult -1):", gamma)
    print("  brauer invariant count:", brauer_invariant_count(gamma, -1, 2, 3))
    print("  trivial gamma count:", brauer_invariant_count([[int(i == j) for j in range(4)] for i in range(4)], 1, 2, 3))

    # non-split Cartan mod 3: companion matrix of x^2 - x - 1 (primitive over F3)
    cartan = [[0, 1], [1, 1]]
    assert char_poly_irreducible(cartan, 3)
    print("third summand non-split Cartan mod 3:", third_summand_count(cartan, 3))
    print("third summand trivial gamma mod 3:", third_summand_count([[1, 0], [0, 1]], 3))


if __name__ == "__main__":
    main()
