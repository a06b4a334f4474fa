import numpy as np
import pytest

from dihedralkit.gf2 import (
    BitMatrix,
    Poly2,
    charpoly,
    kronecker_product,
    min_poly,
    p_deriv,
    p_divmod,
    p_factor,
    p_gcd,
    p_mul,
    p_parse,
    p_str,
    rank_kernel,
    solve_linear,
)

PAPER_ALPHA = BitMatrix.from_strings(["100000", "110000", "001000", "001100", "000011", "000001"])
PAPER_BETA = BitMatrix.from_strings(["100000", "011000", "001000", "000100", "000110", "000001"])


def test_rank_kernel_identity():
    rank, kernel = rank_kernel(BitMatrix.identity(3))
    assert rank == 3
    assert kernel.rows == 0


def test_rank_kernel_zero():
    rank, kernel = rank_kernel(BitMatrix.zeros(2, 5))
    assert rank == 0
    assert kernel.rows == 5


def test_paper_alpha_minus_identity_rank():
    # hand row-reduction: alpha + I has rows e1, e3, e6 and beta + I has e3, e4
    assert (PAPER_ALPHA ^ BitMatrix.identity(6)).rank() == 3
    assert (PAPER_BETA ^ BitMatrix.identity(6)).rank() == 2


def test_kernel_vectors_annihilate():
    rng = np.random.default_rng(11)
    for _ in range(30):
        m = BitMatrix.random(5, 7, rng)
        rank, kernel = rank_kernel(m)
        assert rank + kernel.rows == 7
        if kernel.rows:
            assert (m @ kernel.transpose()).is_zero()


def test_rank_nullity_exhaustive_4x4():
    # all 2^16 matrices over GF(2)
    for code in range(1 << 16):
        rows = [(code >> (4 * i)) & 15 for i in range(4)]
        m = BitMatrix.from_rows([[(r >> j) & 1 for j in range(4)] for r in rows])
        rank, kernel = rank_kernel(m)
        assert rank + kernel.rows == 4


def test_solve_linear_no_constraint():
    ident = BitMatrix.identity(2)
    basis = solve_linear([(ident, ident)])
    assert len(basis) == 4


def test_solve_linear_jordan_block_oracle():
    # direct enumeration of all 16 candidate H for A = B = the unipotent block
    j = BitMatrix.from_rows([[1, 1], [0, 1]])
    expected = []
    for code in range(16):
        h = BitMatrix.from_rows([[(code >> 0) & 1, (code >> 1) & 1], [(code >> 2) & 1, (code >> 3) & 1]])
        if (j @ h) == (h @ j):
            expected.append(h.key())
    basis = solve_linear([(j, j)])
    assert len(basis) == 2
    # every span element commutes and the span covers the enumerated set
    span = set()
    for code in range(4):
        acc = BitMatrix.zeros(2, 2)
        if code & 1:
            acc = acc ^ basis[0]
        if code & 2:
            acc = acc ^ basis[1]
        span.add(acc.key())
    assert span == set(expected)


def test_solve_linear_solutions_intertwine():
    rng = np.random.default_rng(3)
    a = BitMatrix.random(4, 4, rng)
    b = BitMatrix.random(3, 3, rng)
    for h in solve_linear([(a, b)]):
        assert (a @ h) == (h @ b)


def test_min_poly_identity():
    assert str(min_poly(BitMatrix.identity(3))) == "1+t"


def test_min_poly_jordan_block():
    j = BitMatrix.from_rows([[1, 1], [0, 1]])
    assert min_poly(j).value == p_parse("1+t^2")  # (t+1)^2 over GF(2)


def test_min_poly_paper_alpha():
    assert min_poly(PAPER_ALPHA).value == p_parse("1+t^2")
    assert (PAPER_ALPHA @ PAPER_ALPHA).is_identity()


def test_min_poly_annihilates_random():
    rng = np.random.default_rng(5)
    for _ in range(25):
        m = BitMatrix.random(6, 6, rng)
        f = min_poly(m)
        assert f.evaluate_matrix(m).is_zero()
        # minimality: no proper divisor annihilates
        for p, e in p_factor(f.value).items():
            reduced = p_divmod(f.value, p)[0]
            assert not Poly2(reduced).evaluate_matrix(m).is_zero()


def test_charpoly_degree_and_annihilation():
    rng = np.random.default_rng(9)
    for _ in range(20):
        m = BitMatrix.random(5, 5, rng)
        c = charpoly(m)
        assert c.bit_length() - 1 == 5
        assert Poly2(c).evaluate_matrix(m).is_zero()
        assert p_divmod(c, min_poly(m).value)[1] == 0


def test_kron_identities():
    assert kronecker_product(BitMatrix.identity(2), BitMatrix.identity(3)) == BitMatrix.identity(6)
    m = BitMatrix.from_rows([[1, 1], [0, 1]])
    assert kronecker_product(m, BitMatrix.identity(1)) == m


def test_kron_row_against_naive_loop():
    prod = kronecker_product(PAPER_ALPHA, PAPER_ALPHA)
    a = PAPER_ALPHA.dense()
    naive_row = np.zeros(36, dtype=np.uint8)
    i, k = 1, 1  # row 8 of the product is (i=1, k=1) in block coordinates
    for j in range(6):
        for l in range(6):
            naive_row[6 * j + l] = a[i, j] & a[k, l]
    assert np.array_equal(prod.dense()[7], naive_row)


def test_kron_multiplicative():
    rng = np.random.default_rng(4)
    a, c = BitMatrix.random(3, 3, rng), BitMatrix.random(3, 3, rng)
    b, d = BitMatrix.random(2, 2, rng), BitMatrix.random(2, 2, rng)
    lhs = kronecker_product(a, b) @ kronecker_product(c, d)
    rhs = kronecker_product(a @ c, b @ d)
    assert lhs == rhs


def test_matrix_json_roundtrip():
    m = PAPER_BETA
    assert BitMatrix.from_json(m.to_json()) == m
    assert m.to_json()["data"][1] == "011000"


def test_poly_arithmetic():
    assert p_str(p_mul(p_parse("1+t"), p_parse("1+t"))) == "1+t^2"
    q, r = p_divmod(p_parse("1+t^3"), p_parse("1+t"))
    assert r == 0 and p_mul(q, p_parse("1+t")) == p_parse("1+t^3")
    assert p_gcd(p_parse("t^2+t"), p_parse("t")) == p_parse("t")
    assert p_deriv(p_parse("1+t+t^2+t^3")) == p_parse("1+t^2")


def _is_irreducible_brute(p: int) -> bool:
    deg = p.bit_length() - 1
    if deg < 1:
        return False
    for cand in range(2, 1 << (deg // 2 + 1)):
        if cand.bit_length() - 1 < 1:
            continue
        if p_divmod(p, cand)[1] == 0:
            return False
    return True


def test_poly_factor_exhaustive_small():
    for f in range(2, 1 << 9):
        factors = p_factor(f)
        rebuilt = 1
        for p, e in factors.items():
            assert _is_irreducible_brute(p), f"{p_str(p)} claimed irreducible"
            for _ in range(e):
                rebuilt = p_mul(rebuilt, p)
        assert rebuilt == f


def test_solve_consistency():
    rng = np.random.default_rng(17)
    a = BitMatrix.random(4, 3, rng)
    x = BitMatrix.random(3, 2, rng)
    b = a @ x
    x2 = a.solve(b)
    assert x2 is not None
    assert (a @ x2) == b
