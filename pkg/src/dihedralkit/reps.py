"""Concrete modules for the dihedral group of order 4q over GF(2).

Modules are right modules: elements are row vectors and a group element
g acts as v -> v @ A_g, so A_(gh) = A_g @ A_h.  Row i of a generator
matrix is the image of the i-th basis vector, matching the usual way
string-module matrices are written down.

Group elements are kept in the normal form x^a (xy)^k with 0 <= a <= 1
and 0 <= k < 2q, ordered a-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from dihedralkit.errors import InvalidBand, InvalidWord, NotInvertible, QMismatch, UnsupportedSubgroup
from dihedralkit.gf2 import BitMatrix, Echelon, direct_sum, hstack, vstack
from dihedralkit.words import Word, check_q, forbidden_runs, require_valid, validate_word


class SubgroupId(Enum):
    GEN_X = "genx"
    GEN_Y = "geny"
    KLEIN_X = "kleinx"
    KLEIN_Y = "kleiny"


@dataclass(frozen=True)
class Rep:
    """Module given by the two involutive generator matrices."""

    q: int
    alpha: BitMatrix
    beta: BitMatrix

    def __post_init__(self):
        check_q(self.q)
        n = self.alpha.rows
        if self.alpha.cols != n or self.beta.rows != n or self.beta.cols != n:
            raise ValueError("generator matrices must be square of equal size")
        ident = BitMatrix.identity(n)
        if (self.alpha @ self.alpha) != ident or (self.beta @ self.beta) != ident:
            raise ValueError("generators must be involutions")
        if (self.alpha @ self.beta).pow(2 * self.q) != ident:
            raise ValueError(f"(alpha beta)^{2 * self.q} != identity")

    @property
    def dim(self) -> int:
        return self.alpha.rows

    def key(self) -> bytes:
        return b"%d|" % self.q + self.alpha.key() + self.beta.key()

    def to_json(self) -> dict:
        return {"q": self.q, "x": self.alpha.to_json(), "y": self.beta.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "Rep":
        return cls(int(obj["q"]), BitMatrix.from_json(obj["x"]), BitMatrix.from_json(obj["y"]))

    def __repr__(self):
        return f"Rep(q={self.q}, dim={self.dim})"


@dataclass(frozen=True)
class KleinRep:
    """Module for a Klein four group: two commuting involutions."""

    g1: BitMatrix
    g2: BitMatrix

    def __post_init__(self):
        n = self.g1.rows
        if self.g1.cols != n or self.g2.rows != n or self.g2.cols != n:
            raise ValueError("generator matrices must be square of equal size")
        ident = BitMatrix.identity(n)
        if (self.g1 @ self.g1) != ident or (self.g2 @ self.g2) != ident:
            raise ValueError("generators must be involutions")
        if (self.g1 @ self.g2) != (self.g2 @ self.g1):
            raise ValueError("generators must commute")

    @property
    def dim(self) -> int:
        return self.g1.rows

    def key(self) -> bytes:
        return self.g1.key() + self.g2.key()

    def to_json(self) -> dict:
        return {"g1": self.g1.to_json(), "g2": self.g2.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "KleinRep":
        return cls(BitMatrix.from_json(obj["g1"]), BitMatrix.from_json(obj["g2"]))

    def __repr__(self):
        return f"KleinRep(dim={self.dim})"


# -- group bookkeeping -------------------------------------------------------


def group_elements(q: int) -> list[tuple[int, int]]:
    """All 4q elements x^a (xy)^k in canonical order."""
    return [(a, k) for a in (0, 1) for k in range(2 * q)]


def element_index(a: int, k: int, q: int) -> int:
    return a * 2 * q + (k % (2 * q))


def mult_by_x(a: int, k: int, q: int) -> tuple[int, int]:
    return 1 - a, (-k) % (2 * q)


def mult_by_y(a: int, k: int, q: int) -> tuple[int, int]:
    return 1 - a, (1 - k) % (2 * q)


def element_inverse(a: int, k: int, q: int) -> tuple[int, int]:
    return (a, (-k) % (2 * q)) if a == 0 else (a, k)


def element_matrices(m: Rep) -> list[BitMatrix]:
    """Matrices of all 4q group elements in canonical order."""
    q = m.q
    xy = m.alpha @ m.beta
    mats = [BitMatrix.identity(m.dim)]
    for _ in range(2 * q - 1):
        mats.append(mats[-1] @ xy)
    mats += [m.alpha @ g for g in mats[: 2 * q]]
    return mats


# -- constructions ------------------------------------------------------------


def string_module(w: Word, q: int) -> Rep:
    """String module M(w); dimension len(w) + 1.

    The i-th letter links basis vectors v_i and v_{i+1}: a direct letter
    sends v_{i+1} to v_i + v_{i+1}, an inverse letter sends v_i to
    v_i + v_{i+1}, acting through the generator named by the letter.
    """
    if not validate_word(w, q):
        raise InvalidWord(f"{w} is not valid for q={q}")
    n = len(w) + 1
    a = np.eye(n, dtype=np.uint8)
    b = np.eye(n, dtype=np.uint8)
    for j, letter in enumerate(w):
        target = a if letter.symbol == "a" else b
        if letter.inverse:
            target[j, j + 1] ^= 1
        else:
            target[j + 1, j] ^= 1
    return Rep(q, BitMatrix.from_dense(a), BitMatrix.from_dense(b))


def regular_module(q: int) -> Rep:
    """The group algebra as a module over itself (right regular action)."""
    check_q(q)
    n = 4 * q
    a = np.zeros((n, n), dtype=np.uint8)
    b = np.zeros((n, n), dtype=np.uint8)
    for ai, k in group_elements(q):
        src = element_index(ai, k, q)
        a[src, element_index(*mult_by_x(ai, k, q), q)] = 1
        b[src, element_index(*mult_by_y(ai, k, q), q)] = 1
    return Rep(q, BitMatrix.from_dense(a), BitMatrix.from_dense(b))


def band_module(cyclic_w: Word, phi: BitMatrix, q: int) -> Rep:
    """Band module for a cyclic word and an invertible twist phi."""
    check_q(q)
    n = len(cyclic_w)
    letters = cyclic_w.letters
    if n == 0 or n % 2:
        raise InvalidBand("cyclic word must have positive even length")
    if letters[-1].symbol == letters[0].symbol:
        raise InvalidBand("cyclic word must alternate around the wrap")
    if all(c.inverse for c in letters) or all(not c.inverse for c in letters):
        raise InvalidBand("cyclic word needs both a direct and an inverse letter")
    for d in range(1, n):
        if n % d == 0 and letters == letters[d:] + letters[:d]:
            raise InvalidBand("cyclic word must not be a proper power")
    reps = letters * (2 * q // n + 2)
    runs = set(forbidden_runs(q))
    for i in range(n):
        if tuple(reps[i : i + 2 * q]) in runs:
            raise InvalidBand("a cyclic shift contains a forbidden run")
    d = phi.rows
    if phi.cols != d or phi.rank() != d:
        raise NotInvertible("twist matrix must be square and invertible")
    dim = n * d
    a = np.eye(dim, dtype=np.uint8)
    b = np.eye(dim, dtype=np.uint8)
    ident = np.eye(d, dtype=np.uint8)
    phid = phi.dense()
    for j, letter in enumerate(letters):
        target = a if letter.symbol == "a" else b
        src, dst = j, (j + 1) % n
        block = phid if j == n - 1 else ident
        if letter.inverse:
            target[src * d : (src + 1) * d, dst * d : (dst + 1) * d] ^= block
        else:
            target[dst * d : (dst + 1) * d, src * d : (src + 1) * d] ^= block
    return Rep(q, BitMatrix.from_dense(a), BitMatrix.from_dense(b))


def trivial_module(q: int) -> Rep:
    one = BitMatrix.identity(1)
    return Rep(q, one, one)


# -- functorial operations ----------------------------------------------------


def central_involution(m: Rep) -> BitMatrix:
    """Action of z = (xy)^q."""
    return (m.alpha @ m.beta).pow(m.q)


def restrict(m: Rep, s: SubgroupId) -> BitMatrix | KleinRep:
    """Single generator matrix for GenX/GenY, KleinRep for the V4 subgroups."""
    if s is SubgroupId.GEN_X:
        return m.alpha
    if s is SubgroupId.GEN_Y:
        return m.beta
    zeta = central_involution(m)
    if s is SubgroupId.KLEIN_X:
        return KleinRep(m.alpha, zeta)
    if s is SubgroupId.KLEIN_Y:
        return KleinRep(m.beta, zeta)
    raise UnsupportedSubgroup(str(s))


def c2_profile(g: BitMatrix) -> tuple[int, int]:
    """(trivial multiplicity, free multiplicity) of one involution."""
    r = (g ^ BitMatrix.identity(g.rows)).rank()
    return g.rows - 2 * r, r


def induce(m: KleinRep, s: SubgroupId, q: int) -> Rep:
    """Induced module from one of the Klein four subgroups.

    Coset representatives are (xy)^i for 0 <= i < q; the action permutes
    the q blocks and twists each by the subgroup element that falls out.
    """
    check_q(q)
    if s not in (SubgroupId.KLEIN_X, SubgroupId.KLEIN_Y):
        raise UnsupportedSubgroup(f"induction implemented only from Klein subgroups, got {s}")
    d = m.dim
    dim = q * d
    sub_mats = {
        (0, 0): BitMatrix.identity(d),
        (1, 0): m.g1,
        (0, 1): m.g2,
        (1, 1): m.g1 @ m.g2,
    }

    def decompose(a: int, k: int) -> tuple[tuple[int, int], int]:
        # write x^a (xy)^k = eta * (xy)^i with eta in the subgroup
        if s is SubgroupId.KLEIN_Y:
            if a == 0:
                return (0, (k // q) % 2), k % q
            j = (k - 1) % (2 * q)
            return (1, (j // q) % 2), j % q
        if a == 0:
            return (0, (k // q) % 2), k % q
        return (1, (k // q) % 2), k % q

    def build(step) -> BitMatrix:
        out = np.zeros((dim, dim), dtype=np.uint8)
        for i in range(q):
            eta, i2 = decompose(*step(0, i, q))
            out[i * d : (i + 1) * d, i2 * d : (i2 + 1) * d] = sub_mats[eta].dense()
        return BitMatrix.from_dense(out)

    return Rep(q, build(mult_by_x), build(mult_by_y))


def tensor(m1: Rep, m2: Rep) -> Rep:
    if m1.q != m2.q:
        raise QMismatch(f"q={m1.q} vs q={m2.q}")
    from dihedralkit.gf2 import kronecker_product

    return Rep(m1.q, kronecker_product(m1.alpha, m2.alpha), kronecker_product(m1.beta, m2.beta))


def dual(m: Rep) -> Rep:
    return Rep(m.q, m.alpha.transpose(), m.beta.transpose())


def dual_klein(m: KleinRep) -> KleinRep:
    return KleinRep(m.g1.transpose(), m.g2.transpose())


def direct_sum_reps(reps: list[Rep]) -> Rep:
    q = reps[0].q
    if any(r.q != q for r in reps):
        raise QMismatch("direct sum of modules over different q")
    return Rep(q, direct_sum([r.alpha for r in reps]), direct_sum([r.beta for r in reps]))


def radical_socle(m: Rep) -> tuple[BitMatrix, BitMatrix]:
    """Row bases of the radical and the socle."""
    ident = BitMatrix.identity(m.dim)
    ua, ub = m.alpha ^ ident, m.beta ^ ident
    radical = vstack([ua, ub]).row_space()
    socle = hstack([ua, ub]).left_kernel().row_space()
    return radical, socle


def top_lift(m: Rep) -> BitMatrix:
    """Standard basis rows completing the radical to the whole module."""
    radical, _ = radical_socle(m)
    ech = Echelon(m.dim)
    for i in range(radical.rows):
        ech.insert(radical.words[i].copy())
    rows = []
    ident = BitMatrix.identity(m.dim)
    for i in range(m.dim):
        if ech.insert(ident.words[i].copy()) is not None:
            rows.append(i)
    return ident.take_rows(rows)


def coordinates_in(basis: BitMatrix, vectors: BitMatrix) -> BitMatrix:
    """X with X @ basis = vectors; basis rows must be independent."""
    x = basis.transpose().solve(vectors.transpose())
    if x is None:
        raise ArithmeticError("vectors do not lie in the span of the basis")
    return x.transpose()


def subrep(m: Rep, rows: BitMatrix) -> Rep:
    """Module structure on an invariant row space."""
    new_alpha = coordinates_in(rows, rows @ m.alpha)
    new_beta = coordinates_in(rows, rows @ m.beta)
    return Rep(m.q, new_alpha, new_beta)


def sum_of_group_elements(m: Rep) -> BitMatrix:
    mats = element_matrices(m)
    acc = mats[0]
    for g in mats[1:]:
        acc = acc ^ g
    return acc


def split_projective(m: Rep) -> tuple[int, Rep]:
    """Free rank and a complement with no free summand.

    The free part is located by the rank of the sum of all group
    elements; the complement is the kernel of an explicit module-map
    projection onto the free part (free modules are injective here).
    """
    sigma = sum_of_group_elements(m)
    f = sigma.rank()
    if f == 0:
        return 0, m
    n, q = m.dim, m.q
    ech = Echelon(n)
    picked = []
    for i in range(n):
        if ech.insert(sigma.words[i].copy()) is not None:
            picked.append(i)
        if len(picked) == f:
            break
    ident = BitMatrix.identity(n)
    gens = ident.take_rows(picked)
    mats = element_matrices(m)
    order = 4 * q
    big_rows = []
    for i in range(f):
        for g in range(order):
            big_rows.append((gens.take_rows([i]) @ mats[g]))
    big = vstack(big_rows)
    if big.rank() != f * order:
        raise ArithmeticError("free part generators are not independent")
    rhs = np.zeros((f * order, f), dtype=np.uint8)
    for i in range(f):
        rhs[i * order + 0, i] = 1  # identity element sits at index 0
    lam = big.solve(BitMatrix.from_dense(rhs))
    if lam is None:
        raise ArithmeticError("projection functionals do not exist")
    lam_d = lam.dense()
    inv_idx = [element_index(*element_inverse(a, k, q), q) for a, k in group_elements(q)]
    acc = np.zeros((n, n), dtype=np.uint8)
    gens_d = gens.dense().astype(np.float32)
    lam_f = lam_d.astype(np.float32)
    for g in range(order):
        cols = (mats[g].dense().astype(np.float32) @ lam_f).astype(np.int64) & 1  # n x f
        rows = (gens_d @ mats[inv_idx[g]].dense().astype(np.float32)).astype(np.int64) & 1  # f x n
        acc ^= (cols.astype(np.float32) @ rows.astype(np.float32)).astype(np.int64).astype(np.uint8) & 1
    pi = BitMatrix.from_dense(acc)
    if (pi @ pi) != pi or (m.alpha @ pi) != (pi @ m.alpha) or (m.beta @ pi) != (pi @ m.beta):
        raise ArithmeticError("projection onto the free part failed")
    comp_rows = pi.left_kernel().row_space()
    comp = subrep(m, comp_rows)
    if sum_of_group_elements(comp).rank() != 0:
        raise ArithmeticError("complement still contains a free summand")
    return f, comp


def syzygy(m: Rep) -> Rep:
    """Kernel of the minimal projective cover (no free summands remain)."""
    q = m.q
    lifts = top_lift(m)
    t = lifts.rows
    if t == 0:
        return Rep(q, BitMatrix.zeros(0, 0), BitMatrix.zeros(0, 0))
    reg = regular_module(q)
    order = 4 * q
    mats = element_matrices(m)
    cover_rows = []
    for i in range(t):
        row_i = lifts.take_rows([i])
        for g in range(order):
            cover_rows.append(row_i @ mats[g])
    cover = vstack(cover_rows)
    if cover.rank() != m.dim:
        raise ArithmeticError("projective cover is not surjective")
    kernel = cover.left_kernel().row_space()
    from dihedralkit.gf2 import kronecker_product

    it = BitMatrix.identity(t)
    p_alpha = kronecker_product(it, reg.alpha)
    p_beta = kronecker_product(it, reg.beta)
    omega = Rep(q, coordinates_in(kernel, kernel @ p_alpha), coordinates_in(kernel, kernel @ p_beta))
    free_rank, reduced = split_projective(omega)
    return reduced


def cosyzygy(m: Rep) -> Rep:
    return dual(syzygy(dual(m)))


def heller(m: Rep, power: int) -> Rep:
    """Iterated Heller translate.

    Negative powers take kernels of projective covers, positive powers
    take cokernels of injective hulls; the result carries no free
    summand.  heller(m, 0) just strips the free part.
    """
    _, m = split_projective(m)
    step = syzygy if power < 0 else cosyzygy
    for _ in range(abs(power)):
        m = step(m)
    return m
