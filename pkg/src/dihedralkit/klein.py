"""Decomposition of Klein-four modules by Kronecker pencil reduction.

With u = g1 + I and v = g2 + I, the free part is split off first (its
rank is rank(uv)); on the complement uv = 0 and the module is exactly a
matrix pencil top -> socle.  Minimal indices of the pencil give the odd
Heller-translate summands, square regular blocks give the periodic
part.  Orientation is pinned by tests against explicitly constructed
translates of the trivial module, not by convention.

Summand labels: Omega(n) is the n-th kernel-side Heller translate of
the trivial module (n < 0 is the cokernel side), so Omega(1) has top 2
and socle 1.  Signatures collect the two odd Omega indices of the
non-periodic restriction of an even-dimensional string module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from dihedralkit.errors import NotSignatureEligible, PreconditionViolated
from dihedralkit.gf2 import (
    BitMatrix,
    Echelon,
    hstack,
    p_deg,
    p_divmod,
    p_factor,
    p_mul,
    p_str,
    subspace_intersection,
    subspace_preimage,
    vstack,
)
from dihedralkit.reps import KleinRep, Rep, SubgroupId, coordinates_in, restrict


@dataclass(frozen=True)
class KleinSummand:
    """One indecomposable Klein-four module.

    kind 'omega': dimension 2|n|+1; 'free': dimension 4;
    'periodic': dimension 2*deg(invariant)*power for an irreducible
    invariant; 'periodic_inf': dimension 2*power.
    """

    kind: str
    n: int = 0
    invariant: int = 0
    power: int = 0

    def dim(self) -> int:
        if self.kind == "omega":
            return 2 * abs(self.n) + 1
        if self.kind == "free":
            return 4
        if self.kind == "periodic":
            return 2 * p_deg(self.invariant) * self.power
        if self.kind == "periodic_inf":
            return 2 * self.power
        raise ValueError(f"unknown summand kind {self.kind}")

    def sort_key(self):
        return (self.kind, self.n, self.invariant, self.power)

    def label(self) -> str:
        if self.kind == "omega":
            return f"Omega({self.n})"
        if self.kind == "free":
            return "Free"
        if self.kind == "periodic":
            return f"Periodic({p_str(self.invariant)},{self.power})"
        return f"PeriodicInf({self.power})"

    def to_json(self) -> dict:
        if self.kind == "omega":
            return {"kind": "omega", "n": self.n}
        if self.kind == "free":
            return {"kind": "free"}
        if self.kind == "periodic":
            return {"kind": "periodic", "poly": p_str(self.invariant), "power": self.power}
        return {"kind": "periodic_inf", "power": self.power}


def omega_summand(n: int) -> KleinSummand:
    return KleinSummand("omega", n=n)


FREE = KleinSummand("free")


@dataclass(frozen=True)
class KleinDecomposition:
    """Multiset of labeled summands, stored sorted."""

    parts: tuple[tuple[KleinSummand, int], ...]

    @classmethod
    def from_counts(cls, counts: dict[KleinSummand, int]) -> "KleinDecomposition":
        items = [(s, m) for s, m in counts.items() if m]
        items.sort(key=lambda t: t[0].sort_key())
        return cls(tuple(items))

    def counts(self) -> dict[KleinSummand, int]:
        return {s: m for s, m in self.parts}

    def dim(self) -> int:
        return sum(s.dim() * m for s, m in self.parts)

    def omega_indices(self) -> list[int]:
        out = []
        for s, m in self.parts:
            if s.kind == "omega":
                out.extend([s.n] * m)
        return sorted(out)

    def free_rank(self) -> int:
        return sum(m for s, m in self.parts if s.kind == "free")

    def merge(self, other: "KleinDecomposition") -> "KleinDecomposition":
        counts = self.counts()
        for s, m in other.parts:
            counts[s] = counts.get(s, 0) + m
        return KleinDecomposition.from_counts(counts)

    def shift_omega(self, delta: int) -> "KleinDecomposition":
        counts: dict[KleinSummand, int] = {}
        for s, m in self.parts:
            key = omega_summand(s.n + delta) if s.kind == "omega" else s
            counts[key] = counts.get(key, 0) + m
        return KleinDecomposition.from_counts(counts)

    def negate_omega(self) -> "KleinDecomposition":
        counts: dict[KleinSummand, int] = {}
        for s, m in self.parts:
            key = omega_summand(-s.n) if s.kind == "omega" else s
            counts[key] = counts.get(key, 0) + m
        return KleinDecomposition.from_counts(counts)

    def drop_free(self) -> "KleinDecomposition":
        return KleinDecomposition(tuple((s, m) for s, m in self.parts if s.kind != "free"))

    def to_json(self) -> list[dict]:
        out = []
        for s, m in self.parts:
            entry = s.to_json()
            entry["mult"] = m
            out.append(entry)
        return out

    def __str__(self):
        return " + ".join(f"{s.label()}x{m}" if m > 1 else s.label() for s, m in self.parts) or "0"


@dataclass(frozen=True)
class Signature:
    """Unordered pair of Omega indices, stored sorted."""

    entries: tuple[int, int]

    @classmethod
    def of(cls, r: int, s: int) -> "Signature":
        return cls(tuple(sorted((r, s))))

    def shifted(self, dr: int, ds: int) -> "Signature":
        return Signature.of(self.entries[0] + dr, self.entries[1] + ds)

    def to_json(self) -> list[int]:
        return list(self.entries)

    def __str__(self):
        return f"[{self.entries[0]},{self.entries[1]}]"


# -- Klein module plumbing ----------------------------------------------------


def kv4_regular() -> KleinRep:
    """The group algebra of the Klein four group, elements 1, g1, g2, g1g2."""
    g1 = BitMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    g2 = BitMatrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    return KleinRep(g1, g2)


def klein_trivial() -> KleinRep:
    one = BitMatrix.identity(1)
    return KleinRep(one, one)


def _uv(m: KleinRep) -> tuple[BitMatrix, BitMatrix]:
    ident = BitMatrix.identity(m.dim)
    return m.g1 ^ ident, m.g2 ^ ident


def klein_radical_socle(m: KleinRep) -> tuple[BitMatrix, BitMatrix]:
    u, v = _uv(m)
    radical = vstack([u, v]).row_space()
    socle = hstack([u, v]).left_kernel().row_space()
    return radical, socle


def klein_top_lift(m: KleinRep) -> BitMatrix:
    radical, _ = klein_radical_socle(m)
    ech = Echelon(m.dim)
    for i in range(radical.rows):
        ech.insert(radical.words[i].copy())
    ident = BitMatrix.identity(m.dim)
    rows = [i for i in range(m.dim) if ech.insert(ident.words[i].copy()) is not None]
    return ident.take_rows(rows)


def klein_subrep(m: KleinRep, rows: BitMatrix) -> KleinRep:
    return KleinRep(coordinates_in(rows, rows @ m.g1), coordinates_in(rows, rows @ m.g2))


def klein_elements(m: KleinRep) -> list[BitMatrix]:
    return [BitMatrix.identity(m.dim), m.g1, m.g2, m.g1 @ m.g2]


def split_free(m: KleinRep) -> tuple[int, KleinRep]:
    """Free rank = rank(uv) and a complement on which uv acts as zero."""
    u, v = _uv(m)
    uv = u @ v
    f = uv.rank()
    if f == 0:
        return 0, m
    n = m.dim
    ech = Echelon(n)
    picked = []
    for i in range(n):
        if ech.insert(uv.words[i].copy()) is not None:
            picked.append(i)
        if len(picked) == f:
            break
    ident = BitMatrix.identity(n)
    gens = ident.take_rows(picked)
    mats = klein_elements(m)
    big_rows = []
    for i in range(f):
        row_i = gens.take_rows([i])
        for g in mats:
            big_rows.append(row_i @ g)
    big = vstack(big_rows)
    if big.rank() != 4 * f:
        raise ArithmeticError("free part generators are not independent")
    rhs = np.zeros((4 * f, f), dtype=np.uint8)
    for i in range(f):
        rhs[4 * i, i] = 1  # identity element first in klein_elements order
    lam = big.solve(BitMatrix.from_dense(rhs))
    if lam is None:
        raise ArithmeticError("free projection functionals do not exist")
    acc = np.zeros((n, n), dtype=np.uint8)
    lam_f = lam.dense().astype(np.float32)
    gens_f = gens.dense().astype(np.float32)
    for g in mats:  # every Klein element is its own inverse
        cols = (g.dense().astype(np.float32) @ lam_f).astype(np.int64) & 1
        rows = (gens_f @ g.dense().astype(np.float32)).astype(np.int64) & 1
        acc ^= (cols.astype(np.float32) @ rows.astype(np.float32)).astype(np.int64).astype(np.uint8) & 1
    pi = BitMatrix.from_dense(acc)
    if (pi @ pi) != pi or (m.g1 @ pi) != (pi @ m.g1) or (m.g2 @ pi) != (pi @ m.g2):
        raise ArithmeticError("projection onto the free part failed")
    comp = klein_subrep(m, pi.left_kernel().row_space())
    cu, cv = _uv(comp)
    if not (cu @ cv).is_zero():
        raise ArithmeticError("complement still contains a free summand")
    return f, comp


def klein_syzygy(m: KleinRep) -> KleinRep:
    """Kernel of the minimal projective cover over the Klein four group."""
    lifts = klein_top_lift(m)
    t = lifts.rows
    if t == 0:
        return KleinRep(BitMatrix.zeros(0, 0), BitMatrix.zeros(0, 0))
    reg = kv4_regular()
    mats = klein_elements(m)
    cover_rows = []
    for i in range(t):
        row_i = lifts.take_rows([i])
        for g in mats:
            cover_rows.append(row_i @ g)
    cover = vstack(cover_rows)
    if cover.rank() != m.dim:
        raise ArithmeticError("projective cover is not surjective")
    kernel = cover.left_kernel().row_space()
    from dihedralkit.gf2 import kronecker_product

    it = BitMatrix.identity(t)
    p1 = kronecker_product(it, reg.g1)
    p2 = kronecker_product(it, reg.g2)
    omega = KleinRep(coordinates_in(kernel, kernel @ p1), coordinates_in(kernel, kernel @ p2))
    _, reduced = split_free(omega)
    return reduced


def klein_cosyzygy(m: KleinRep) -> KleinRep:
    from dihedralkit.reps import dual_klein

    return dual_klein(klein_syzygy(dual_klein(m)))


def klein_heller(m: KleinRep, power: int) -> KleinRep:
    """Heller translates over V4; negative powers are kernel-side."""
    _, m = split_free(m)
    step = klein_syzygy if power < 0 else klein_cosyzygy
    for _ in range(abs(power)):
        m = step(m)
    return m


def omega_module(n: int) -> KleinRep:
    """Explicit Omega(n): n kernel-side translates of the trivial module."""
    return klein_heller(klein_trivial(), -n)


# -- pencil reduction ---------------------------------------------------------


def _kernel_of_map(m: BitMatrix) -> BitMatrix:
    """Basis of {x : x @ m = 0}."""
    return m.left_kernel().row_space()


def _chain_kernel_dims(c: BitMatrix, d: BitMatrix, steps: int) -> list[int]:
    """dim ker of the staircase maps T_k, k = 1..steps.

    T_k sends (x_1..x_k) to (x_1 c, x_1 d + x_2 c, ..., x_k d); its kernel
    collects chains that witness the wide Kronecker blocks.
    """
    t = c.rows
    kerc = _kernel_of_map(c)
    imc = c.row_space()
    dims = []
    c_dim = kerc.rows
    e_space = (kerc @ d).row_space()
    dims.append(c_dim - e_space.rows)
    for _ in range(1, steps):
        meet = subspace_intersection(e_space, imc)
        c_dim = c_dim - e_space.rows + meet.rows + kerc.rows
        pre = subspace_preimage(c, meet)
        e_space = (pre @ d).row_space()
        dims.append(c_dim - e_space.rows)
    return dims


def _wide_multiplicities(c: BitMatrix, d: BitMatrix) -> dict[int, int]:
    """Multiplicity of each wide block (top n+1, socle n) from chain kernels."""
    t = c.rows
    steps = t + 2
    kappa = [0, 0] + _chain_kernel_dims(c, d, steps)  # kappa[k+1] = dim ker T_k
    out = {}
    for n in range(0, t + 1):
        mult = kappa[n + 2] - 2 * kappa[n + 1] + kappa[n]
        if mult < 0:
            raise ArithmeticError("chain kernel sequence is not convex")
        if mult:
            out[n] = mult
    return out


def _smith_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of a Smith-style reduction over GF(2)[t] (order-free)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    r0 = 0
    c0 = 0
    while r0 < rows and c0 < cols:
        best = None
        for i in range(r0, rows):
            for j in range(c0, cols):
                if m[i][j] and (best is None or p_deg(m[i][j]) < p_deg(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != r0:
            m[r0], m[bi] = m[bi], m[r0]
        if bj != c0:
            for row in m:
                row[c0], row[bj] = row[bj], row[c0]
        while True:
            pivot = m[r0][c0]
            retry = False
            for i in range(r0 + 1, rows):
                if m[i][c0]:
                    quot, _ = p_divmod(m[i][c0], pivot)
                    if quot:
                        for j in range(c0, cols):
                            m[i][j] ^= p_mul(quot, m[r0][j])
                    if m[i][c0]:
                        m[r0], m[i] = m[i], m[r0]
                        retry = True
                        break
            if retry:
                continue
            for j in range(c0 + 1, cols):
                if m[r0][j]:
                    quot, _ = p_divmod(m[r0][j], pivot)
                    if quot:
                        for i in range(r0, rows):
                            m[i][j] ^= p_mul(quot, m[i][c0])
                    if m[r0][j]:
                        for row in m:
                            row[c0], row[j] = row[j], row[c0]
                        retry = True
                        break
            if retry:
                continue
            break
        diag.append(m[r0][c0])
        r0 += 1
        c0 += 1
    return diag


def _pencil_poly_matrix(c: BitMatrix, d: BitMatrix, t_on_c: bool) -> list[list[int]]:
    cd, dd = c.dense(), d.dense()
    out = []
    for i in range(c.rows):
        row = []
        for j in range(c.cols):
            if t_on_c:
                row.append((int(cd[i, j]) << 1) ^ int(dd[i, j]))
            else:
                row.append((int(dd[i, j]) << 1) ^ int(cd[i, j]))
        out.append(row)
    return out


def pencil_reduce(m: KleinRep) -> KleinDecomposition:
    """Full decomposition of a module on which (g1+I)(g2+I) = 0."""
    u, v = _uv(m)
    if not (u @ v).is_zero():
        raise PreconditionViolated("pencil reduction requires uv = 0")
    n = m.dim
    counts: dict[KleinSummand, int] = {}
    if n == 0:
        return KleinDecomposition.from_counts(counts)
    _, socle = klein_radical_socle(m)
    lifts = klein_top_lift(m)
    c_mat = coordinates_in(socle, lifts @ u)
    d_mat = coordinates_in(socle, lifts @ v)

    wide = _wide_multiplicities(c_mat, d_mat)
    dual_wide = _wide_multiplicities(c_mat.transpose(), d_mat.transpose())
    k_primal = wide.pop(0, 0)
    k_dual = dual_wide.pop(0, 0)
    if k_primal != k_dual:
        raise ArithmeticError("trivial-summand counts disagree between pencil and its dual")
    if k_primal:
        counts[omega_summand(0)] = k_primal
    for idx, mult in wide.items():
        counts[omega_summand(idx)] = counts.get(omega_summand(idx), 0) + mult
    for idx, mult in dual_wide.items():
        counts[omega_summand(-idx)] = counts.get(omega_summand(-idx), 0) + mult

    for entry in _smith_diagonal(_pencil_poly_matrix(c_mat, d_mat, t_on_c=True)):
        if entry in (0, 1):
            continue
        for p, e in p_factor(entry).items():
            s = KleinSummand("periodic", invariant=p, power=e)
            counts[s] = counts.get(s, 0) + 1
    for entry in _smith_diagonal(_pencil_poly_matrix(c_mat, d_mat, t_on_c=False)):
        if entry in (0, 1):
            continue
        for p, e in p_factor(entry).items():
            if p == 2:  # powers of the swapped variable: the infinity family
                s = KleinSummand("periodic_inf", power=e)
                counts[s] = counts.get(s, 0) + 1

    dec = KleinDecomposition.from_counts(counts)
    if dec.dim() != n:
        raise ArithmeticError(f"dimension ledger failed: {dec} sums to {dec.dim()}, module has {n}")
    return dec


_DECOMP_CACHE: dict[bytes, KleinDecomposition] = {}


def klein_decompose(m: KleinRep) -> KleinDecomposition:
    """split_free then pencil_reduce, with an exact dimension ledger."""
    key = m.key()
    hit = _DECOMP_CACHE.get(key)
    if hit is not None:
        return hit
    f, comp = split_free(m)
    dec = pencil_reduce(comp)
    if f:
        dec = dec.merge(KleinDecomposition.from_counts({FREE: f}))
    if dec.dim() != m.dim:
        raise ArithmeticError("dimension ledger failed after free split")
    if len(_DECOMP_CACHE) > 100000:
        _DECOMP_CACHE.clear()
    _DECOMP_CACHE[key] = dec
    return dec


def signature_of(m: Rep) -> tuple[Signature, SubgroupId]:
    """Signature of an even-dimensional non-periodic string module.

    The active Klein subgroup is the one whose restriction carries odd
    (non-periodic) summands; there must be exactly two, on exactly one
    side.
    """
    dec_x = klein_decompose(restrict(m, SubgroupId.KLEIN_X))
    dec_y = klein_decompose(restrict(m, SubgroupId.KLEIN_Y))
    odd_x = dec_x.omega_indices()
    odd_y = dec_y.omega_indices()
    if odd_x and odd_y:
        raise NotSignatureEligible("both Klein restrictions are non-periodic")
    if not odd_x and not odd_y:
        raise NotSignatureEligible("both Klein restrictions are periodic")
    odds, active = (odd_x, SubgroupId.KLEIN_X) if odd_x else (odd_y, SubgroupId.KLEIN_Y)
    if len(odds) != 2:
        raise NotSignatureEligible(f"{len(odds)} odd summands on the active side, need exactly 2")
    return Signature.of(odds[0], odds[1]), active
