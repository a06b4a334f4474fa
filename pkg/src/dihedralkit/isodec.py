"""Krull-Schmidt machinery: hom spaces, isomorphism tests, decomposition.

Splitting uses Fitting's lemma on stable powers of endomorphisms; when
no quick split is found the endomorphism algebra's radical is computed
(characteristic-2 chain of characteristic-polynomial trace substitutes
on the regular representation) and the quotient is inspected.  A field
quotient certifies indecomposability; otherwise an idempotent of the
semisimple quotient is lifted by repeated squaring and forces a split.
Every claim is conservative: anything unprovable surfaces as an
uncertified or unidentified summand, never as a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from dihedralkit.errors import CertificationFailed, IsoUndecided, QMismatch
from dihedralkit.gf2 import BitMatrix, Echelon, charpoly, p_deg, p_divmod, p_factor, p_gcd, p_mod, p_mul, solve_linear
from dihedralkit.klein import KleinDecomposition, klein_decompose
from dihedralkit.reps import (
    KleinRep,
    Rep,
    SubgroupId,
    c2_profile,
    direct_sum_reps,
    regular_module,
    restrict,
    split_projective,
    string_module,
    subrep,
    sum_of_group_elements,
)
from dihedralkit.words import Word, words_of_length


@dataclass(frozen=True)
class HomSpace:
    source: Rep
    target: Rep
    basis: tuple[BitMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def intertwiner_basis(gens_m: list[BitMatrix], gens_n: list[BitMatrix]) -> list[BitMatrix]:
    if len(gens_m) != len(gens_n):
        raise ValueError("generator tuples must have equal length")
    if gens_m and gens_m[0].rows == 0:
        return []
    if gens_n and gens_n[0].rows == 0:
        return []
    return solve_linear(list(zip(gens_m, gens_n)))


def hom_space(m: Rep, n: Rep) -> HomSpace:
    if m.q != n.q:
        raise QMismatch(f"q={m.q} vs q={n.q}")
    basis = intertwiner_basis([m.alpha, m.beta], [n.alpha, n.beta])
    return HomSpace(m, n, tuple(basis))


def end_basis(m: Rep) -> list[BitMatrix]:
    return intertwiner_basis([m.alpha, m.beta], [m.alpha, m.beta])


# -- isomorphism testing ------------------------------------------------------


def _restriction_invariants(m: Rep):
    return (
        c2_profile(m.alpha),
        c2_profile(m.beta),
        klein_decompose(restrict(m, SubgroupId.KLEIN_X)),
        klein_decompose(restrict(m, SubgroupId.KLEIN_Y)),
    )


def _unit_in_span(basis: list[BitMatrix], n: int, seed: int, trials: int) -> str:
    """'yes' if some GF(2) combination is invertible, 'no' if provably none,
    'undecided' after exhausting random trials."""
    d = len(basis)
    if d == 0:
        return "no"
    for h in basis:
        if h.rank() == n:
            return "yes"
    if d <= 16:
        words = np.stack([h.words.reshape(-1) for h in basis])
        combos = sorted(range(1, 1 << d), key=lambda c: (bin(c).count("1"), c))
        shape = basis[0].words.shape
        for c in combos:
            if bin(c).count("1") == 1:
                continue  # singles already tried
            sel = [i for i in range(d) if (c >> i) & 1]
            acc = np.bitwise_xor.reduce(words[sel], axis=0).reshape(shape)
            if BitMatrix(n, n, acc.copy()).rank() == n:
                return "yes"
        return "no"
    rng = np.random.default_rng(seed)
    words = np.stack([h.words.reshape(-1) for h in basis])
    shape = basis[0].words.shape
    for _ in range(trials):
        coeffs = rng.integers(0, 2, d, dtype=np.uint8)
        sel = np.nonzero(coeffs)[0]
        if sel.size == 0:
            continue
        acc = np.bitwise_xor.reduce(words[sel], axis=0).reshape(shape)
        if BitMatrix(n, n, acc.copy()).rank() == n:
            return "yes"
    return "undecided"


def iso_verdict(m: Rep, n: Rep, seed: int = 0, trials: int = 128) -> str:
    """'yes', 'no', or 'undecided' for m = n as modules."""
    if m.q != n.q:
        raise QMismatch(f"q={m.q} vs q={n.q}")
    if m.dim != n.dim:
        return "no"
    if m.dim == 0:
        return "yes"
    if m.key() == n.key():
        return "yes"
    if _restriction_invariants(m) != _restriction_invariants(n):
        return "no"
    basis = intertwiner_basis([m.alpha, m.beta], [n.alpha, n.beta])
    return _unit_in_span(basis, m.dim, seed, trials)


def is_isomorphic(m: Rep, n: Rep, seed: int = 0) -> bool:
    v = iso_verdict(m, n, seed=seed)
    if v == "undecided":
        raise IsoUndecided(f"no unit found between {m} and {n} within the trial budget")
    return v == "yes"


def klein_isomorphic(m: KleinRep, n: KleinRep, seed: int = 0) -> bool:
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    basis = intertwiner_basis([m.g1, m.g2], [n.g1, n.g2])
    v = _unit_in_span(basis, m.dim, seed, 128)
    if v == "undecided":
        raise IsoUndecided("no unit found between Klein modules within the trial budget")
    return v == "yes"


# -- endomorphism algebra radical and locality certificates ------------------


class FlatAlgebra:
    """A matrix algebra with basis and coordinate bookkeeping."""

    def __init__(self, basis: list[BitMatrix]):
        self.basis = basis
        self.d = len(basis)
        self.n = basis[0].rows if basis else 0
        width = self.n * self.n
        self.ech = Echelon(width + self.d, pivot_cols=width)
        self._width = width
        for k, b in enumerate(basis):
            aug = self._flatten(b)
            pos = width + k
            aug[pos >> 6] ^= np.uint64(1) << np.uint64(pos & 63)
            if self.ech.insert(aug) is None:
                raise ValueError("algebra basis is linearly dependent")

    def _flatten(self, mat: BitMatrix) -> np.ndarray:
        width = self._width
        aug = np.zeros(((width + self.d + 63) >> 6,), dtype=np.uint64)
        flat = BitMatrix.from_dense(mat.dense().reshape(1, -1)).words[0]
        aug[: flat.size] = flat
        return aug

    def coords(self, mat: BitMatrix) -> np.ndarray:
        red = self.ech.reduce(self._flatten(mat))
        width = self._width
        nw = (width + 63) >> 6
        head = red[:nw].copy()
        if width & 63:
            head[-1] &= (np.uint64(1) << np.uint64(width & 63)) - np.uint64(1)
        if head.any():
            raise ArithmeticError("matrix does not lie in the algebra")
        out = np.zeros(self.d, dtype=np.uint8)
        for k in range(self.d):
            pos = width + k
            out[k] = int((red[pos >> 6] >> np.uint64(pos & 63)) & np.uint64(1))
        return out

    def matrix(self, coords: np.ndarray) -> BitMatrix:
        acc = BitMatrix.zeros(self.n, self.n)
        words = acc.words
        for k in np.nonzero(coords)[0]:
            words ^= self.basis[int(k)].words
        return BitMatrix(self.n, self.n, words)


def _coords_to_words(c: np.ndarray) -> np.ndarray:
    out = np.zeros(((len(c) + 63) >> 6,), dtype=np.uint64)
    for j in np.nonzero(c)[0]:
        out[j >> 6] ^= np.uint64(1) << np.uint64(j & 63)
    return out


def _nilpotent(mat: BitMatrix) -> bool:
    n = mat.rows
    s = 1
    while s < n:
        s <<= 1
    return mat.pow(s).is_zero()


def _singular_candidates(alg: FlatAlgebra, rng: np.random.Generator, samples: int = 128):
    """Singular algebra elements: in a local algebra these span the radical.

    Singletons, pairs, and pairs shifted by the identity are enough to
    span the radical exactly when the quotient field is GF(2) or GF(4);
    random combinations back the larger quotients up.
    """
    n = alg.n
    ident = BitMatrix.identity(n)
    seen: list[BitMatrix] = []

    def consider(mat: BitMatrix):
        if not mat.is_zero() and mat.rank() < n:
            seen.append(mat)

    for b in alg.basis:
        consider(b)
        consider(b ^ ident)
    d = alg.d
    cap = 0
    for i in range(d):
        for j in range(i + 1, d):
            cap += 1
            if cap > 600:
                break
            s = alg.basis[i] ^ alg.basis[j]
            consider(s)
            consider(s ^ ident)
        if cap > 600:
            break
    for _ in range(samples):
        coeffs = rng.integers(0, 2, d, dtype=np.uint8)
        if coeffs.any():
            consider(alg.matrix(coeffs))
    return seen


def _flat_span(mats: list[BitMatrix], n: int) -> BitMatrix:
    """Row space of the matrices flattened to n*n-bit rows."""
    if not mats:
        return BitMatrix.zeros(0, n * n)
    dense = np.stack([m.dense().reshape(-1) for m in mats])
    return BitMatrix.from_dense(dense).row_space()


def _unflatten(rows: BitMatrix, n: int) -> list[BitMatrix]:
    d = rows.dense()
    return [BitMatrix.from_dense(d[i].reshape(n, n)) for i in range(rows.rows)]


def verified_radical(alg: FlatAlgebra, rng: np.random.Generator) -> list[np.ndarray] | None:
    """Span of found singular elements, closed into an ideal and verified
    to be nilpotent.  Returns coordinate vectors of a certified nil ideal
    (hence contained in the radical), or None if verification fails."""
    n = alg.n
    found = _singular_candidates(alg, rng)
    span = _flat_span(found, n)
    # close under multiplication by the algebra (both sides)
    frontier = _unflatten(span, n)
    while frontier:
        products = []
        for mc in frontier:
            for b in alg.basis:
                products.append(b @ mc)
                products.append(mc @ b)
        bigger = span.row_space() if not products else _flat_span(_unflatten(span, n) + products, n)
        if bigger.rows == span.rows:
            break
        # keep only the genuinely new directions for the next round
        old = Echelon(n * n)
        for i in range(span.rows):
            old.insert(span.words[i].copy())
        frontier = []
        for mat in _unflatten(bigger, n):
            flat = BitMatrix.from_dense(mat.dense().reshape(1, -1)).words[0]
            if old.insert(flat.copy()) is not None:
                frontier.append(mat)
        span = bigger
    # verify nilpotency of the subspace: powers of the ideal must vanish
    gens = _unflatten(span, n)
    current = list(gens)
    rounds = 0
    while current and rounds <= alg.d + 1:
        products = [x @ y for x in current for y in gens]
        power = _flat_span(products, n)
        current = _unflatten(power, n)
        rounds += 1
    if current:
        return None  # not nilpotent: the singular span exceeded the radical
    return [alg.coords(m) for m in gens]


def _quotient_basis(alg: FlatAlgebra, rad: list[np.ndarray]) -> list[np.ndarray]:
    span = Echelon(alg.d)
    for c in rad:
        span.insert(_coords_to_words(c))
    out = []
    for k in range(alg.d):
        e = np.zeros(alg.d, dtype=np.uint8)
        e[k] = 1
        if span.insert(_coords_to_words(e)) is not None:
            out.append(e)
    return out


def _quotient_algebra(alg: FlatAlgebra, rad: list[np.ndarray]):
    """Structure of E/rad: basis coords and left-multiplication matrices."""
    qb = _quotient_basis(alg, rad)
    k = len(qb)
    full = rad + qb
    basis_mat = BitMatrix.from_dense(np.array(full, dtype=np.uint8)) if full else BitMatrix.zeros(0, alg.d)

    def quotient_coords(coords: np.ndarray) -> np.ndarray:
        from dihedralkit.reps import coordinates_in

        row = BitMatrix.from_dense(coords.reshape(1, -1))
        x = coordinates_in(basis_mat, row)
        return x.dense()[0, len(rad) :]

    mult = []  # mult[i]: k x k matrix, row j = quotient coords of qb_j * qb_i
    mats = [alg.matrix(c) for c in qb]
    for i in range(k):
        rows = np.zeros((k, k), dtype=np.uint8)
        for j in range(k):
            rows[j] = quotient_coords(alg.coords(mats[j] @ mats[i]))
        mult.append(BitMatrix.from_dense(rows))
    return qb, mult


def _quotient_is_division(alg: FlatAlgebra, rad: list[np.ndarray]) -> bool:
    """Every nonzero element of E/rad invertible (checked by enumeration)."""
    qb, mult = _quotient_algebra(alg, rad)
    k = len(qb)
    if k == 0:
        return False
    if k > 12:
        raise CertificationFailed(f"quotient of dimension {k} too large to enumerate")
    for mask in range(1, 1 << k):
        acc = BitMatrix.zeros(k, k)
        words = acc.words
        for i in range(k):
            if (mask >> i) & 1:
                words ^= mult[i].words
        if BitMatrix(k, k, words).rank() != k:
            return False
    return True


@dataclass
class LocalityReport:
    is_local: bool
    radical_coords: list[np.ndarray]
    quotient_dim: int


def certify_local(alg: FlatAlgebra, rng: np.random.Generator | None = None) -> LocalityReport:
    """Decide whether the algebra is local, with a standalone certificate.

    The radical candidate is the ideal closure of the singular elements
    found.  If it verifies as a nil ideal and the quotient is a division
    algebra, the candidate is exactly the radical and the algebra is
    local.  If the singular span fails the nil check, the algebra cannot
    be local (in a local algebra every singular element lies in the
    radical, whose span is nilpotent).
    """
    if rng is None:
        rng = np.random.default_rng(0)
    rad = verified_radical(alg, rng)
    if rad is None:
        return LocalityReport(False, [], -1)
    division = _quotient_is_division(alg, rad)
    return LocalityReport(division, rad, alg.d - len(rad))


# -- Fitting decomposition ----------------------------------------------------


@dataclass(frozen=True)
class IdTag:
    kind: str  # 'string' | 'band' | 'projective' | 'unidentified'
    word: Word | None = None

    def label(self) -> str:
        if self.kind == "string":
            return f"String({self.word.text() if self.word else '?'})"
        return self.kind.capitalize()

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.word is not None:
            out["word"] = self.word.tokens()
        return out


@dataclass(frozen=True)
class Summand:
    rep: Rep
    multiplicity: int
    tag: IdTag
    certified: bool

    def to_json(self) -> dict:
        return {
            "dim": self.rep.dim,
            "multiplicity": self.multiplicity,
            "tag": self.tag.to_json(),
            "certified": self.certified,
        }


@dataclass(frozen=True)
class DecompositionReport:
    summands: tuple[Summand, ...]
    seed: int

    def total_dim(self) -> int:
        return sum(s.rep.dim * s.multiplicity for s in self.summands)

    def count(self, predicate) -> int:
        return sum(s.multiplicity for s in self.summands if predicate(s))

    def to_json(self) -> dict:
        return {"seed": self.seed, "summands": [s.to_json() for s in self.summands]}

    def __str__(self):
        parts = [f"{s.tag.label()}[dim {s.rep.dim}]x{s.multiplicity}" for s in self.summands]
        return " + ".join(parts) if parts else "0"


def _stable_power(phi: BitMatrix) -> BitMatrix:
    n = phi.rows
    s = 1
    power = phi
    while s < n:
        power = power @ power
        s <<= 1
    return power


def _try_split(m: Rep, phi: BitMatrix) -> tuple[Rep, Rep] | None:
    stable = _stable_power(phi)
    r = stable.rank()
    if r == 0 or r == m.dim:
        return None
    ker_rows = stable.left_kernel().row_space()
    im_rows = stable.row_space()
    return subrep(m, ker_rows), subrep(m, im_rows)


def _poly_inverse(a: int, mod: int) -> int | None:
    r0, r1 = mod, p_mod(a, mod)
    s0, s1 = 0, 1
    while r1:
        q, r = p_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ p_mul(q, s1)
    if r0 != 1:
        return None
    return p_mod(s0, mod)


def _apply_poly(poly: int, mat: BitMatrix) -> BitMatrix:
    acc = BitMatrix.zeros(mat.rows, mat.cols)
    power = BitMatrix.identity(mat.rows)
    while poly:
        if poly & 1:
            acc = acc ^ power
        poly >>= 1
        if poly:
            power = power @ mat
    return acc


def _crt_idempotent(z: BitMatrix) -> BitMatrix | None:
    """Exact nontrivial idempotent in GF(2)[z] from a composite minimal
    polynomial, or None when the minimal polynomial is a prime power."""
    from dihedralkit.gf2 import min_poly

    f = min_poly(z).value
    factors = p_factor(f)
    if len(factors) < 2:
        return None
    items = sorted(factors.items())
    g = 1
    for _ in range(items[0][1]):
        g = p_mul(g, items[0][0])
    h = p_divmod(f, g)[0]
    s = _poly_inverse(h, g)
    if s is None:
        return None
    e = _apply_poly(p_mul(s, h), z)
    if (e @ e) != e or e.is_zero() or e.is_identity():
        return None
    return e


def _find_idempotent_split(rep: Rep, ends: list[BitMatrix], rng: np.random.Generator) -> tuple[Rep, Rep] | None:
    """Hunt for a splitting endomorphism via minimal-polynomial factoring."""
    d = len(ends)

    def candidates():
        for b in ends:
            yield b
        cap = 0
        for i in range(d):
            for j in range(i + 1, d):
                cap += 1
                if cap > 300:
                    return
                yield ends[i] ^ ends[j]
                yield ends[i] @ ends[j]

    for z in candidates():
        e = _crt_idempotent(z)
        if e is not None:
            split = _try_split(rep, e)
            if split is not None:
                return split
    for _ in range(96):
        coeffs = rng.integers(0, 2, d, dtype=np.uint8)
        sel = np.nonzero(coeffs)[0]
        if sel.size == 0:
            continue
        acc = ends[int(sel[0])]
        for i in sel[1:]:
            acc = acc ^ ends[int(i)]
        e = _crt_idempotent(acc)
        if e is not None:
            split = _try_split(rep, e)
            if split is not None:
                return split
    return None


def fitting_decompose(m: Rep, seed: int = 0) -> DecompositionReport:
    """Split into indecomposables, certify each, group up to isomorphism."""
    rng = np.random.default_rng(seed)
    free_rank, core = split_projective(m)
    leaves: list[tuple[Rep, bool]] = []
    queue = [core] if core.dim else []
    while queue:
        rep = queue.pop()
        f, rep = split_projective(rep)
        if f:
            free_rank += f
            if rep.dim == 0:
                continue
        ends = end_basis(rep)
        if len(ends) <= 1:
            leaves.append((rep, True))
            continue
        split = None
        for phi in ends:
            split = _try_split(rep, phi)
            if split:
                break
        if split is None:
            split = _find_idempotent_split(rep, ends, rng)
        if split is None:
            try:
                report = certify_local(FlatAlgebra(ends), rng)
                leaves.append((rep, report.is_local))
            except CertificationFailed:
                leaves.append((rep, False))
            continue
        queue.extend(split)
    # group leaves up to isomorphism
    groups: list[list] = []  # [rep, multiplicity, certified]
    for rep, certified in leaves:
        placed = False
        for g in groups:
            try:
                same = is_isomorphic(g[0], rep, seed=seed)
            except IsoUndecided:
                same = False
            if same:
                g[1] += 1
                g[2] = g[2] and certified
                placed = True
                break
        if not placed:
            groups.append([rep, 1, certified])
    summands = []
    if free_rank:
        summands.append(Summand(regular_module(m.q), free_rank, IdTag("projective"), True))
    for rep, mult, certified in groups:
        tag = identify_summand(rep, seed=seed) if certified else IdTag("unidentified")
        summands.append(Summand(rep, mult, tag, certified))
    summands.sort(key=lambda s: (-s.rep.dim, s.tag.kind, s.rep.key()))
    report = DecompositionReport(tuple(summands), seed)
    if report.total_dim() != m.dim:
        raise ArithmeticError("decomposition dimension ledger failed")
    return report


def identify_summand(m: Rep, seed: int = 0, budget: int = 100000) -> IdTag:
    """Classify a certified indecomposable by restriction shape, then
    recover string words by filtered enumeration confirmed with an
    isomorphism test."""
    q = m.q
    n = m.dim
    if n == 4 * q and sum_of_group_elements(m).rank() == 1:
        return IdTag("projective")
    tx, fx = c2_profile(m.alpha)
    ty, fy = c2_profile(m.beta)
    if n % 2 == 0 and tx == 0 and ty == 0:
        return IdTag("band")
    # string: enumerate candidates of the right length with matching profiles
    from dihedralkit.errors import NotSignatureEligible
    from dihedralkit.klein import signature_of
    from dihedralkit.words import iter_words_of_length

    length = n - 1
    if length >= 2 and 4 * (1 << (length - 1)) > budget:
        return IdTag("unidentified")
    target_profiles = ((tx, fx), (ty, fy))
    generated = 0
    sig = None
    if n % 2 == 0:
        try:
            sig = signature_of(m)
        except NotSignatureEligible:
            sig = None
    for w in iter_words_of_length(length, q):
        if w.canonical().letters != w.letters:
            continue  # one representative per inversion class
        generated += 1
        if generated > budget:
            return IdTag("unidentified")
        cand = string_module(w, q)
        if (c2_profile(cand.alpha), c2_profile(cand.beta)) != target_profiles:
            continue
        if sig is not None:
            try:
                if signature_of(cand) != sig:
                    continue
            except NotSignatureEligible:
                continue
        try:
            if is_isomorphic(m, cand, seed=seed):
                return IdTag("string", w.canonical())
        except IsoUndecided:
            continue
    return IdTag("unidentified")
