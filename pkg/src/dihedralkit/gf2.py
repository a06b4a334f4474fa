"""Dense linear algebra over GF(2) with bit-packed rows.

Matrices are stored row-major as uint64 words, 64 columns per word,
little-endian within each word.  Elimination works directly on the
packed form with vectorised masked XOR; multiplication unpacks to
float32 and uses BLAS (exact for inner dimensions below 2**24).
All eliminations pick the leftmost pivot so every derived basis is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_U64 = np.uint64


def _nwords(cols: int) -> int:
    return max(1, (cols + 63) >> 6)


class BitMatrix:
    """Immutable matrix over GF(2); `words` has shape (rows, nwords)."""

    __slots__ = ("rows", "cols", "words", "_dense")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        self.rows = rows
        self.cols = cols
        if words is None:
            words = np.zeros((rows, _nwords(cols)), dtype=_U64)
        self.words = words
        self._dense = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_dense(cls, arr) -> "BitMatrix":
        arr = np.ascontiguousarray(np.asarray(arr, dtype=np.uint8) & 1)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = arr.shape
        nw = _nwords(cols)
        padded = np.zeros((rows, nw * 64), dtype=np.uint8)
        padded[:, :cols] = arr
        packed = np.packbits(padded, axis=1, bitorder="little")
        return cls(rows, cols, np.ascontiguousarray(packed).view(_U64))

    @classmethod
    def from_rows(cls, rows_list, cols: int | None = None) -> "BitMatrix":
        rows_list = [list(r) for r in rows_list]
        if cols is None:
            cols = len(rows_list[0]) if rows_list else 0
        arr = np.array(rows_list, dtype=np.uint8).reshape(len(rows_list), cols)
        return cls.from_dense(arr)

    @classmethod
    def from_strings(cls, rows: list[str]) -> "BitMatrix":
        return cls.from_rows([[int(c) for c in row] for row in rows])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        m = cls(n, n)
        for i in range(n):
            m.words[i, i >> 6] = _U64(1) << _U64(i & 63)
        return m

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> "BitMatrix":
        return cls.from_dense(rng.integers(0, 2, (rows, cols), dtype=np.uint8))

    # -- basic access ------------------------------------------------------

    def dense(self) -> np.ndarray:
        if self._dense is None:
            if self.rows == 0:
                self._dense = np.zeros((0, self.cols), dtype=np.uint8)
            else:
                bits = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
                self._dense = np.ascontiguousarray(bits[:, : self.cols])
        return self._dense

    def bit(self, i: int, j: int) -> int:
        return int((self.words[i, j >> 6] >> _U64(j & 63)) & _U64(1))

    def row(self, i: int) -> "BitMatrix":
        return BitMatrix(1, self.cols, self.words[i : i + 1].copy())

    def take_rows(self, indices) -> "BitMatrix":
        idx = list(indices)
        return BitMatrix(len(idx), self.cols, self.words[idx].copy() if idx else np.zeros((0, _nwords(self.cols)), dtype=_U64))

    def key(self) -> bytes:
        return self.words.tobytes() + f"{self.rows}x{self.cols}".encode()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.words, other.words)
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.rows * self.cols <= 400:
            body = ",".join("".join(str(b) for b in r) for r in self.dense())
            return f"BitMatrix({self.rows}x{self.cols}:[{body}])"
        return f"BitMatrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return not self.words.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == BitMatrix.identity(self.rows)

    # -- arithmetic --------------------------------------------------------

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in XOR")
        return BitMatrix(self.rows, self.cols, self.words ^ other.words)

    __add__ = __xor__

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if self.cols >= (1 << 24):
            raise ValueError("inner dimension too large for exact float32 product")
        prod = self.dense().astype(np.float32) @ other.dense().astype(np.float32)
        return BitMatrix.from_dense(prod.astype(np.int64) & 1)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.dense().T)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def pow(self, n: int) -> "BitMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = BitMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> int:
        d = self.dense()
        return int(np.diagonal(d).sum() & 1)

    # -- elimination -------------------------------------------------------

    def echelonized(self, reduced: bool = True) -> tuple["BitMatrix", list[int]]:
        w = self.words.copy()
        piv = _echelonize(w, self.cols, reduced=reduced)
        return BitMatrix(self.rows, self.cols, w), piv

    def rank(self) -> int:
        w = self.words.copy()
        return len(_echelonize(w, self.cols, reduced=False))

    def right_kernel(self) -> "BitMatrix":
        """Basis (as rows) of {v : self @ v^T = 0}, in RREF order."""
        rref, piv = self.echelonized(reduced=True)
        pivset = set(piv)
        free = np.array([j for j in range(self.cols) if j not in pivset], dtype=np.int64)
        nfree = free.size
        if nfree == 0:
            return BitMatrix.zeros(0, self.cols)
        d = rref.dense()
        out = np.zeros((nfree, self.cols), dtype=np.uint8)
        out[np.arange(nfree), free] = 1
        if piv:
            out[:, np.array(piv, dtype=np.int64)] = d[: len(piv), :][:, free].T
        return BitMatrix.from_dense(out)

    def left_kernel(self) -> "BitMatrix":
        """Basis (as rows) of {u : u @ self = 0}."""
        return self.transpose().right_kernel()

    def row_space(self) -> "BitMatrix":
        """Echelonized basis of the row space (zero rows dropped)."""
        rref, piv = self.echelonized(reduced=True)
        return rref.take_rows(range(len(piv)))

    def solve(self, rhs: "BitMatrix") -> "BitMatrix | None":
        """Any X with self @ X = rhs, or None if inconsistent."""
        if rhs.rows != self.rows:
            raise ValueError("rhs row count mismatch")
        aug = hstack([self, rhs])
        rref, piv = aug.echelonized(reduced=True)
        if any(p >= self.cols for p in piv):
            return None
        x = BitMatrix.zeros(self.cols, rhs.cols)
        d = rref.dense()
        for r, p in enumerate(piv):
            x.words[p] = BitMatrix.from_dense(d[r : r + 1, self.cols :]).words[0]
        return x

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        d = self.dense()
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": ["".join(str(int(b)) for b in row) for row in d],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BitMatrix":
        rows, cols = int(obj["rows"]), int(obj["cols"])
        data = obj["data"]
        if len(data) != rows or any(len(s) != cols for s in data):
            raise ValueError("matrix JSON shape mismatch")
        if rows == 0:
            return cls.zeros(rows, cols)
        return cls.from_strings(data)


def _echelonize(w: np.ndarray, cols: int, reduced: bool = True) -> list[int]:
    """In-place row reduction of packed words; returns pivot columns."""
    nrows = w.shape[0]
    r = 0
    piv: list[int] = []
    for j in range(cols):
        if r == nrows:
            break
        wi, sh = j >> 6, _U64(j & 63)
        col = (w[r:, wi] >> sh) & _U64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            w[[r, p]] = w[[p, r]]
        if reduced:
            full = (w[:, wi] >> sh) & _U64(1)
            mask = full.astype(bool)
        else:
            mask = np.zeros(nrows, dtype=bool)
            mask[r + 1 + np.nonzero((w[r + 1 :, wi] >> sh) & _U64(1))[0]] = True
        mask[r] = False
        if mask.any():
            w[mask] ^= w[r]
        piv.append(j)
        r += 1
    return piv


def hstack(mats: list[BitMatrix]) -> BitMatrix:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("row count mismatch in hstack")
    return BitMatrix.from_dense(np.hstack([m.dense() for m in mats]))


def vstack(mats: list[BitMatrix]) -> BitMatrix:
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("column count mismatch in vstack")
    return BitMatrix(sum(m.rows for m in mats), cols, np.vstack([m.words for m in mats]))

def direct_sum(mats: list[BitMatrix]) -> BitMatrix:
    n = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    out = np.zeros((n, c), dtype=np.uint8)
    i = j = 0
    for m in mats:
        out[i : i + m.rows, j : j + m.cols] = m.dense()
        i += m.rows
        j += m.cols
    return BitMatrix.from_dense(out)


class Echelon:
    """Growable echelonized row collection over GF(2).

    Vectors may carry trailing bookkeeping bits; pivots are only taken in
    the first `pivot_cols` columns, so the tail records the combination
    of inserted vectors that produced each stored row.
    """

    def __init__(self, width: int, pivot_cols: int | None = None):
        self.width = width
        self.pivot_cols = width if pivot_cols is None else pivot_cols
        self.nw = _nwords(width)
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: np.ndarray) -> np.ndarray:
        vec = vec.copy()
        for row, p in zip(self.rows, self.pivots):
            if (vec[p >> 6] >> _U64(p & 63)) & _U64(1):
                vec ^= row
        return vec

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        return self._reduce(vec)

    def insert(self, vec: np.ndarray) -> np.ndarray | None:
        """Reduce and store; returns the residual if independent, else None."""
        vec = self._reduce(vec)
        pivot = None
        for j in range(self.pivot_cols):
            if (vec[j >> 6] >> _U64(j & 63)) & _U64(1):
                pivot = j
                break
        if pivot is None:
            return None
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < pivot:
            pos += 1
        self.rows.insert(pos, vec)
        self.pivots.insert(pos, pivot)
        return vec

    def contains(self, vec: np.ndarray) -> bool:
        red = self._reduce(vec)
        return not any(
            (red[j >> 6] >> _U64(j & 63)) & _U64(1) for j in range(self.pivot_cols)
        )

    def __len__(self):
        return len(self.rows)


# -- subspace utilities (subspaces = echelonized row bases) ----------------


def subspace_intersection(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Basis of row(a) & row(b) via the Zassenhaus block trick."""
    if a.cols != b.cols:
        raise ValueError("ambient dimension mismatch")
    n = a.cols
    top = hstack([a, a])
    bot = hstack([b, BitMatrix.zeros(b.rows, n)])
    block = vstack([top, bot])
    rref, piv = block.echelonized(reduced=True)
    d = rref.dense()
    out = []
    for r in range(len(piv)):
        if piv[r] >= n:
            out.append(d[r, n:])
        elif not d[r, :n].any():
            out.append(d[r, n:])
    rows = [v for v in out if v.any()]
    if not rows:
        return BitMatrix.zeros(0, n)
    return BitMatrix.from_dense(np.array(rows, dtype=np.uint8)).row_space()


def subspace_preimage(m: BitMatrix, target: BitMatrix) -> BitMatrix:
    """Basis of {x : x @ m lies in row(target)}."""
    ker_cols = target.right_kernel()  # rows d with target @ d^T = 0
    if ker_cols.rows == 0:
        return BitMatrix.identity(m.rows).row_space()
    test = m @ ker_cols.transpose()
    return test.left_kernel().row_space()


def subspace_image(m: BitMatrix, source: BitMatrix) -> BitMatrix:
    """Basis of row(source) @ m."""
    return (source @ m).row_space()


# -- spec-level operations --------------------------------------------------


def rank_kernel(m: BitMatrix) -> tuple[int, BitMatrix]:
    """Rank and a deterministic RREF basis of the right kernel."""
    ker = m.right_kernel()
    return m.cols - ker.rows, ker


def solve_linear(system: list[tuple[BitMatrix, BitMatrix]]) -> list[BitMatrix]:
    """Basis of {H : A @ H = H @ B for every (A, B) in the system}.

    H is m x n where the A's are m x m and the B's are n x n.  Unknowns
    are vectorised row-major; the returned basis is the deterministic
    RREF kernel basis reshaped into matrices.
    """
    if not system:
        raise ValueError("empty constraint system")
    m = system[0][0].rows
    n = system[0][1].rows
    for a, b in system:
        if a.rows != a.cols or b.rows != b.cols or a.rows != m or b.rows != n:
            raise ValueError("inconsistent shapes in constraint system")
    nw = _nwords(m * n)
    blocks = []
    for a, b in system:
        ad = a.dense()
        bd = b.dense()
        # constraint (i, j):  sum_k A[i,k] h_{k,j}  +  sum_l B[l,j] h_{i,l} = 0
        for i in range(m):
            block = np.zeros((n, m * n), dtype=np.uint8)
            cols = np.nonzero(ad[i])[0]
            for k in cols:
                block[np.arange(n), k * n + np.arange(n)] ^= 1
            block[:, i * n : (i + 1) * n] ^= bd.T
            blocks.append(BitMatrix.from_dense(block).words)
    big = BitMatrix(m * n * len(system), m * n, np.vstack(blocks))
    ker = big.right_kernel()
    out = []
    for r in range(ker.rows):
        flat = ker.dense()[r].reshape(m, n)
        out.append(BitMatrix.from_dense(flat))
    return out


def kronecker_product(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    ad, bd = a.dense(), b.dense()
    out = np.einsum("ij,kl->ikjl", ad, bd).reshape(a.rows * b.rows, a.cols * b.cols)
    return BitMatrix.from_dense(out)


# -- polynomials over GF(2), packed into Python ints ------------------------
# bit k of the int is the coefficient of t^k.


def p_deg(a: int) -> int:
    return a.bit_length() - 1


def p_mul(a: int, b: int) -> int:
    acc = 0
    while a:
        lsb = a & -a
        acc ^= b << (lsb.bit_length() - 1)
        a ^= lsb
    return acc


def p_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = p_deg(b)
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a

def p_mod(a: int, b: int) -> int:
    return p_divmod(a, b)[1]


def p_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, p_mod(a, b)
    return a


def p_powmod(a: int, e: int, mod: int) -> int:
    result = 1
    a = p_mod(a, mod)
    while e:
        if e & 1:
            result = p_mod(p_mul(result, a), mod)
        a = p_mod(p_mul(a, a), mod)
        e >>= 1
    return result


def p_deriv(a: int) -> int:
    out = 0
    j = 1
    a >>= 1
    while a:
        if (a & 1) and (j & 1):
            out |= 1 << (j - 1)
        a >>= 1
        j += 1
    return out


def p_sqrt(a: int) -> int:
    """Square root of a polynomial that is a square (even exponents only)."""
    out = 0
    k = 0
    while a:
        if a & 1:
            out |= 1 << (k >> 1)
        a >>= 1
        k += 1
    return out


def p_str(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    k = 0
    while a:
        if a & 1:
            terms.append("1" if k == 0 else ("t" if k == 1 else f"t^{k}"))
        a >>= 1
        k += 1
    return "+".join(terms)


def p_parse(s: str) -> int:
    s = s.strip()
    if s == "0":
        return 0
    out = 0
    for term in s.split("+"):
        term = term.strip()
        if term == "1":
            out ^= 1
        elif term == "t":
            out ^= 2
        elif term.startswith("t^"):
            out ^= 1 << int(term[2:])
        else:
            raise ValueError(f"bad polynomial term {term!r}")
    return out


def p_factor(f: int) -> dict[int, int]:
    """Factor a nonzero polynomial into {irreducible: multiplicity}."""
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    result: dict[int, int] = {}

    def add(p: int, m: int):
        if p != 1:
            result[p] = result.get(p, 0) + m

    def split_equal_degree(g: int, d: int, mult: int):
        # g = product of distinct irreducibles of degree d; split with the
        # char-2 trace map over a deterministic seed sequence
        if p_deg(g) == d:
            add(g, mult)
            return
        counter = 2
        while True:
            r = counter & ((1 << p_deg(g)) - 1)
            counter += 1
            if r in (0, 1):
                continue
            tr = 0
            x = p_mod(r, g)
            for _ in range(d):
                tr ^= x
                x = p_mod(p_mul(x, x), g)
            cand = p_gcd(tr, g)
            if cand not in (1, g):
                split_equal_degree(cand, d, mult)
                split_equal_degree(p_divmod(g, cand)[0], d, mult)
                return

    def factor_squarefree(g: int, mult: int):
        d = 1
        h = 2  # the polynomial t
        while g != 1 and d <= p_deg(g) // 2:
            h = p_powmod(h, 2, g)
            gd = p_gcd(h ^ 2, g)  # gcd(t^(2^d) - t, g)
            if gd != 1:
                split_equal_degree(gd, d, mult)
                g = p_divmod(g, gd)[0]
                if g != 1:
                    h = p_mod(h, g)
            d += 1
        if g != 1:
            add(g, mult)

    def rec(f: int, mult: int):
        if f == 1:
            return
        d = p_deriv(f)
        if d == 0:
            rec(p_sqrt(f), 2 * mult)
            return
        w = p_divmod(f, p_gcd(f, d))[0]  # product of odd-multiplicity irreducibles
        factor_squarefree(w, mult)
        rest = p_divmod(f, w)[0]  # perfect square
        if rest != 1:
            rec(p_sqrt(rest), 2 * mult)

    rec(f, 1)
    check = 1
    for p, m in result.items():
        for _ in range(m):
            check = p_mul(check, p)
    if check != f:
        raise ArithmeticError(f"factorization check failed for {p_str(f)}")
    return result


@dataclass(frozen=True)
class Poly2:
    """Polynomial over GF(2); bit k of `value` is the coefficient of t^k."""

    value: int

    @property
    def degree(self) -> int:
        return p_deg(self.value)

    def coeffs(self) -> list[int]:
        return [(self.value >> k) & 1 for k in range(self.value.bit_length())] or [0]

    def __str__(self):
        return p_str(self.value)

    def __mul__(self, other: "Poly2") -> "Poly2":
        return Poly2(p_mul(self.value, other.value))

    def evaluate_matrix(self, m: BitMatrix) -> BitMatrix:
        acc = BitMatrix.zeros(m.rows, m.cols)
        power = BitMatrix.identity(m.rows)
        v = self.value
        while v:
            if v & 1:
                acc = acc ^ power
            v >>= 1
            if v:
                power = power @ m
        return acc

    @classmethod
    def parse(cls, s: str) -> "Poly2":
        return cls(p_parse(s))


def _row_times(m: BitMatrix, vec: np.ndarray) -> np.ndarray:
    """Packed row vector times matrix: XOR of the rows of m selected by vec."""
    nw = m.words.shape[1]
    bits = np.unpackbits(vec[: _nwords(m.rows)].view(np.uint8), bitorder="little")[: m.rows]
    sel = np.nonzero(bits)[0]
    if sel.size == 0:
        return np.zeros(_nwords(m.cols), dtype=_U64)
    return np.bitwise_xor.reduce(m.words[sel], axis=0)[: _nwords(m.cols)]


def _mask_tail(vec: np.ndarray, bits: int) -> np.ndarray:
    """Zero out bit positions >= bits (packed words may alias trailing data)."""
    out = vec.copy()
    if bits & 63:
        out[-1] &= (_U64(1) << _U64(bits & 63)) - _U64(1)
    return out


def _krylov_minpoly(m: BitMatrix, start: np.ndarray, context: Echelon) -> tuple[int, list[np.ndarray]]:
    """Minimal polynomial of m on the Krylov chain of `start`, taken modulo
    the m-invariant subspace held in `context`.  Returns the dependency
    polynomial and the chain residuals that were added."""
    n = m.cols
    nw = _nwords(n)
    width = n + n + 2
    chain = Echelon(width, pivot_cols=n)  # vector | power-coefficient tail
    vec = _mask_tail(context.reduce(start)[:nw], n)
    added = []
    k = 0
    while True:
        aug = np.zeros(_nwords(width), dtype=_U64)
        aug[:nw] = vec
        pos = n + k
        aug[pos >> 6] ^= _U64(1) << _U64(pos & 63)
        res = chain.insert(aug)
        if res is None:
            red = chain.reduce(aug)
            poly = 0
            for j in range(n + 2):
                pos = n + j
                if (red[pos >> 6] >> _U64(pos & 63)) & _U64(1):
                    poly |= 1 << j
            return poly, added
        added.append(_mask_tail(res[:nw], n))
        # advance from the true (context-reduced) vector, never the residual
        vec = _mask_tail(context.reduce(_row_times(m, vec))[:nw], n)
        k += 1


def charpoly(m: BitMatrix) -> int:
    """Characteristic polynomial (packed int) via Krylov deflation."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    context = Echelon(n)
    out = 1
    for i in range(n):
        if len(context) == n:
            break
        e = np.zeros(_nwords(n), dtype=_U64)
        e[i >> 6] = _U64(1) << _U64(i & 63)
        if context.contains(e):
            continue
        poly, added = _krylov_minpoly(m, e, context)
        out = p_mul(out, poly)
        for v in added:
            context.insert(v)
    return out


def min_poly(m: BitMatrix) -> Poly2:
    """Monic least-degree polynomial annihilating the square matrix m."""
    if m.rows != m.cols:
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return Poly2(1)
    acc = 1
    for i in range(n):
        e = np.zeros(_nwords(n), dtype=_U64)
        e[i >> 6] = _U64(1) << _U64(i & 63)
        poly, _ = _krylov_minpoly(m, e, Echelon(n))
        acc = p_divmod(p_mul(acc, poly), p_gcd(acc, poly))[0]  # lcm
        if p_deg(acc) == n:
            break
        # the partial lcm divides the minimal polynomial, so annihilation
        # certifies equality and allows an early exit
        if i + 1 < n and Poly2(acc).evaluate_matrix(m).is_zero():
            break
    return Poly2(acc)
