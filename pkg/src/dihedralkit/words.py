"""Alternating words in a, b and their inverses, with the L_q/R_q operators.

A word indexes a string module; letters alternate between a-type and
b-type.  Validity for the dihedral group of order 4q forbids the four
runs (ab)^q, (ba)^q, (a-b-)^q, (b-a-)^q.  L_q edits the start of a word
and R_q the end, each by removing a fixed segment when present and
otherwise adding the unique segment that stays valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from dihedralkit.errors import InvalidWord, OperatorUndefined


class Letter(NamedTuple):
    symbol: str  # 'a' or 'b'
    inverse: bool

    def inv(self) -> "Letter":
        return Letter(self.symbol, not self.inverse)

    def __str__(self):
        return self.symbol + ("-" if self.inverse else "")


A = Letter("a", False)
AI = Letter("a", True)
B = Letter("b", False)
BI = Letter("b", True)

_TOKENS = {"a": A, "a-": AI, "b": B, "b-": BI}


@dataclass(frozen=True)
class Word:
    """Immutable alternating word; empty words are allowed."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        for prev, cur in zip(self.letters, self.letters[1:]):
            if prev.symbol == cur.symbol:
                raise InvalidWord(f"letters {prev}{cur} do not alternate")

    @classmethod
    def parse(cls, text: str | list[str]) -> "Word":
        tokens = text.split() if isinstance(text, str) else list(text)
        letters = []
        for tok in tokens:
            if tok not in _TOKENS:
                raise InvalidWord(f"unknown letter token {tok!r}")
            letters.append(_TOKENS[tok])
        return cls(tuple(letters))

    def text(self) -> str:
        return " ".join(str(c) for c in self.letters)

    def tokens(self) -> list[str]:
        return [str(c) for c in self.letters]

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return self.text() if self.letters else "(empty)"

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(c.inv() for c in reversed(self.letters)))

    def flip(self) -> "Word":
        """Letterwise inversion without reversal (dual module's word)."""
        return Word(tuple(c.inv() for c in self.letters))

    def canonical(self) -> "Word":
        """Lexicographic minimum of the word and its inverse."""
        inv = self.inverse()
        return self if self.letters <= inv.letters else inv

    def starts_a_type(self) -> bool:
        if not self.letters:
            raise InvalidWord("empty word has no starting type")
        return self.letters[0].symbol == "a"


def parse_word(text: str | list[str]) -> Word:
    return Word.parse(text)


def check_q(q: int) -> int:
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of 2 with q >= 2, got {q}")
    return q


def _run(first: Letter, length: int) -> tuple[Letter, ...]:
    """Alternating run of the given length starting at `first`, same inverse flag."""
    out = []
    cur = first
    for _ in range(length):
        out.append(cur)
        cur = Letter("b" if cur.symbol == "a" else "a", cur.inverse)
    return tuple(out)


def forbidden_runs(q: int) -> list[tuple[Letter, ...]]:
    """The four excluded runs of length 2q."""
    return [_run(A, 2 * q), _run(B, 2 * q), _run(AI, 2 * q), _run(BI, 2 * q)]


def validate_word(w: Word, q: int) -> bool:
    """True iff w avoids all four forbidden length-2q runs."""
    check_q(q)
    n = 2 * q
    if len(w) < n:
        return True
    runs = forbidden_runs(q)
    for i in range(len(w) - n + 1):
        window = w.letters[i : i + n]
        if window in runs:
            return False
    return True


def require_valid(w: Word, q: int) -> Word:
    if not validate_word(w, q):
        raise InvalidWord(f"word {w} contains a forbidden run for q={q}")
    return w


def invert_word(w: Word) -> Word:
    return w.inverse()


def word_A(q: int) -> Word:
    """The segment (ab)^(q-1) a."""
    return Word(_run(A, 2 * q - 1))


def word_B(q: int) -> Word:
    """The segment (ba)^(q-1) b."""
    return Word(_run(B, 2 * q - 1))


def _try_word(letters: tuple[Letter, ...], q: int) -> Word | None:
    """Build and validate, returning None when alternation or validity fails."""
    try:
        w = Word(letters)
    except InvalidWord:
        return None
    return w if validate_word(w, q) else None


def _edit(w: Word, q: int, removals: list[Word], additions: list[Word], at_start: bool) -> Word:
    for seg in removals:
        k = len(seg)
        if len(w) >= k:
            piece = w.letters[:k] if at_start else w.letters[-k:]
            if piece == seg.letters:
                rest = w.letters[k:] if at_start else w.letters[:-k]
                return Word(rest)
    candidates = []
    for seg in additions:
        glued = seg.letters + w.letters if at_start else w.letters + seg.letters
        cand = _try_word(glued, q)
        if cand is not None:
            candidates.append(cand)
    if len(candidates) == 1:
        return candidates[0]
    if not candidates:
        raise OperatorUndefined(f"no removal applies to {w} and neither addition stays valid")
    raise OperatorUndefined(f"both additions to {w} stay valid; the choice is ambiguous")


def apply_L(w: Word, q: int) -> Word:
    """Remove a leading A b- / B a-, else prepend A- b or B- a (unique valid)."""
    check_q(q)
    require_valid(w, q)
    a_seg, b_seg = word_A(q), word_B(q)
    removals = [a_seg.concat(Word((BI,))), b_seg.concat(Word((AI,)))]
    additions = [a_seg.inverse().concat(Word((B,))), b_seg.inverse().concat(Word((A,)))]
    return _edit(w, q, removals, additions, at_start=True)


def apply_R(w: Word, q: int) -> Word:
    """Remove a trailing a B- / b A-, else append a- B or b- A (unique valid)."""
    check_q(q)
    require_valid(w, q)
    a_seg, b_seg = word_A(q), word_B(q)
    removals = [Word((A,)).concat(b_seg.inverse()), Word((B,)).concat(a_seg.inverse())]
    additions = [Word((AI,)).concat(b_seg), Word((BI,)).concat(a_seg)]
    return _edit(w, q, removals, additions, at_start=False)


def apply_L_inverse(w: Word, q: int) -> Word:
    """Undo L_q: remove a leading A- b / B- a, else prepend A b- or B a-."""
    check_q(q)
    require_valid(w, q)
    a_seg, b_seg = word_A(q), word_B(q)
    removals = [a_seg.inverse().concat(Word((B,))), b_seg.inverse().concat(Word((A,)))]
    additions = [a_seg.concat(Word((BI,))), b_seg.concat(Word((AI,)))]
    return _edit(w, q, removals, additions, at_start=True)


def apply_R_inverse(w: Word, q: int) -> Word:
    """Undo R_q: remove a trailing a- B / b- A, else append a B- or b A-."""
    check_q(q)
    require_valid(w, q)
    a_seg, b_seg = word_A(q), word_B(q)
    removals = [Word((AI,)).concat(b_seg), Word((BI,)).concat(a_seg)]
    additions = [Word((A,)).concat(b_seg.inverse()), Word((B,)).concat(a_seg.inverse())]
    return _edit(w, q, removals, additions, at_start=False)


def apply_L_power(w: Word, k: int, q: int) -> Word:
    step = apply_L if k >= 0 else apply_L_inverse
    for _ in range(abs(k)):
        w = step(w, q)
    return w


def apply_R_power(w: Word, k: int, q: int) -> Word:
    step = apply_R if k >= 0 else apply_R_inverse
    for _ in range(abs(k)):
        w = step(w, q)
    return w


def omega2_word(w: Word, q: int) -> Word:
    """One step of the double Heller translate at the word level: w L_q R_q."""
    return apply_R(apply_L(w, q), q)


def is_ab_inverse_word(w: Word, q: int) -> bool:
    """True iff w equals A B^{-1} up to inversion."""
    target = word_A(q).concat(word_B(q).inverse())
    return w.letters in (target.letters, target.inverse().letters)


class ARNeighbors(NamedTuple):
    left: Word
    right: Word
    translate: Word
    has_projective_middle: bool


def ar_neighbors(w: Word, q: int) -> ARNeighbors:
    """Words in the almost-split sequence ending at M(w).

    The sequence is 0 -> M(wLR) -> M(wL) + M(wR) [+ KG] -> M(w) -> 0,
    with the extra free middle exactly when w = A B^{-1} up to inversion.
    """
    left = apply_L(w, q)
    right = apply_R(w, q)
    translate = apply_R(left, q)
    return ARNeighbors(left, right, translate, is_ab_inverse_word(w, q))


def iter_words_of_length(length: int, q: int):
    """Lazily yield all valid words of exactly the given length."""
    check_q(q)
    if length == 0:
        yield Word(())
        return
    runs = set(forbidden_runs(q))
    n = 2 * q
    stack = [[s] for s in (BI, B, AI, A)]
    while stack:
        prefix = stack.pop()
        if len(prefix) >= n and tuple(prefix[-n:]) in runs:
            continue
        if len(prefix) == length:
            yield Word(tuple(prefix))
            continue
        other = "b" if prefix[-1].symbol == "a" else "a"
        for inv in (True, False):
            stack.append(prefix + [Letter(other, inv)])


def words_of_length(length: int, q: int) -> list[Word]:
    """All valid words of exactly the given length, in deterministic order."""
    return list(iter_words_of_length(length, q))


def words_up_to_length(max_length: int, q: int, min_length: int = 0) -> list[Word]:
    out = []
    for ell in range(min_length, max_length + 1):
        out.extend(words_of_length(ell, q))
    return out


def canonical_words_of_length(length: int, q: int) -> list[Word]:
    """One representative per {w, w^-1} class, deterministic order."""
    seen = set()
    out = []
    for w in words_of_length(length, q):
        c = w.canonical()
        if c.letters not in seen:
            seen.add(c.letters)
            out.append(c)
    return out
