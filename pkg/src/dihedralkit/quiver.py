"""Component walker for the stable Auslander-Reiten quiver.

Vertex (i, j) carries the module of the word w L^i R^j; moving to
(i+1, j+1) is one double Heller translate, so signatures grow by [2,2]
along the diagonal.  Each unit diamond is checked against the
restriction identity end + translate = left + right on the active
Klein subgroup; diamonds whose end vertex lies in the induced-from-V4
family are skipped (the almost-split sequence need not split there)
and reported as skipped rather than passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from dihedralkit.errors import NotSignatureEligible, OperatorUndefined, Unreachable
from dihedralkit.klein import (
    KleinDecomposition,
    Signature,
    klein_decompose,
    klein_heller,
    klein_trivial,
    signature_of,
)
from dihedralkit.reps import Rep, SubgroupId, direct_sum_reps, heller, induce, regular_module, restrict, string_module
from dihedralkit.words import Word, apply_L_power, apply_R_power, ar_neighbors, is_ab_inverse_word


@dataclass(frozen=True)
class Coordinate:
    i: int
    j: int

    def to_json(self):
        return [self.i, self.j]


def coordinate_word(w: Word, i: int, j: int, q: int) -> Word:
    return apply_R_power(apply_L_power(w, i, q), j, q)


def coordinate_module(w: Word, c: Coordinate, q: int) -> tuple[Rep, str]:
    """Module at a vertex, via word operators or (on the diagonal) the
    homological translate when an operator is undefined.

    Returns the module plus the path used ('word' or 'heller')."""
    try:
        return string_module(coordinate_word(w, c.i, c.j, q), q), "word"
    except OperatorUndefined as exc:
        if c.i == c.j:
            return heller(string_module(w, q), -2 * c.i), "heller"
        raise Unreachable(f"no path to vertex ({c.i},{c.j}): {exc}") from exc


def check_diamond(
    m_end: Rep,
    m_left: Rep,
    m_right: Rep,
    m_translate: Rep,
    subgroup: SubgroupId = SubgroupId.KLEIN_Y,
    projective_middles: int = 0,
) -> bool:
    """Restriction identity for one almost-split diamond.

    True iff end + translate and left + right restrict to the same
    multiset of Klein summands; `projective_middles` adds that many
    copies of the free module to the middle side.
    """
    side_a = klein_decompose(restrict(direct_sum_reps([m_end, m_translate]), subgroup))
    middle = [m_left, m_right] + [regular_module(m_end.q)] * projective_middles
    side_b = klein_decompose(restrict(direct_sum_reps(middle), subgroup))
    return side_a == side_b


def vertex_y_family_member(m: Rep, subgroup: SubgroupId) -> bool:
    """True iff m is an induced Heller translate of the trivial module of
    the given Klein subgroup (the modules whose almost-split sequence may
    fail to split on restriction)."""
    from dihedralkit.isodec import is_isomorphic

    q = m.q
    if m.dim % q:
        return False
    half = m.dim // q
    if half % 2 == 0:
        return False
    k = (half - 1) // 2
    for power in {k, -k}:
        cand = induce(klein_heller(klein_trivial(), power), subgroup, q)
        try:
            if is_isomorphic(cand, m):
                return True
        except Exception:
            continue
    return False


@dataclass
class VertexEntry:
    coord: Coordinate
    word: Word | None
    status: str  # 'ok' | 'unavailable'
    via: str | None = None
    signature: Signature | None = None
    reason: str | None = None
    sheet: str | None = None  # 'seed' | 'reflected'

    def to_json(self):
        out = {"coord": self.coord.to_json(), "status": self.status}
        if self.word is not None:
            out["word"] = self.word.tokens()
        if self.via:
            out["via"] = self.via
        if self.signature is not None:
            out["signature"] = self.signature.to_json()
        if self.reason:
            out["reason"] = self.reason
        if self.sheet:
            out["sheet"] = self.sheet
        return out


@dataclass
class DiamondEntry:
    end: Coordinate
    status: str  # 'ok' | 'fail' | 'skipped'
    projective_middle: bool = False
    reason: str | None = None

    def to_json(self):
        out = {"end": self.end.to_json(), "status": self.status}
        if self.projective_middle:
            out["projective_middle"] = True
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class SweepReport:
    seed_word: Word
    q: int
    radius: int
    active: SubgroupId
    vertex_y_component: bool
    entries: dict[tuple[int, int], VertexEntry] = field(default_factory=dict)
    diamonds: list[DiamondEntry] = field(default_factory=list)
    pattern: str | None = None  # 'i' | 'ii' | 'iii' | None
    zero_signature_count: int = 0
    seed_sheet_zero_count: int = 0

    def signature_at(self, i: int, j: int) -> Signature | None:
        e = self.entries.get((i, j))
        return e.signature if e else None

    def all_diamonds_ok(self) -> bool:
        return all(d.status in ("ok", "skipped") for d in self.diamonds)

    def seed_sheet_entries(self) -> list[VertexEntry]:
        return [e for e in self.entries.values() if e.sheet == "seed"]

    def to_json(self):
        return {
            "seed_word": self.seed_word.tokens(),
            "q": self.q,
            "radius": self.radius,
            "active": self.active.value,
            "vertex_y_component": self.vertex_y_component,
            "vertices": [e.to_json() for _, e in sorted(self.entries.items())],
            "diamonds": [d.to_json() for d in self.diamonds],
            "pattern": self.pattern,
            "zero_signature_count": self.zero_signature_count,
            "seed_sheet_zero_count": self.seed_sheet_zero_count,
        }


def _classify_pattern(report: SweepReport, base: Signature) -> str | None:
    """Match the seed-sheet signatures against the three candidate patterns.

    Vertices on the reflected sheet (opposite signature parity: the word
    operators cross the induced-module locus into the companion family)
    are excluded; their grid follows the companion pattern instead.
    """
    r0, s0 = base.entries
    matches = {"i": True, "ii": True, "iii": True}
    for (i, j), entry in report.entries.items():
        if entry.signature is None or entry.sheet != "seed":
            continue
        sig = entry.signature
        pat_i = sig in (Signature.of(r0 + 2 * i, s0 + 2 * j), Signature.of(r0 + 2 * j, s0 + 2 * i))
        pat_ii = sig == Signature.of(r0 + 2 * i, s0 + 2 * i)
        pat_iii = sig == Signature.of(r0 + 2 * j, s0 + 2 * j)
        matches["i"] = matches["i"] and pat_i
        matches["ii"] = matches["ii"] and pat_ii
        matches["iii"] = matches["iii"] and pat_iii
    # diagonal vertices satisfy all three; prefer the unique off-diagonal fit
    for name in ("i", "ii", "iii"):
        if matches[name]:
            others = [o for o in matches if o != name and matches[o]]
            if not others or name == "i":
                return name
    return None


def sweep_component(w: Word, radius: int, q: int, seed: int = 0) -> SweepReport:
    """Signatures, diamond verdicts, and pattern class around M(w).

    Diamonds are eligible unless their end vertex lies in the family of
    modules induced from the active Klein subgroup (the almost-split
    sequence need not split on restriction there); skipped diamonds are
    reported, never silently passed.
    """
    base_module = string_module(w, q)
    base_sig, active = signature_of(base_module)
    base_parity = base_sig.entries[0] & 1
    reps: dict[tuple[int, int], Rep] = {}
    report = SweepReport(w, q, radius, active, vertex_y_component=False)
    for i in range(-radius, radius + 1):
        for j in range(-radius, radius + 1):
            coord = Coordinate(i, j)
            try:
                word = coordinate_word(w, i, j, q)
                mod, via = string_module(word, q), "word"
            except OperatorUndefined:
                word = None
                try:
                    mod, via = coordinate_module(w, coord, q)
                except Unreachable as exc:
                    report.entries[(i, j)] = VertexEntry(coord, None, "unavailable", reason=str(exc))
                    continue
            entry = VertexEntry(coord, word, "ok", via=via)
            try:
                entry.signature, _ = signature_of(mod)
                entry.sheet = "seed" if (entry.signature.entries[0] & 1) == base_parity else "reflected"
            except NotSignatureEligible as exc:
                entry.status = "unavailable"
                entry.reason = f"signature: {exc}"
            reps[(i, j)] = mod
            report.entries[(i, j)] = entry

    induced_ends: dict[tuple[int, int], bool] = {}

    def end_is_induced(ij: tuple[int, int]) -> bool:
        if ij not in induced_ends:
            induced_ends[ij] = vertex_y_family_member(reps[ij], active)
        return induced_ends[ij]

    for i in range(-radius, radius):
        for j in range(-radius, radius):
            corners = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)]
            if any(c not in reps for c in corners):
                continue
            end = Coordinate(i, j)
            if end_is_induced((i, j)):
                report.diamonds.append(
                    DiamondEntry(end, "skipped", reason="end vertex lies in the induced family")
                )
                continue
            end_word = report.entries[(i, j)].word
            proj = end_word is not None and is_ab_inverse_word(end_word, q)
            ok = check_diamond(
                reps[(i, j)],
                reps[(i + 1, j)],
                reps[(i, j + 1)],
                reps[(i + 1, j + 1)],
                subgroup=active,
                projective_middles=1 if proj else 0,
            )
            report.diamonds.append(DiamondEntry(end, "ok" if ok else "fail", projective_middle=proj))

    report.vertex_y_component = any(induced_ends.values())
    report.pattern = _classify_pattern(report, base_sig)
    zero = Signature.of(0, 0)
    report.zero_signature_count = sum(1 for e in report.entries.values() if e.signature == zero)
    report.seed_sheet_zero_count = sum(1 for e in report.seed_sheet_entries() if e.signature == zero)
    return report


def sweep_to_dot(report: SweepReport) -> str:
    """DOT rendering: one node per vertex, arrows along the two directions."""
    lines = ["digraph ar_component {", '  rankdir="LR";']
    for (i, j), e in sorted(report.entries.items()):
        sig = str(e.signature) if e.signature else "?"
        label = f"({i},{j}) {sig}"
        lines.append(f'  "v{i}_{j}" [label="{label}"];')
    for (i, j) in sorted(report.entries.keys()):
        for (di, dj) in ((1, 0), (0, 1)):
            src = (i + di, j + dj)
            if src in report.entries:
                lines.append(f'  "v{src[0]}_{src[1]}" -> "v{i}_{j}";')
    lines.append("}")
    return "\n".join(lines)
