"""Tensor-power closure probe: the operational meaning of algebraicity.

Rounds tensor the seed against every class discovered in the previous
round and register new isomorphism classes of indecomposable summands.
A round that adds nothing closes the set (a proof, up to iso-test
confidence); running out of budget yields evidence only - the verdict
then carries the growth trace and never claims non-algebraicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from dihedralkit.errors import CertificationFailed, IsoUndecided, NotSignatureEligible
from dihedralkit.isodec import DecompositionReport, IdTag, fitting_decompose, identify_summand, is_isomorphic
from dihedralkit.klein import Signature, signature_of
from dihedralkit.reps import Rep, tensor


@dataclass(frozen=True)
class Budget:
    max_dim: int = 256
    max_classes: int = 64
    max_rounds: int = 8

    def to_json(self):
        return {"max_dim": self.max_dim, "max_classes": self.max_classes, "max_rounds": self.max_rounds}


@dataclass
class ClassEntry:
    rep: Rep
    tag: IdTag
    signature: Signature | None
    found_round: int

    def to_json(self):
        out = {"dim": self.rep.dim, "tag": self.tag.to_json(), "round": self.found_round}
        if self.signature is not None:
            out["signature"] = self.signature.to_json()
        return out


@dataclass
class ProbeResult:
    verdict: str  # 'closed' | 'budget_exceeded' | 'inconclusive'
    classes: list[ClassEntry]
    trace: list[dict]
    budget: Budget
    seed: int
    rounds_run: int
    reason: str | None = None

    def signature_magnitudes(self) -> list[int]:
        """Per-round maximum |signature entry| over newly found classes."""
        out = []
        for entry in self.trace:
            mags = entry.get("new_signature_magnitudes", [])
            if mags:
                out.append(max(mags))
        return out

    def to_json(self):
        return {
            "verdict": self.verdict,
            "classes": [c.to_json() for c in self.classes],
            "trace": self.trace,
            "budget": self.budget.to_json(),
            "seed": self.seed,
            "rounds_run": self.rounds_run,
            "reason": self.reason,
        }


def _signature_or_none(rep: Rep) -> Signature | None:
    try:
        return signature_of(rep)[0]
    except NotSignatureEligible:
        return None


def tensor_closure_probe(seed_rep: Rep, budget: Budget | None = None, seed: int = 0) -> ProbeResult:
    """Iteratively tensor the seed against known classes and decompose."""
    if budget is None:
        budget = Budget()
    classes: list[ClassEntry] = []
    trace: list[dict] = []

    def register(report: DecompositionReport, round_no: int) -> tuple[list[ClassEntry], bool]:
        fresh = []
        certified_ok = True
        for summand in report.summands:
            certified_ok = certified_ok and summand.certified
            known = False
            for entry in classes:
                try:
                    if is_isomorphic(entry.rep, summand.rep, seed=seed):
                        known = True
                        break
                except IsoUndecided:
                    continue
            if not known:
                entry = ClassEntry(summand.rep, summand.tag, _signature_or_none(summand.rep), round_no)
                classes.append(entry)
                fresh.append(entry)
        return fresh, certified_ok

    base = fitting_decompose(seed_rep, seed=seed)
    fresh, cert_ok = register(base, 0)
    trace.append(
        {
            "round": 0,
            "tensored": [],
            "new_classes": len(fresh),
            "new_dims": [c.rep.dim for c in fresh],
            "new_signature_magnitudes": _mags(fresh),
        }
    )
    if not cert_ok:
        return ProbeResult("inconclusive", classes, trace, budget, seed, 0, "uncertified summand in seed decomposition")

    frontier = list(fresh)
    rounds = 0
    while frontier:
        if rounds >= budget.max_rounds:
            return ProbeResult("budget_exceeded", classes, trace, budget, seed, rounds, "round budget exhausted")
        rounds += 1
        new_frontier: list[ClassEntry] = []
        tensored = []
        for entry in frontier:
            product_dim = seed_rep.dim * entry.rep.dim
            if product_dim > budget.max_dim:
                return ProbeResult(
                    "budget_exceeded",
                    classes,
                    trace + [{"round": rounds, "tensored": tensored, "blocked_dim": product_dim}],
                    budget,
                    seed,
                    rounds,
                    f"tensor product of dimension {product_dim} exceeds max_dim",
                )
            tensored.append(entry.rep.dim)
            product = tensor(seed_rep, entry.rep)
            try:
                report = fitting_decompose(product, seed=seed)
            except CertificationFailed as exc:
                return ProbeResult("inconclusive", classes, trace, budget, seed, rounds, str(exc))
            fresh, cert_ok = register(report, rounds)
            if not cert_ok:
                return ProbeResult("inconclusive", classes, trace, budget, seed, rounds, "uncertified summand")
            new_frontier.extend(fresh)
            if len(classes) > budget.max_classes:
                return ProbeResult("budget_exceeded", classes, trace, budget, seed, rounds, "class budget exhausted")
        trace.append(
            {
                "round": rounds,
                "tensored": tensored,
                "new_classes": len(new_frontier),
                "new_dims": [c.rep.dim for c in new_frontier],
                "new_signature_magnitudes": _mags(new_frontier),
            }
        )
        frontier = new_frontier
    return ProbeResult("closed", classes, trace, budget, seed, rounds)


def _mags(entries: list[ClassEntry]) -> list[int]:
    out = []
    for c in entries:
        if c.signature is not None:
            out.append(max(abs(c.signature.entries[0]), abs(c.signature.entries[1])))
    return out


def verify_closure(result: ProbeResult, seed_rep: Rep, seed: int = 0) -> bool:
    """Final pass for a closed set: every pairwise tensor decomposes into
    registered classes."""
    if result.verdict != "closed":
        return False
    reps = [c.rep for c in result.classes]
    for a in reps:
        for b in reps:
            report = fitting_decompose(tensor(a, b), seed=seed)
            for summand in report.summands:
                if not any(is_isomorphic(summand.rep, r, seed=seed) for r in reps):
                    return False
    return True
