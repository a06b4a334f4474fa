"""Named verification suites: one registered check per classification or
restriction statement, each a pure function of (name, q, bounds, seed).

Every failing case carries a reproduction payload; a suite passes iff
its failure list is empty.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from dihedralkit.errors import IsoUndecided, NotSignatureEligible, OperatorUndefined, UnknownSuite
from dihedralkit.gf2 import BitMatrix
from dihedralkit.isodec import fitting_decompose, hom_space, identify_summand, is_isomorphic
from dihedralkit.klein import (
    Signature,
    klein_decompose,
    klein_heller,
    klein_radical_socle,
    klein_syzygy,
    klein_trivial,
    omega_module,
    signature_of,
)
from dihedralkit.closure import Budget, tensor_closure_probe, verify_closure
from dihedralkit.quiver import sweep_component
from dihedralkit.reps import (
    KleinRep,
    Rep,
    SubgroupId,
    band_module,
    c2_profile,
    direct_sum_reps,
    dual,
    dual_klein,
    heller,
    induce,
    regular_module,
    restrict,
    string_module,
    tensor,
)
from dihedralkit.words import Word, canonical_words_of_length, omega2_word, words_of_length, words_up_to_length


@dataclass
class SuiteReport:
    suite: str
    q: int
    bounds: dict
    seed: int
    cases: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self):
        return {
            "suite": self.suite,
            "q": self.q,
            "bounds": self.bounds,
            "seed": self.seed,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
        }


def _run_cases(name, q, bounds, seed, cases, jobs: int = 1) -> SuiteReport:
    """Run (case_id, thunk) pairs; thunks return None (pass) or a payload."""
    report = SuiteReport(name, q, dict(bounds), seed, len(cases))
    results = []
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [(cid, pool.submit(fn)) for cid, fn in cases]
            results = [(cid, f.result()) for cid, f in futures]
    else:
        results = [(cid, fn()) for cid, fn in cases]
    for cid, payload in sorted(results, key=lambda t: str(t[0])):
        if payload is not None:
            report.failures.append({"case": cid, **payload})
    return report


# -- individual suites --------------------------------------------------------


def _suite_omega2(q, bounds, seed, jobs):
    max_len = bounds.get("max_len", 7)
    cases = []
    for ell in range(0, max_len + 1):
        for w in canonical_words_of_length(ell, q):

            def check(w=w):
                try:
                    target = omega2_word(w, q)
                except OperatorUndefined:
                    return None  # skipped: operator undefined on boundary words
                lhs = string_module(target, q)
                rhs = heller(string_module(w, q), -2)
                try:
                    if is_isomorphic(lhs, rhs, seed=seed):
                        return None
                except IsoUndecided:
                    return {"word": w.tokens(), "error": "iso undecided"}
                return {"word": w.tokens(), "lhs_dim": lhs.dim, "rhs_dim": rhs.dim}

            cases.append((w.text() or "(empty)", check))
    return _run_cases("omega2", q, {"max_len": max_len}, seed, cases, jobs)


def _default_band_samples(q: int) -> list[tuple[Word, BitMatrix]]:
    j2 = BitMatrix.from_rows([[1, 1], [0, 1]])
    c_tt1 = BitMatrix.from_rows([[0, 1], [1, 1]])  # companion of 1+t+t^2
    c_t21 = BitMatrix.from_rows([[0, 1], [1, 0]])  # companion of 1+t^2
    c3 = BitMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 1, 1]])
    one = BitMatrix.identity(1)
    i3 = BitMatrix.identity(3)
    ab = Word.parse("a b-")
    abab = Word.parse("a b a b-")
    abib = Word.parse("a b- a b")
    long6 = Word.parse("a b- a b a- b")
    return [
        (ab, one),
        (ab, j2),
        (ab, c_tt1),
        (ab, c_t21),
        (ab, c3),
        (ab, i3),
        (abab, one),
        (abab, c_tt1),
        (abib, j2),
        (long6, one),
    ]


def _suite_restrictions(q, bounds, seed, jobs):
    max_len = bounds.get("max_len", 8)
    band_count = bounds.get("bands", 10)
    cases = []
    for w in words_up_to_length(max_len, q):

        def check(w=w):
            m = string_module(w, q)
            px, py = c2_profile(m.alpha), c2_profile(m.beta)
            n = m.dim
            if n % 2 == 1:
                expected = (1, (n - 1) // 2)
                if px != expected or py != expected:
                    return {"word": w.tokens(), "profiles": [px, py], "expected": expected}
                return None
            if w.starts_a_type():
                ok = px == (0, n // 2) and py == (2, (n - 2) // 2)
            else:
                ok = py == (0, n // 2) and px == (2, (n - 2) // 2)
            return None if ok else {"word": w.tokens(), "profiles": [px, py]}

        cases.append((w.text() or "(empty)", check))
    for idx, (cw, phi) in enumerate(_default_band_samples(q)[:band_count]):

        def check_band(cw=cw, phi=phi):
            m = band_module(cw, phi, q)
            px, py = c2_profile(m.alpha), c2_profile(m.beta)
            ok = px == (0, m.dim // 2) and py == (0, m.dim // 2)
            return None if ok else {"band": cw.tokens(), "phi": phi.to_json(), "profiles": [px, py]}

        cases.append((f"band{idx}", check_band))
    return _run_cases("restrictions", q, {"max_len": max_len, "bands": band_count}, seed, cases, jobs)


_TENSOR_CACHE: dict = {}


def _tensor_decomposition(w1: Word, w2: Word, q: int, seed: int):
    key = (q, w1.canonical().letters, w2.canonical().letters, seed)
    key2 = (q, w2.canonical().letters, w1.canonical().letters, seed)
    if key in _TENSOR_CACHE:
        return _TENSOR_CACHE[key]
    if key2 in _TENSOR_CACHE:
        return _TENSOR_CACHE[key2]
    report = fitting_decompose(tensor(string_module(w1, q), string_module(w2, q)), seed=seed)
    _TENSOR_CACHE[key] = report
    return report


def _is_even_string_pattern(rep: Rep) -> bool:
    if rep.dim % 2:
        return False
    tx, _ = c2_profile(rep.alpha)
    ty, _ = c2_profile(rep.beta)
    return (tx, ty) != (0, 0)


def _odd_canonical_words(max_len: int, q: int) -> list[Word]:
    out = []
    for ell in range(1, max_len + 1, 2):
        out.extend(canonical_words_of_length(ell, q))
    return out


def _suite_evenstring(q, bounds, seed, jobs):
    max_len = bounds.get("max_len", 5)
    words = _odd_canonical_words(max_len, q)
    cases = []
    for a in range(len(words)):
        for b in range(a, len(words)):
            w1, w2 = words[a], words[b]

            def check(w1=w1, w2=w2):
                report = _tensor_decomposition(w1, w2, q, seed)
                count = report.count(lambda s: _is_even_string_pattern(s.rep))
                same_type = w1.starts_a_type() == w2.starts_a_type()
                expected = 2 if same_type else 0
                if count != expected:
                    return {
                        "words": [w1.tokens(), w2.tokens()],
                        "string_summands": count,
                        "expected": expected,
                        "decomposition": str(report),
                    }
                return None

            cases.append((f"{w1.text()} (x) {w2.text()}", check))
    return _run_cases("evenstring", q, {"max_len": max_len}, seed, cases, jobs)


def _suite_bensoncarlson(q, bounds, seed, jobs):
    max_len = bounds.get("max_len", 5)
    words = _odd_canonical_words(max_len, q)
    cases = []
    for a in range(len(words)):
        for b in range(a, len(words)):
            w1, w2 = words[a], words[b]

            def check(w1=w1, w2=w2):
                m1 = string_module(w1, q)
                m2 = string_module(w2, q)
                report = _tensor_decomposition(w1, w2, q, seed)
                k_count = report.count(lambda s: s.rep.dim == 1)
                odd_pair = m1.dim % 2 == 1 and m2.dim % 2 == 1
                expect_k = 1 if (odd_pair and is_isomorphic(m1, dual(m2), seed=seed)) else 0
                if k_count != expect_k:
                    return {"words": [w1.tokens(), w2.tokens()], "k_count": k_count, "expected": expect_k}
                if not odd_pair:
                    bad = report.count(lambda s: s.rep.dim % 2 == 1)
                    if bad:
                        return {"words": [w1.tokens(), w2.tokens()], "odd_summands": bad}
                return None

            cases.append((f"{w1.text()} (x) {w2.text()}", check))
    return _run_cases("bensoncarlson", q, {"max_len": max_len}, seed, cases, jobs)


def _suite_fixpoints(q, bounds, seed, jobs):
    max_n = bounds.get("max_n", 8)
    cases = []
    for n in range(0, max_n + 1):

        def check(n=n):
            m = klein_heller(klein_trivial(), n)  # cokernel-side translates
            _, socle = klein_radical_socle(m)
            ident = BitMatrix.identity(m.dim)
            fix1 = (m.g1 ^ ident).left_kernel().rows
            fix2 = (m.g2 ^ ident).left_kernel().rows
            ok = socle.rows == fix1 == fix2 == n + 1
            return None if ok else {"n": n, "socle": socle.rows, "fix_g1": fix1, "fix_g2": fix2}

        cases.append((f"omega^-{n}", check))
    return _run_cases("fixpoints", q, {"max_n": max_n}, seed, cases, jobs)


def _suite_signaturezero(q, bounds, seed, jobs):
    max_len = bounds.get("max_len", 9)
    cases = []
    for ell in range(1, max_len + 1, 2):
        for w in words_of_length(ell, q):

            def check(w=w):
                m = string_module(w, q)
                dec_x = klein_decompose(restrict(m, SubgroupId.KLEIN_X))
                dec_y = klein_decompose(restrict(m, SubgroupId.KLEIN_Y))
                if not dec_x.omega_indices() and not dec_y.omega_indices():
                    return None  # periodic string: the statement is vacuous
                try:
                    sig, active = signature_of(m)
                except NotSignatureEligible as exc:
                    return {"word": w.tokens(), "error": str(exc)}
                i, j = sig.entries
                first, last = w.letters[0], w.letters[-1]
                sym = "a" if active is SubgroupId.KLEIN_Y else "b"
                stated = (first.symbol == sym and first.inverse) or (last.symbol == sym and not last.inverse)
                dual_form = (first.symbol == sym and not first.inverse) or (last.symbol == sym and last.inverse)
                if stated and i <= 0 and j <= 0 and not (i == 0 or j == 0):
                    return {"word": w.tokens(), "signature": sig.to_json(), "form": "stated"}
                if dual_form and i >= 0 and j >= 0 and not (i == 0 or j == 0):
                    return {"word": w.tokens(), "signature": sig.to_json(), "form": "dual"}
                return None

            cases.append((w.text(), check))
    return _run_cases("signaturezero", q, {"max_len": max_len}, seed, cases, jobs)


def _sweep_seeds(q, bounds, seed):
    words = bounds.get("seed_words", ["a", "a b- a"])
    return [Word.parse(w) if isinstance(w, str) else w for w in words]


_SWEEP_CACHE: dict = {}


def _sweep(w: Word, radius: int, q: int, seed: int):
    key = (w.letters, radius, q, seed)
    if key not in _SWEEP_CACHE:
        _SWEEP_CACHE[key] = sweep_component(w, radius, q, seed=seed)
    return _SWEEP_CACHE[key]


def _suite_trichotomy(q, bounds, seed, jobs):
    radius = bounds.get("radius", 2)
    seeds = _sweep_seeds(q, bounds, seed)
    cases = []
    for w in seeds:

        def check(w=w):
            report = _sweep(w, radius, q, seed)
            base = report.signature_at(0, 0)
            problems = {}
            if report.pattern != "i":
                problems["pattern"] = report.pattern
            if report.zero_signature_count != (1 if base == Signature.of(0, 0) else 0):
                problems["zero_count"] = report.zero_signature_count
            if not report.all_diamonds_ok():
                problems["diamonds"] = [d.to_json() for d in report.diamonds if d.status == "fail"]
            for i in range(-radius, radius + 1):
                sig = report.signature_at(i, i)
                expected = base.shifted(2 * i, 2 * i) if base else None
                if sig != expected:
                    problems.setdefault("diagonal", []).append({"i": i, "sig": sig.to_json() if sig else None})
            if problems:
                return {"seed_word": w.tokens(), **problems}
            return None

        cases.append((w.text(), check))
    return _run_cases("trichotomy", q, {"radius": radius, "seed_words": [w.text() for w in seeds]}, seed, cases, jobs)


def _suite_uniqueness(q, bounds, seed, jobs):
    radius = bounds.get("radius", 2)
    seeds = _sweep_seeds(q, bounds, seed)
    cases = []
    for w in seeds:

        def check(w=w):
            report = _sweep(w, radius, q, seed)
            base = report.signature_at(0, 0)
            expected = 1 if base == Signature.of(0, 0) else 0
            if report.zero_signature_count != expected:
                return {"seed_word": w.tokens(), "zero_count": report.zero_signature_count, "expected": expected}
            return None

        cases.append((w.text(), check))
    return _run_cases("uniqueness", q, {"radius": radius, "seed_words": [w.text() for w in seeds]}, seed, cases, jobs)


def _suite_diamond(q, bounds, seed, jobs):
    radius = bounds.get("radius", 2)
    seeds = _sweep_seeds(q, bounds, seed)
    cases = []
    for w in seeds:

        def check(w=w):
            report = _sweep(w, radius, q, seed)
            fails = [d.to_json() for d in report.diamonds if d.status == "fail"]
            checked = sum(1 for d in report.diamonds if d.status == "ok")
            if fails:
                return {"seed_word": w.tokens(), "failures": fails}
            if checked == 0:
                return {"seed_word": w.tokens(), "error": "no eligible diamonds checked"}
            return None

        cases.append((w.text(), check))
    return _run_cases("diamond", q, {"radius": radius, "seed_words": [w.text() for w in seeds]}, seed, cases, jobs)


def _omega_ky_seed_word(q: int, seed: int) -> Word:
    """Word of the induced first Heller translate, found by identification."""
    m = induce(klein_heller(klein_trivial(), -1), SubgroupId.KLEIN_Y, q)
    tag = identify_summand(m, seed=seed)
    if tag.kind != "string" or tag.word is None:
        raise IsoUndecided("could not identify the induced translate as a string module")
    return tag.word


def _suite_vertexy(q, bounds, seed, jobs):
    radius = bounds.get("radius", 2)

    def check():
        w = _omega_ky_seed_word(q, seed)
        report = _sweep(w, radius, q, seed)
        problems = {}
        entries = report.seed_sheet_entries()
        if not entries:
            problems["error"] = "empty seed sheet"
        if any(e.signature.entries[0] % 2 == 0 or e.signature.entries[1] % 2 == 0 for e in entries):
            problems["even_signature"] = [e.to_json() for e in entries if e.signature.entries[0] % 2 == 0]
        if report.seed_sheet_zero_count != 0:
            problems["zero_count"] = report.seed_sheet_zero_count
        if not report.all_diamonds_ok():
            problems["diamonds"] = [d.to_json() for d in report.diamonds if d.status == "fail"]
        if problems:
            return {"seed_word": w.tokens(), **problems}
        return None

    return _run_cases("vertexy", q, {"radius": radius}, seed, [("omega_ky_sweep", check)], jobs)


def _suite_dualitystep(q, bounds, seed, jobs):
    seeds = _sweep_seeds(q, bounds, seed)
    cases = []
    for w in seeds:

        def check(w=w):
            from dihedralkit.quiver import coordinate_word

            try:
                up = string_module(coordinate_word(w, 0, 1, q), q)
                down = string_module(coordinate_word(w, 0, -1, q), q)
                left = string_module(coordinate_word(w, 1, 0, q), q)
                right = string_module(coordinate_word(w, -1, 0, q), q)
            except OperatorUndefined as exc:
                return {"seed_word": w.tokens(), "error": str(exc)}
            # duals of the middle terms of the sequence ending at the seed
            # are the middle terms of the sequence starting from it
            pool = [down, right]
            for m in (dual(up), dual(left)):
                hit = None
                for idx, cand in enumerate(pool):
                    if is_isomorphic(m, cand, seed=seed):
                        hit = idx
                        break
                if hit is None:
                    return {"seed_word": w.tokens(), "error": "dual of a middle term not found"}
                pool.pop(hit)
            return None

        cases.append((w.text(), check))
    return _run_cases("dualitystep", q, {"seed_words": [w.text() for w in seeds]}, seed, cases, jobs)


def _suite_algebraic(q, bounds, seed, jobs):
    budget = Budget(
        bounds.get("max_dim", 256),
        bounds.get("max_classes", 64),
        bounds.get("max_rounds", 8),
    )
    min_rounds = bounds.get("min_growth_rounds", 3)

    def check_trivial():
        from dihedralkit.reps import trivial_module

        result = tensor_closure_probe(trivial_module(q), budget, seed=seed)
        if result.verdict != "closed" or len(result.classes) != 1:
            return {"probe": "K", "verdict": result.verdict, "classes": len(result.classes)}
        return None

    def check_ky():
        ky = induce(klein_trivial(), SubgroupId.KLEIN_Y, q)
        result = tensor_closure_probe(ky, budget, seed=seed)
        if result.verdict != "closed":
            return {"probe": "KY_induced", "verdict": result.verdict, "reason": result.reason}
        if len(result.classes) > 8:
            return {"probe": "KY_induced", "classes": len(result.classes)}
        if not verify_closure(result, ky, seed=seed):
            return {"probe": "KY_induced", "error": "closure verification failed"}
        return None

    def check_omega_ky():
        oky = induce(klein_heller(klein_trivial(), -1), SubgroupId.KLEIN_Y, q)
        result = tensor_closure_probe(oky, budget, seed=seed)
        if result.verdict != "budget_exceeded":
            return {"probe": "Omega_KY_induced", "verdict": result.verdict}
        mags = result.signature_magnitudes()
        growing = [b - a for a, b in zip(mags, mags[1:])]
        if len(mags) < min_rounds or any(d <= 0 for d in growing):
            return {"probe": "Omega_KY_induced", "magnitudes": mags}
        return None

    cases = [("K", check_trivial), ("KY_induced", check_ky), ("Omega_KY_induced", check_omega_ky)]
    return _run_cases("algebraic", q, {**budget.to_json(), "min_growth_rounds": min_rounds}, seed, cases, jobs)


def _random_klein_module(rng, max_dim: int):
    """Random direct sum of known indecomposables, conjugated."""
    import numpy as np

    from dihedralkit.gf2 import p_str
    from dihedralkit.klein import FREE, KleinDecomposition, KleinSummand, omega_summand
    from dihedralkit.reps import KleinRep

    parts = []
    counts: dict = {}
    total = 0
    pool = [
        omega_summand(0),
        omega_summand(1),
        omega_summand(-1),
        omega_summand(2),
        omega_summand(-2),
        FREE,
        KleinSummand("periodic", invariant=2, power=1),  # t
        KleinSummand("periodic", invariant=3, power=1),  # 1+t
        KleinSummand("periodic", invariant=3, power=2),
        KleinSummand("periodic", invariant=7, power=1),  # 1+t+t^2
        KleinSummand("periodic_inf", power=1),
        KleinSummand("periodic_inf", power=2),
    ]
    while True:
        s = pool[int(rng.integers(0, len(pool)))]
        if total + s.dim() > max_dim:
            break
        parts.append(s)
        counts[s] = counts.get(s, 0) + 1
        total += s.dim()
        if total >= max_dim or (parts and rng.random() < 0.2):
            break
    if not parts:
        parts = [omega_summand(0)]
        counts = {omega_summand(0): 1}
    mats1, mats2 = [], []
    for s in parts:
        m = _summand_module(s)
        mats1.append(m.g1)
        mats2.append(m.g2)
    from dihedralkit.gf2 import direct_sum

    g1 = direct_sum(mats1)
    g2 = direct_sum(mats2)
    n = g1.rows
    while True:
        p = BitMatrix.random(n, n, rng)
        if p.rank() == n:
            break
    pinv = _matrix_inverse(p)
    conj1 = p @ g1 @ pinv
    conj2 = p @ g2 @ pinv
    return KleinRep(conj1, conj2), KleinDecomposition.from_counts(counts)


def _matrix_inverse(p: BitMatrix) -> BitMatrix:
    x = p.solve(BitMatrix.identity(p.rows))
    if x is None:
        raise ArithmeticError("matrix is singular")
    return x


def _summand_module(s) -> KleinRep:
    from dihedralkit.gf2 import p_deg
    from dihedralkit.klein import omega_module
    from dihedralkit.reps import KleinRep

    if s.kind == "omega":
        return omega_module(s.n)
    if s.kind == "free":
        from dihedralkit.klein import kv4_regular

        return kv4_regular()
    import numpy as np

    if s.kind == "periodic":
        size = p_deg(s.invariant) * s.power
        poly = 1
        from dihedralkit.gf2 import p_mul

        for _ in range(s.power):
            poly = p_mul(poly, s.invariant)
        comp = _companion(poly, size)
        c = BitMatrix.identity(size)
        d = comp
    else:  # periodic_inf
        size = s.power
        c = _jordan_zero(size)
        d = BitMatrix.identity(size)
    zero = BitMatrix.zeros(size, size)
    import numpy as np

    top = np.hstack([BitMatrix.identity(size).dense(), c.dense()])
    bot = np.hstack([zero.dense(), BitMatrix.identity(size).dense()])
    g1 = BitMatrix.from_dense(np.vstack([top, bot]))
    top2 = np.hstack([BitMatrix.identity(size).dense(), d.dense()])
    g2 = BitMatrix.from_dense(np.vstack([top2, bot]))
    return KleinRep(g1, g2)


def _companion(poly: int, size: int) -> BitMatrix:
    import numpy as np

    m = np.zeros((size, size), dtype=np.uint8)
    for i in range(size - 1):
        m[i, i + 1] = 1
    for k in range(size):
        m[size - 1, k] = (poly >> k) & 1
    return BitMatrix.from_dense(m)


def _jordan_zero(size: int) -> BitMatrix:
    import numpy as np

    m = np.zeros((size, size), dtype=np.uint8)
    for i in range(size - 1):
        m[i, i + 1] = 1
    return BitMatrix.from_dense(m)


def _suite_kleinself(q, bounds, seed, jobs):
    import numpy as np

    count = bounds.get("random_count", 10000)
    max_dim = bounds.get("max_dim", 12)
    shift_len = bounds.get("shift_maxlen", 7)
    cases = []

    def check_orientation():
        from dihedralkit.klein import klein_decompose, omega_summand

        for n in range(-2, 3):
            m = omega_module(n)
            dec = klein_decompose(m)
            if dec.counts() != {omega_summand(n): 1}:
                return {"n": n, "decomposition": str(dec)}
            rad, soc = klein_radical_socle(m)
            top = m.dim - rad.rows
            expect = (n + 1, n) if n >= 1 else (abs(n), abs(n) + 1) if n <= -1 else (1, 1)
            if (top, soc.rows) != expect:
                return {"n": n, "top_soc": [top, soc.rows], "expected": list(expect)}
        return None

    cases.append(("orientation", check_orientation))

    def check_random():
        from dihedralkit.klein import klein_decompose

        rng = np.random.default_rng(seed)
        for trial in range(count):
            m, expected = _random_klein_module(rng, max_dim)
            dec = klein_decompose(m)
            if dec.dim() != m.dim:
                return {"trial": trial, "error": "dimension ledger", "got": dec.dim(), "dim": m.dim}
            if dec != expected:
                return {"trial": trial, "got": str(dec), "expected": str(expected)}
        return None

    cases.append(("random_ledger", check_random))

    def check_duality_shift():
        from dihedralkit.klein import klein_decompose

        for ell in range(0, shift_len + 1):
            for w in canonical_words_of_length(ell, q):
                m = string_module(w, q)
                for sub in (SubgroupId.KLEIN_X, SubgroupId.KLEIN_Y):
                    k = restrict(m, sub)
                    dec = klein_decompose(k)
                    if klein_decompose(dual_klein(k)) != dec.negate_omega():
                        return {"word": w.tokens(), "restriction": sub.value, "error": "duality"}
                    shifted = klein_decompose(klein_syzygy(k))
                    if shifted.drop_free() != dec.shift_omega(1).drop_free():
                        return {
                            "word": w.tokens(),
                            "restriction": sub.value,
                            "error": "omega shift",
                            "got": str(shifted),
                            "expected": str(dec.shift_omega(1)),
                        }
        return None

    cases.append(("duality_shift", check_duality_shift))
    return _run_cases(
        "kleinself", q, {"random_count": count, "max_dim": max_dim, "shift_maxlen": shift_len}, seed, cases, jobs
    )


SUITES = {
    "omega2": _suite_omega2,
    "restrictions": _suite_restrictions,
    "evenstring": _suite_evenstring,
    "bensoncarlson": _suite_bensoncarlson,
    "fixpoints": _suite_fixpoints,
    "signaturezero": _suite_signaturezero,
    "trichotomy": _suite_trichotomy,
    "uniqueness": _suite_uniqueness,
    "diamond": _suite_diamond,
    "vertexy": _suite_vertexy,
    "dualitystep": _suite_dualitystep,
    "algebraic": _suite_algebraic,
    "kleinself": _suite_kleinself,
}


def run_suite(name: str, q: int, bounds: dict | None = None, seed: int = 0, jobs: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    return SUITES[name](q, bounds or {}, seed, jobs)
