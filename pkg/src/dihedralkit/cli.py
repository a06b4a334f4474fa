"""Command-line interface: one verb per toolkit concept.

Exit codes: 0 success, 1 verification failure, 2 usage error.
JSON output mirrors the library schemas; --format dot is available for
quiver sweeps.  DIHEDRAL_SEED overrides --seed when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from dihedralkit.closure import Budget, tensor_closure_probe
from dihedralkit.errors import ToolkitError
from dihedralkit.gf2 import BitMatrix
from dihedralkit.isodec import fitting_decompose
from dihedralkit.klein import klein_heller, klein_trivial, signature_of
from dihedralkit.quiver import sweep_component, sweep_to_dot
from dihedralkit.reps import (
    KleinRep,
    Rep,
    SubgroupId,
    band_module,
    dual,
    heller,
    induce,
    regular_module,
    restrict,
    string_module,
    tensor,
)
from dihedralkit.suites import run_suite
from dihedralkit.words import Word, apply_L, apply_R, invert_word, omega2_word, validate_word

SUBGROUPS = {s.value: s for s in SubgroupId}


def _emit(args, payload, dot: str | None = None) -> None:
    if args.format == "dot":
        if dot is None:
            raise ToolkitError("dot output is only available for quiver sweeps")
        text = dot
    elif args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _word(args) -> Word:
    raw = args.word
    if raw.strip().startswith("["):
        return Word.parse(json.loads(raw))
    return Word.parse(raw)


def _load_rep(path: str) -> Rep:
    with open(path) as fh:
        return Rep.from_json(json.load(fh))


def _load_klein(path: str) -> KleinRep:
    with open(path) as fh:
        return KleinRep.from_json(json.load(fh))


def _cmd_word(args) -> int:
    w = _word(args)
    if args.word_op == "validate":
        ok = validate_word(w, args.q)
        _emit(args, {"word": w.tokens(), "q": args.q, "valid": ok})
        return 0 if ok else 1
    if args.word_op == "invert":
        _emit(args, invert_word(w).text())
        return 0
    if args.word_op == "lq":
        _emit(args, apply_L(w, args.q).text())
        return 0
    if args.word_op == "rq":
        _emit(args, apply_R(w, args.q).text())
        return 0
    if args.word_op == "omega2":
        _emit(args, omega2_word(w, args.q).text())
        return 0
    raise ToolkitError(f"unknown word operation {args.word_op}")


def _cmd_module(args) -> int:
    q = args.q
    if args.module_op == "build-string":
        rep = string_module(_word(args), q)
    elif args.module_op == "build-band":
        phi = BitMatrix.from_json(json.loads(args.phi)) if args.phi else BitMatrix.identity(1)
        rep = band_module(_word(args), phi, q)
    elif args.module_op == "regular":
        rep = regular_module(q)
    elif args.module_op == "induce":
        source = _load_klein(args.rep) if args.rep else klein_heller(klein_trivial(), args.omega_k)
        rep = induce(source, SUBGROUPS[args.subgroup], q)
    elif args.module_op == "dual":
        rep = dual(_load_rep(args.rep))
    elif args.module_op == "tensor":
        rep = tensor(_load_rep(args.rep), _load_rep(args.rep2))
    elif args.module_op == "omega":
        rep = heller(_load_rep(args.rep), args.power)
    elif args.module_op == "restrict":
        base = _load_rep(args.rep)
        sub = SUBGROUPS[args.subgroup]
        out = restrict(base, sub)
        if isinstance(out, BitMatrix):
            _emit(args, {"subgroup": args.subgroup, "generator": out.to_json()})
        else:
            _emit(args, {"subgroup": args.subgroup, **out.to_json()})
        return 0
    else:
        raise ToolkitError(f"unknown module operation {args.module_op}")
    _emit(args, rep.to_json())
    return 0


def _cmd_decompose(args) -> int:
    rep = _load_rep(args.rep)
    report = fitting_decompose(rep, seed=args.seed)
    _emit(args, report.to_json())
    return 0


def _cmd_signature(args) -> int:
    rep = _load_rep(args.rep)
    sig, active = signature_of(rep)
    _emit(args, {"signature": sig.to_json(), "active": active.value})
    return 0


def _cmd_quiver(args) -> int:
    report = sweep_component(_word(args), args.radius, args.q, seed=args.seed)
    _emit(args, report.to_json(), dot=sweep_to_dot(report))
    return 0


def _cmd_algebraic(args) -> int:
    q = args.q
    if args.rep:
        seed_rep = _load_rep(args.rep)
    elif args.seed_spec == "k":
        from dihedralkit.reps import trivial_module

        seed_rep = trivial_module(q)
    elif args.seed_spec == "ky-induced":
        seed_rep = induce(klein_trivial(), SubgroupId.KLEIN_Y, q)
    elif args.seed_spec == "omega-ky-induced":
        seed_rep = induce(klein_heller(klein_trivial(), -1), SubgroupId.KLEIN_Y, q)
    else:
        raise ToolkitError("provide --rep FILE or --seed-spec")
    budget = Budget(args.max_dim, args.max_classes, args.max_rounds)
    result = tensor_closure_probe(seed_rep, budget, seed=args.seed)
    _emit(args, result.to_json())
    return 0


def _cmd_verify(args) -> int:
    bounds = {}
    if args.max_len is not None:
        bounds["max_len"] = args.max_len
    if args.radius is not None:
        bounds["radius"] = args.radius
    if args.seed_word:
        bounds["seed_words"] = args.seed_word
    if args.random_count is not None:
        bounds["random_count"] = args.random_count
    report = run_suite(args.suite, args.q, bounds, seed=args.seed, jobs=args.jobs)
    _emit(args, report.to_json())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dihedralkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, default=2, help="group parameter (power of 2, >= 2)")
        p.add_argument("--seed", type=int, default=None, help="seed for all randomized searches")
        p.add_argument("--format", choices=["json", "text", "dot"], default="text")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers inside suites")

    p_word = sub.add_parser("word", help="word calculus")
    p_word.add_argument("word_op", choices=["validate", "invert", "lq", "rq", "omega2"])
    p_word.add_argument("--word", required=True, help='letters like "a b- a b a-"')
    common(p_word)
    p_word.set_defaults(func=_cmd_word)

    p_mod = sub.add_parser("module", help="module constructions")
    p_mod.add_argument(
        "module_op",
        choices=["build-string", "build-band", "regular", "induce", "restrict", "dual", "tensor", "omega"],
    )
    p_mod.add_argument("--word", help="word for build-string / cyclic word for build-band")
    p_mod.add_argument("--phi", help="twist matrix JSON for build-band")
    p_mod.add_argument("--rep", help="module JSON file input")
    p_mod.add_argument("--rep2", help="second module JSON file (tensor)")
    p_mod.add_argument("--subgroup", choices=sorted(SUBGROUPS), help="subgroup for restrict/induce")
    p_mod.add_argument("--omega-k", type=int, default=0, help="Heller power of the trivial source before induction")
    p_mod.add_argument("--power", type=int, default=-1, help="Heller power for module omega")
    common(p_mod)
    p_mod.set_defaults(func=_cmd_module)

    p_dec = sub.add_parser("decompose", help="Krull-Schmidt decomposition")
    p_dec.add_argument("--rep", required=True)
    common(p_dec)
    p_dec.set_defaults(func=_cmd_decompose)

    p_sig = sub.add_parser("signature", help="signature of an even string module")
    p_sig.add_argument("--rep", required=True)
    common(p_sig)
    p_sig.set_defaults(func=_cmd_signature)

    p_q = sub.add_parser("quiver", help="AR-component sweeps")
    p_q.add_argument("quiver_op", choices=["sweep"])
    p_q.add_argument("--word", required=True, help="seed word")
    p_q.add_argument("--radius", type=int, default=2)
    common(p_q)
    p_q.set_defaults(func=_cmd_quiver)

    p_alg = sub.add_parser("algebraic", help="tensor-closure probe")
    p_alg.add_argument("algebraic_op", choices=["probe"])
    p_alg.add_argument("--rep")
    p_alg.add_argument("--seed-spec", choices=["k", "ky-induced", "omega-ky-induced"])
    p_alg.add_argument("--max-dim", type=int, default=256)
    p_alg.add_argument("--max-classes", type=int, default=64)
    p_alg.add_argument("--max-rounds", type=int, default=8)
    common(p_alg)
    p_alg.set_defaults(func=_cmd_algebraic)

    p_ver = sub.add_parser("verify", help="run a named verification suite")
    p_ver.add_argument("--suite", required=True)
    p_ver.add_argument("--max-len", type=int)
    p_ver.add_argument("--radius", type=int)
    p_ver.add_argument("--seed-word", action="append", help="sweep seed word (repeatable)")
    p_ver.add_argument("--random-count", type=int)
    common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = int(os.environ.get("DIHEDRAL_SEED", "0"))
    try:
        return args.func(args)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
