"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the report carries a witness), 2 for usage or resource errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import repchar
from .clifford import (
    DimensionGuard,
    QuadSpace,
    radical_filtration,
    random_phi,
    splitting_report,
    verify_even_structure,
)
from .complexes import KINDS, build_sequence, check_k_exact
from .lefschetz import K0_LABEL, NoIntegralSolution, build_collection, k_decompose, space_for, verify_exceptional
from .spaces import BundleError, Space, cohomology, ext

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CACHE_ENV = "BBWLAB_CACHE_DIR"
CACHE_FILE = "characters.json"
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _param(family: str, args) -> int:
    if family in ("gr", "quadric"):
        if args.n is None:
            raise UsageError(f"--n is required for {family}")
        return args.n
    if args.m is None:
        raise UsageError(f"--m is required for {family}")
    return args.m


def _space(args) -> Space:
    fam = args.family
    try:
        return space_for(fam, _param(fam, args))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse(sp: Space, text: str):
    try:
        return sp.parse(text)
    except BundleError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from exc


def _twists(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        if ":" in text:
            a, b = text.split(":")
            return list(range(int(a), int(b) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad twist range {text!r}; use a:b or a,b,c") from exc


def _space_json(sp: Space) -> dict:
    return {"name": str(sp), "family": sp.family, "n": sp.n, "k": sp.k, "dimension": sp.dimension}


# subcommands


def cmd_verify(args) -> tuple[bool, dict, str]:
    sp = _space(args)
    try:
        coll = build_collection(args.family, _param(args.family, args))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = verify_exceptional(sp, coll, args.mode, jobs=args.jobs)
    data = rep.to_json()
    data["partition"] = list(coll.partition)
    lines = [f"{sp}: {len(coll.objects)} objects, partition {list(coll.partition)}, mode {args.mode}"]
    lines.append("  " + ", ".join(str(o) for o in coll.objects))
    if rep.passed:
        lines.append("exceptional: pass")
    else:
        v = rep.first_violation
        lines.append(f"exceptional: FAIL, Ext^{v.degree}(E_{v.j}, E_{v.i}) has dim {v.dim}")
    return rep.passed, data, "\n".join(lines)


def cmd_ext(args) -> tuple[bool, dict, str]:
    sp = _space(args)
    e, f = _parse(sp, args.source), _parse(sp, args.target)
    try:
        table = ext(sp, e, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = {"space": _space_json(sp), "from": str(e), "to": str(f), "ext": table.to_json()}
    return True, data, str(table)


def cmd_cohomology(args) -> tuple[bool, dict, str]:
    sp = _space(args)
    b = _parse(sp, args.bundle)
    try:
        table = cohomology(sp, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = {"space": _space_json(sp), "bundle": str(b), "cohomology": table.to_json()}
    return True, data, str(table)


def cmd_complex_check(args) -> tuple[bool, dict, str]:
    sp = _space(args)
    params = {}
    if args.kind == "bicomplex":
        params["m"] = sp.m
    else:
        if args.k is None:
            raise UsageError(f"--k is required for {args.kind}")
        params["k"] = args.k
    try:
        cx = build_sequence(sp, args.kind, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cert = check_k_exact(sp, cx, twists=_twists(args.twists))
    data = {"space": _space_json(sp), "terms": [str(t) for t in cx.terms], "ranks": cx.ranks, "certificate": cert.to_json()}
    text = f"{cx}\nranks {cx.ranks}, alternating sum {cert.rank_sum}\n"
    if cert.passed:
        text += f"K-exact: pass ({cert.checks} probe pairings)"
    else:
        text += f"K-exact: FAIL, witness {cert.failure}"
    return cert.passed, data, text


def cmd_clifford_check(args) -> tuple[bool, dict, str]:
    try:
        qs = QuadSpace(args.n)
        even = verify_even_structure(qs, seed=args.seed)
    except (ValueError, DimensionGuard) as exc:
        raise UsageError(str(exc)) from exc
    ks = [args.k] if args.k is not None else list(range(1, qs.m + 1))
    if any(not 0 <= k <= qs.m for k in ks):
        raise UsageError(f"need 0 <= k <= {qs.m}")
    rng = random.Random(args.seed)
    filtrations, splittings = [], []
    ok = even.passed
    for k in ks:
        for eps in ((1,) if qs.odd else (1, -1)):
            f = radical_filtration(qs, k, eps)
            filtrations.append(f.to_json())
            ok = ok and f.passed
        good = 0
        for _ in range(args.samples):
            rep = splitting_report(qs, k, random_phi(qs, k, rng))
            good += rep.independent
        splittings.append({"k": k, "samples": args.samples, "independent": good})
        ok = ok and good == args.samples
    data = {"n": qs.n, "seed": args.seed, "even_structure": even.to_json(), "filtrations": filtrations, "splittings": splittings}
    lines = [f"n={qs.n}: even part dim {even.dim_even}, blocks {even.target_dims}, isomorphism {'pass' if even.passed else 'FAIL'}"]
    for f in filtrations:
        lines.append(f"  filtration k={f['k']} eps={f['eps']}: quotients {f['quotient_dims']} {'pass' if f['passed'] else 'FAIL'}")
    for s in splittings:
        lines.append(f"  splitting k={s['k']}: {s['independent']}/{s['samples']} independent")
    return ok, data, "\n".join(lines)


def cmd_k_decompose(args) -> tuple[bool, dict, str]:
    sp = _space(args)
    try:
        coll = build_collection(args.family, _param(args.family, args))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    target = _parse(sp, args.target)
    try:
        dec = k_decompose(sp, coll, target)
    except NoIntegralSolution as exc:
        data = {"space": _space_json(sp), "target": str(target), "certificate": K0_LABEL, "error": str(exc)}
        return False, data, f"no integral decomposition: {exc}"
    data = {"space": _space_json(sp), "target": str(target), **dec.to_json()}
    terms = " + ".join(f"{c}*[{lab}]" for lab, c in dec.nonzero().items()) or "0"
    return True, data, f"[{target}] = {terms}\n({K0_LABEL})"


def cmd_report_all(args) -> tuple[bool, dict, str]:
    from .acceptance import CRITERIA

    only = None
    if args.only:
        try:
            only = sorted({int(x) for x in args.only.split(",")})
        except ValueError as exc:
            raise UsageError(f"bad criterion list {args.only!r}") from exc
        if any(i not in CRITERIA for i in only):
            raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    results = [CRITERIA[i]() for i in (only or sorted(CRITERIA))]
    data = {"criteria": [r.to_json() for r in results]}
    return all(r.passed for r in results), data, "\n".join(r.line() for r in results)


# plumbing


def _add_space_args(p: argparse.ArgumentParser, families=("gr", "sgr", "ogr", "quadric"), flag="--family") -> None:
    p.add_argument(flag, dest="family", required=True, choices=families)
    p.add_argument("--n", type=int, help="n for gr (Gr(2,n)) and quadric (Q in P^{n-1})")
    p.add_argument("--m", type=int, help="m for sgr (SGr(2,2m)) and ogr (OGr(2,2m+1))")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bbwlab", description="Borel-Bott-Weil verification engine")
    parser.add_argument("--json", dest="json_path", help="write a JSON report to this path")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", dest="json_path", default=argparse.SUPPRESS)
        p.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = sub.add_parser("verify", help="check a Lefschetz collection is exceptional")
    _add_space_args(p)
    p.add_argument("--mode", choices=("full", "reduced"), default="full")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ext", help="Ext groups between two bundles")
    _add_space_args(p, flag="--space")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    common(p)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("cohomology", help="cohomology of a bundle")
    _add_space_args(p, flag="--space")
    p.add_argument("--bundle", required=True)
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("complex-check", help="K-exactness certificate for a named complex")
    _add_space_args(p, flag="--space")
    p.add_argument("--kind", required=True, choices=[k for k in KINDS if k in ("skus", "sku", "crucial", "bicomplex")])
    p.add_argument("--k", type=int)
    p.add_argument("--twists", help="a:b (inclusive) or a comma list")
    common(p)
    p.set_defaults(func=cmd_complex_check)

    p = sub.add_parser("clifford-check", help="Clifford and spinor structure checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--samples", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_clifford_check)

    p = sub.add_parser("k-decompose", help="express a class in the collection's K0 basis")
    _add_space_args(p, families=("gr", "sgr", "ogr", "quadric"))
    p.add_argument("--target", required=True)
    common(p)
    p.set_defaults(func=cmd_k_decompose)

    p = sub.add_parser("report-all", help="run the acceptance suite")
    p.add_argument("--only", help="comma list of criterion numbers")
    common(p)
    p.set_defaults(func=cmd_report_all)
    return parser


def _cache_path() -> Optional[Path]:
    d = os.environ.get(CACHE_ENV)
    return Path(d) / CACHE_FILE if d else None


def dumps_report(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    cache = _cache_path()
    if cache is not None and cache.exists():
        try:
            repchar.load_cache(cache)
        except (ValueError, OSError) as exc:
            print(f"warning: ignoring character cache {cache}: {exc}", file=sys.stderr)
    try:
        passed, data, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (repchar.RankLimitExceeded, DimensionGuard, MemoryError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    report = {"doubled": True, "command": args.command, "passed": passed, "result": data}
    if args.json_path:
        Path(args.json_path).write_text(dumps_report(report))
    if cache is not None:
        try:
            cache.parent.mkdir(parents=True, exist_ok=True)
            repchar.save_cache(cache)
        except OSError as exc:
            print(f"warning: could not save character cache: {exc}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
