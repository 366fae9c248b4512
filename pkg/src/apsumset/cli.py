"""Command-line interface: JSON-lines results with a reproducibility manifest.

Every subcommand writes one JSON object per result line to stdout, sorted
keys, fixed separators, so identical invocations produce byte-identical
result streams regardless of ``--threads``.  Integer fields that can
exceed 64 bits (term values, N, D, limits) are serialized as decimal
strings; exponents and counts stay plain ints.  A manifest recording the
command, the full parameter set including defaults, the artifact version,
wall-clock duration and a digest of the result bytes goes to stderr, or to
``--manifest FILE``.

Exit codes: 0 success / all-pass, 1 verification mismatch, 2 usage error,
3 search-budget refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .apsearch import count_3term_stable, find_progressions
from .catalog import check_ids, run_all, run_check
from .classify import SweepConfig, theorem1_match, verify_theorem1
from .families import (
    FAMILY_IDS,
    FamilyConstraintError,
    FamilySpec,
    family_params,
    find_prog3_pairs,
    generate,
    verify,
)
from .sumset import SumsetParams, enumerate_up_to, representations
from .sunit import (
    DEWEGER_PRIMES,
    SearchBudgetExceeded,
    bajpai_bennett_5term,
    deweger_3term,
    deze_tijdeman_4term,
    solve_pattern,
    triple_ord_profile,
)
from .catalog import SIDE_PREDICATES, _build_pattern

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _s(n: int) -> str:
    """Decimal-string form for integers that may exceed 64 bits."""
    return str(n)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Output:
    """Collects result lines so the manifest can digest the exact bytes."""

    def __init__(self) -> None:
        self.lines: list[str] = []

    def emit(self, obj) -> None:
        self.lines.append(_dump(obj))

    def flush(self) -> bytes:
        blob = "".join(line + "\n" for line in self.lines).encode()
        sys.stdout.write(blob.decode())
        sys.stdout.flush()
        return blob


def _progression_obj(a: int, b: int, prog, maximal: bool | None = None):
    obj = {
        "a": a,
        "b": b,
        "N": _s(prog.N),
        "D": _s(prog.D),
        "len": prog.length,
        "terms": [
            {"value": _s(t.value), "reps": [[x, y] for x, y in t.reps]}
            for t in prog.terms
        ],
    }
    if maximal is not None:
        obj["maximal"] = maximal
    return obj


# ---------------------------------------------------------------------------
# Subcommand runners; each returns an exit code
# ---------------------------------------------------------------------------


def _run_member(args, out: _Output) -> int:
    params = SumsetParams(args.a, args.b)
    reps = representations(params, args.n)
    out.emit(
        {
            "a": args.a,
            "b": args.b,
            "n": _s(args.n),
            "member": bool(reps),
            "reps": [[x, y] for x, y in reps],
        }
    )
    return EXIT_OK


def _run_enum(args, out: _Output) -> int:
    params = SumsetParams(args.a, args.b)
    for el in enumerate_up_to(params, args.limit):
        out.emit({"value": _s(el.value), "reps": [[x, y] for x, y in el.reps]})
    return EXIT_OK


def _run_ap(args, out: _Output) -> int:
    params = SumsetParams(args.a, args.b)
    report = find_progressions(params, args.len, args.limit)
    for prog, maximal in zip(report.progressions, report.maximal_flags):
        if args.maximal_only and not maximal:
            continue
        out.emit(_progression_obj(args.a, args.b, prog, maximal))
    return EXIT_OK


def _run_count3(args, out: _Output) -> int:
    params = SumsetParams(args.a, args.b)
    limits = [int(float(tok)) for tok in args.limits.split(",")]
    rep = count_3term_stable(params, limits)
    for lim, wins, maxi in zip(rep.limits, rep.window_counts, rep.maximal_counts):
        out.emit({"limit": _s(lim), "windows": wins, "maximal": maxi})
    out.emit(
        {
            "stabilized_windows": rep.stabilized("window"),
            "stabilized_maximal": rep.stabilized("maximal"),
        }
    )
    return EXIT_OK


def _run_sweep(args, out: _Output) -> int:
    cfg = SweepConfig(args.a_max, args.b_max, args.limit, args.len)
    report = verify_theorem1(cfg, threads=args.threads)
    for f in report.findings:
        entry = None
        if f.entry is not None:
            entry = {"kind": f.entry.kind, "k": f.entry.k}
        out.emit(
            {
                "a": f.a,
                "b": f.b,
                "N": _s(f.N),
                "D": _s(f.D),
                "len": cfg.k,
                "maximal": f.maximal,
                "class": entry,
            }
        )
    summary = {
        "pairs_swept": len(cfg.pairs()),
        "findings": len(report.findings),
        "unclassified": len(report.unclassified),
    }
    if cfg.k == 5:
        summary["witnessed_sporadics"] = [list(t) for t in report.witnessed_sporadics]
        summary["witnessed_family1_k"] = list(report.witnessed_family("family1"))
        summary["witnessed_family2_k"] = list(report.witnessed_family("family2"))
    out.emit(summary)
    return EXIT_MISMATCH if (cfg.k == 5 and report.unclassified) else EXIT_OK


def _run_sunit(args, out: _Output) -> int:
    if args.solver == "deweger":
        sols = deweger_3term(DEWEGER_PRIMES, args.z_limit)
        for t in sols:
            out.emit(
                {
                    "x": _s(t.x),
                    "y": _s(t.y),
                    "z": _s(t.z),
                    "ords": {str(p): e for p, e in triple_ord_profile(t).items()},
                }
            )
        out.emit({"count": len(sols), "z_limit": _s(args.z_limit)})
        return EXIT_OK
    if args.solver == "dt":
        sols = deze_tijdeman_4term(args.p, args.q)
        for s in sols:
            out.emit(
                {
                    "shape": s.shape,
                    "signs": list(s.signs),
                    "exponents": list(s.exponents),
                    "terms": [_s(t) for t in s.terms],
                }
            )
        out.emit({"count": len(sols), "p": args.p, "q": args.q})
        return EXIT_OK
    if args.solver == "bb5":
        sols = bajpai_bennett_5term(args.alpha_max, args.beta_max)
        for s in sols:
            out.emit(
                {
                    "terms": [
                        {"sign": t.sign, "alpha": t.alpha, "beta": t.beta, "value": _s(t.value)}
                        for t in s.terms
                    ]
                }
            )
        out.emit({"count": len(sols), "alpha_max": args.alpha_max, "beta_max": args.beta_max})
        return EXIT_OK
    if args.solver == "pattern":
        with open(args.pattern_file) as fh:
            spec = json.load(fh)
        pattern = _build_pattern(spec)
        pred = SIDE_PREDICATES[spec["side_predicate"]] if "side_predicate" in spec else None
        sols = solve_pattern(pattern, side_predicate=pred, budget=args.budget)
        for s in sols:
            out.emit(
                {
                    "assignment": dict(zip(s.variables, s.values)),
                    "terms": [_s(v) for v in s.term_values],
                }
            )
        out.emit({"count": len(sols)})
        return EXIT_OK
    raise AssertionError(args.solver)


def _check_obj(rep) -> dict:
    obj = {
        "id": rep.check_id,
        "passed": rep.passed,
        "flagged": rep.flagged,
        "found_count": len(rep.found),
        "missing": [list(t) for t in rep.missing],
        "undocumented_extra": [list(t) for t in rep.undocumented_extra],
        "documented_extra": [list(t) for t in rep.documented_extra],
        "expected_recheck_failures": [list(t) for t in rep.expected_recheck_failures],
        "bounds": {k: (list(v) if isinstance(v, (list, tuple)) else v) for k, v in rep.bounds_used.items()},
    }
    if len(rep.found) <= 200:
        obj["found"] = [list(t) for t in rep.found]
    if rep.discrepancy_note:
        obj["note"] = rep.discrepancy_note
    return obj


def _run_check(args, out: _Output) -> int:
    if args.all:
        reports = run_all()
    else:
        if args.id is None:
            print("check: provide an id or --all", file=sys.stderr)
            return EXIT_USAGE
        if args.id not in check_ids():
            print(f"check: unknown id {args.id!r}; known: {', '.join(check_ids())}", file=sys.stderr)
            return EXIT_USAGE
        reports = [run_check(args.id)]
    ok = True
    for rep in reports:
        out.emit(_check_obj(rep))
        ok = ok and rep.passed
    return EXIT_OK if ok else EXIT_MISMATCH


def _parse_params(text: str) -> dict[str, int]:
    params: dict[str, int] = {}
    if not text:
        return params
    for piece in text.split(","):
        key, _, value = piece.partition("=")
        if not _ or not key:
            raise ValueError(f"malformed parameter {piece!r}; expected name=int")
        params[key.strip()] = int(value)
    return params


def _run_family(args, out: _Output) -> int:
    if args.action == "list":
        for fid in FAMILY_IDS:
            out.emit({"family": fid})
        return EXIT_OK
    if args.action == "prog3-pairs":
        for a, b, d1, d2 in find_prog3_pairs(args.limit):
            out.emit({"a": a, "b": b, "delta1": d1, "delta2": d2})
        return EXIT_OK
    # gen / verify
    try:
        spec = FamilySpec(args.family_id, _parse_params(args.params))
        prog = generate(spec)
    except (FamilyConstraintError, ValueError) as exc:
        print(f"family: {exc}", file=sys.stderr)
        return EXIT_USAGE
    params = family_params(spec)
    verified = verify(prog, params)
    obj = _progression_obj(params.a, params.b, prog)
    obj["family"] = args.family_id
    obj["verified"] = verified
    out.emit(obj)
    if args.action == "verify":
        return EXIT_OK if verified else EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _int_arg(text: str) -> int:
    # accept 1e12 style for limits
    return int(float(text)) if ("e" in text or "E" in text) else int(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="apsumset",
        description="Search and verification tools for arithmetic progressions "
        "in sumsets of two geometric progressions.",
    )
    ap.add_argument("--manifest", metavar="FILE", help="write the run manifest to FILE instead of stderr")
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                    help="worker processes for sweeps (results are independent of this)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", help="membership and representations of n in S_{a,b}")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n", type=_int_arg)

    p = sub.add_parser("enum", help="enumerate S_{a,b} up to a limit")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--limit", type=_int_arg, required=True)

    p = sub.add_parser("ap", help="k-term arithmetic progressions in S_{a,b}")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--limit", type=_int_arg, required=True)
    p.add_argument("--maximal-only", action="store_true")

    p = sub.add_parser("count3", help="3-term progression counts at a ladder of limits")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--limits", required=True, help="comma-separated, e.g. 1e8,1e10,1e12")

    p = sub.add_parser("sweep", help="grid sweep with classification matching")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--limit", type=_int_arg, required=True)

    p = sub.add_parser("sunit", help="bounded exponential-equation solvers")
    ssub = p.add_subparsers(dest="solver", required=True)
    sp = ssub.add_parser("deweger", help="x + y = z in coprime 13-smooth integers")
    sp.add_argument("--z-limit", type=_int_arg, default=10**12)
    sp = ssub.add_parser("dt", help="four-term two-prime shapes, powers <= 2^15")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp = ssub.add_parser("bb5", help="five-term {2,3}-unit equation")
    sp.add_argument("--alpha-max", type=int, default=19)
    sp.add_argument("--beta-max", type=int, default=12)
    sp = ssub.add_parser("pattern", help="generic pattern from a JSON file")
    sp.add_argument("pattern_file")
    sp.add_argument("--budget", type=_int_arg, default=50_000_000)

    p = sub.add_parser("check", help="run registered verification checks")
    p.add_argument("id", nargs="?")
    p.add_argument("--all", action="store_true")

    p = sub.add_parser("family", help="constructive progression families")
    fsub = p.add_subparsers(dest="action", required=True)
    fp = fsub.add_parser("list", help="list family identifiers")
    for action in ("gen", "verify"):
        fp = fsub.add_parser(action)
        fp.add_argument("family_id")
        fp.add_argument("--params", default="", help="comma-separated name=value, e.g. k=3,j=0")
    fp = fsub.add_parser("prog3-pairs", help="base pairs satisfying the prog3 constraint")
    fp.add_argument("--limit", type=_int_arg, required=True)

    return ap


_RUNNERS = {
    "member": _run_member,
    "enum": _run_enum,
    "ap": _run_ap,
    "count3": _run_count3,
    "sweep": _run_sweep,
    "sunit": _run_sunit,
    "check": _run_check,
    "family": _run_family,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    out = _Output()
    start = time.time()
    try:
        code = _RUNNERS[args.command](args, out)
    except SearchBudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    blob = out.flush()
    manifest = {
        "command": args.command,
        "parameters": {
            k: (_s(v) if isinstance(v, int) and abs(v) >= 2**63 else v)
            for k, v in sorted(vars(args).items())
            if k not in ("manifest",)
        },
        "version": __version__,
        "duration_s": round(time.time() - start, 3),
        "result_lines": len(out.lines),
        "result_sha256": hashlib.sha256(blob).hexdigest(),
    }
    if args.manifest:
        with open(args.manifest, "w") as fh:
            fh.write(_dump(manifest) + "\n")
    else:
        print(_dump(manifest), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
