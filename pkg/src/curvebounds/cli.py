"""Command-line front end.

Exit codes: 0 success, 2 domain or precondition error, 3 regime failure under
``--strict-regime``, 4 property violation found by ``scan``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .castelnuovo import acm_speciality, castelnuovo_bound, castelnuovo_hilbert, genus_from_hilbert
from .ci import CIType, ci_invariants
from .errors import CurveBoundsError
from .numeric import format_rational
from .regimes import ineq8_check, prop1_iii_regime, prop1_regime, prop2_regime, thmB_regime
from .scan import (
    MODELS,
    ScanSpec,
    canonical_model,
    evaluate,
    format_rows,
    parse_assignments,
    run_scan,
)
from .sharp import verify_sharp
from .speciality import FlagCondition, lemma1_threshold

EXIT_DOMAIN = 2
EXIT_REGIME = 3
EXIT_VIOLATION = 4

REGIME_MODELS = ("ThmB", "Prop1i", "Prop1ii", "Prop1iii", "Prop2", "Lemma1", "Ineq8")


def _int_params(tokens: list[str]) -> dict[str, int]:
    return {k: int(v) for k, v in parse_assignments(tokens).items()}


def _flag(p: dict[str, int]) -> FlagCondition:
    degs = [p[f"s{i}"] for i in range(1, 8) if f"s{i}" in p]
    return FlagCondition(p["r"], tuple(degs))


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
        return
    rows = obj if isinstance(obj, list) else [obj]
    keys = list(rows[0])
    if fmt == "csv":
        out.write(",".join(keys) + "\n")
        for r in rows:
            out.write(",".join(_cell(r[k]) for k in keys) + "\n")
        return
    for r in rows:
        width = max(len(k) for k in keys)
        for k in keys:
            out.write(f"{k.ljust(width)}  {_cell(r[k])}\n")


def _cell(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (list, tuple)):
        return " ".join(map(str, x))
    return "" if x is None else str(x)


def cmd_bound(args, out) -> int:
    model = canonical_model(args.model)
    row = evaluate(model, _int_params(args.params))
    if row["error"]:
        print(row["error"], file=sys.stderr)
        return EXIT_DOMAIN
    if model == "Lemma1":
        print("note: Lemma 1 regime read as d > 2 s^4 / (r - 2)", file=sys.stderr)
    out.write(format_rows([row], args.format, args.trace))
    if row["regime"] and not row["regime"]["satisfied"]:
        print(f"warning: regime not satisfied: {row['regime']['failed_clauses']}", file=sys.stderr)
        if args.strict_regime:
            return EXIT_REGIME
    return 0


def cmd_ci(args, out) -> int:
    degrees = tuple(int(x) for x in args.degrees.split(","))
    ci = CIType(args.r, degrees)
    inv = ci_invariants(ci)
    _emit({
        "r": ci.r, "multidegree": list(ci.multidegree), "degree": inv.degree,
        "speciality": inv.speciality, "genus": inv.genus,
        "flag_degrees": list(inv.flag_degrees), "degenerate": ci.degenerate,
    }, args.format, out)
    return 0


def cmd_sharp(args, out) -> int:
    p = _int_params(args.params)
    if args.model.lower() == "prop1ii":
        p = {"r": p["r"], "flag": _flag(p).degrees}
    res = verify_sharp(args.model, p)
    _emit({
        "model": args.model, "bound": format_rational(res.bound),
        "ci": list(res.ci.multidegree), "ci_r": res.ci.r,
        "ci_speciality": res.ci.speciality, "ci_genus": res.ci.genus,
        "attained": res.attained, "subcanonical": res.subcanonical,
    }, args.format, out)
    return 0


def _regime_verdict(model: str, p: dict[str, int]) -> dict:
    if model == "ThmB":
        v = thmB_regime(p["d"], p["s"], p["t"], p["u"])
        return {"satisfied": v.satisfied, "failed_clauses": v.failed_clauses,
                "clauses": [str(c) for c in v.clauses]}
    if model in ("Prop1i", "Prop1ii"):
        v = prop1_regime(_flag(p))
        return {"satisfied": v.satisfied, "failed_clauses": v.failed_clauses,
                "clauses": [str(c) for c in v.clauses], "note": v.note}
    if model == "Prop1iii":
        ok = prop1_iii_regime(p["r"], p["s1"], p["s2"])
        return {"satisfied": ok, "failed_clauses": [] if ok else ["s1 > 2 s2^4/(r-2)"]}
    if model == "Prop2":
        ok = prop2_regime(p["r"], p["d"], p["s"])
        return {"satisfied": ok, "failed_clauses": [] if ok else ["d > 2 s^4/(r-2)"]}
    if model == "Lemma1":
        threshold = lemma1_threshold(p["r"], p["s"])
        ok = p["d"] > threshold
        return {"satisfied": ok, "failed_clauses": [] if ok else ["d > 2 s^4/(r-2)"],
                "threshold": format_rational(threshold),
                "note": "printed threshold 2s^4/r-2 read as 2 s^4/(r-2)"}
    ok = ineq8_check(p["d"], p["s"], p["t"], p["u"])
    return {"satisfied": ok, "failed_clauses": [] if ok else ["eta/rho worst case below (d/2)(t/(u(u+1)) - 3u)"]}


def cmd_regime(args, out) -> int:
    names = {m.lower(): m for m in REGIME_MODELS}
    model = names.get(args.model.lower())
    if model is None:
        print(f"unknown regime model {args.model!r}; choose from {', '.join(REGIME_MODELS)}", file=sys.stderr)
        return EXIT_DOMAIN
    verdict = _regime_verdict(model, _int_params(args.params))
    _emit({"model": model, **verdict}, args.format, out)
    if args.strict_regime and not verdict["satisfied"]:
        return EXIT_REGIME
    return 0


def cmd_hilbert(args, out) -> int:
    h = castelnuovo_hilbert(args.n, args.s)
    record = {
        "n": args.n, "s": args.s, "values": list(h.values), "cap": h.cap,
        "genus": genus_from_hilbert(args.s, h), "castelnuovo_bound": castelnuovo_bound(args.n, args.s),
    }
    if args.speciality:
        record["speciality"] = acm_speciality(h, args.s)
    _emit(record, args.format, out)
    return 0


def cmd_scan(args, out) -> int:
    if args.spec:
        spec = ScanSpec.from_text(Path(args.spec).read_text())
    else:
        spec = ScanSpec.from_mapping(parse_assignments(args.params))
    print(f"grid size: {spec.size}", file=sys.stderr)
    result = run_scan(spec, workers=args.workers)
    out.write(format_rows(result.rows, args.format, args.trace))
    summary = " ".join(f"{k}={v}" for k, v in result.counts.items())
    print(f"summary: {summary}", file=sys.stderr)
    for v in result.violations:
        print(f"violation [{v['check']}] at {v['inputs']}: {v['detail']}", file=sys.stderr)
    if result.violations:
        return EXIT_VIOLATION
    if args.strict_regime and result.counts["regime_failures"]:
        return EXIT_REGIME
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--strict-regime", action="store_true",
                        help="exit with status 3 when a numerical hypothesis fails")
    common.add_argument("--trace", action="store_true", help="include the division data")

    parser = argparse.ArgumentParser(
        prog="curvebounds",
        description="Exact genus and speciality bounds for projective curves under flag conditions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="evaluate one bound")
    p.add_argument("model", help=", ".join(MODELS))
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("ci", parents=[common], help="invariants of a complete intersection")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degrees", required=True, help="comma-separated, e.g. 2,3,4,5")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("sharp", parents=[common], help="check a bound against its CI witness")
    p.add_argument("model", help="ThmA, ThmB, Prop1ii, Prop2")
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_sharp)

    p = sub.add_parser("regime", parents=[common], help="check numerical hypotheses")
    p.add_argument("model", help=", ".join(REGIME_MODELS))
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_regime)

    p = sub.add_parser("hilbert", parents=[common], help="Castelnuovo Hilbert function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--speciality", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("scan", parents=[common], help="scan a parameter grid")
    p.add_argument("--spec", help="file of key=value lines, ranges as d=18..60:1")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CurveBoundsError, KeyError, ValueError) as exc:
        msg = f"missing parameter {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
