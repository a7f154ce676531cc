"""Grid scans over the bound formulas, with property checks and table output.

A scan is described by a :class:`ScanSpec`: a model name, one inclusive
integer range per parameter and a set of checks. Rows come out in
lexicographic order of the model's parameters, whatever the worker count.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .errors import CurveBoundsError, DivisibilityError, DomainError
from .halphen import halphen_R, halphen_value
from .numeric import decompose, format_rational
from .regimes import prop1_regime, prop1_iii_regime, prop2_regime, thmB_regime
from .sharp import verify_sharp
from .speciality import (
    BoundReport,
    FlagCondition,
    lemma1_genus_bound,
    lemma1_spec_bound,
    lemma1_threshold,
    lemma2_bound,
    prop1_bound_i,
    prop1_bound_ii,
    prop1_bound_iii,
    prop2_bound,
    remark_iii_bound,
    thmA_bound,
    thmB_bound,
)

__all__ = [
    "MODELS",
    "CHECKS",
    "ScanSpec",
    "ScanResult",
    "parse_range",
    "canonical_model",
    "evaluate",
    "run_scan",
    "row_to_json",
    "format_rows",
]

FLAG_SLOTS = tuple(f"s{i}" for i in range(1, 8))

# model -> (required parameters, optional parameters), in row-ordering priority
MODELS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "Halphen": (("r", "d", "s"), ()),
    "ThmA": (("d", "s"), ()),
    "ThmB": (("d", "s", "t", "u"), ()),
    "Prop1i": (("r", "s1"), FLAG_SLOTS[1:] + ("s_next",)),
    "Prop1ii": (("r", "s1", "s2"), FLAG_SLOTS[2:]),
    "Prop1iii": (("s1", "s2", "G"), ("r",)),
    "Prop2": (("r", "d", "s"), ()),
    "Lemma1": (("r", "d", "s", "pi"), ()),
    "Lemma2": (("d", "s", "t", "k"), ()),
    "RemarkIII": (("r", "d"), ()),
}

CHECKS = ("integrality", "R-magnitude", "equality-equivalence", "sharpness", "identity-14")

_CHECKS_FOR = {
    "Halphen": {"integrality", "R-magnitude", "identity-14"},
    "Prop2": {"integrality", "R-magnitude", "equality-equivalence", "identity-14", "sharpness"},
    "ThmA": {"sharpness"},
    "ThmB": {"sharpness"},
    "Prop1ii": {"sharpness"},
}


def canonical_model(name: str) -> str:
    for m in MODELS:
        if m.lower() == str(name).lower():
            return m
    raise DomainError(f"unknown model {name!r}; choose from {', '.join(MODELS)}")


def parse_range(text: str) -> range:
    """Parse ``a``, ``a..b`` or ``a..b:step`` into an inclusive range."""
    text = text.strip()
    step = 1
    if ":" in text:
        text, step_s = text.split(":", 1)
        step = int(step_s)
    if step < 1:
        raise DomainError(f"range step must be positive, got {step}")
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    rng = range(lo, hi + 1, step)
    if len(rng) == 0:
        raise DomainError(f"empty range {text!r}")
    return rng


@dataclass(frozen=True)
class ScanSpec:
    model: str
    grid: tuple[tuple[str, range], ...]
    checks: frozenset[str] = frozenset()

    def __post_init__(self):
        model = canonical_model(self.model)
        object.__setattr__(self, "model", model)
        required, optional = MODELS[model]
        given = dict(self.grid)
        missing = [p for p in required if p not in given]
        unknown = [p for p in given if p not in required + optional]
        if missing or unknown:
            raise DomainError(f"{model} needs {required} (optional {optional}); missing {missing}, unknown {unknown}")
        for name, rng in self.grid:
            if len(rng) == 0:
                raise DomainError(f"empty range for {name}")
        bad = set(self.checks) - set(CHECKS)
        if bad:
            raise DomainError(f"unknown checks {sorted(bad)}; choose from {CHECKS}")
        order = [p for p in required + optional if p in given]
        object.__setattr__(self, "grid", tuple((p, given[p]) for p in order))
        object.__setattr__(self, "checks", frozenset(self.checks))

    @property
    def size(self) -> int:
        n = 1
        for _, rng in self.grid:
            n *= len(rng)
        return n

    def points(self) -> Iterable[dict[str, int]]:
        names = [p for p, _ in self.grid]
        for values in itertools.product(*(rng for _, rng in self.grid)):
            yield dict(zip(names, values))

    @classmethod
    def from_mapping(cls, items: Mapping[str, str]) -> "ScanSpec":
        items = dict(items)
        if "model" not in items:
            raise DomainError("scan spec needs model=...")
        model = items.pop("model")
        checks = items.pop("checks", "")
        check_set = frozenset(c.strip() for c in checks.split(",") if c.strip())
        grid = tuple((k, parse_range(v)) for k, v in items.items())
        return cls(model, grid, check_set)

    @classmethod
    def from_text(cls, text: str) -> "ScanSpec":
        return cls.from_mapping(parse_assignments(
            line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")
        ))


def parse_assignments(tokens: Iterable[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise DomainError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _flag_of(inputs: Mapping[str, int]) -> FlagCondition:
    degs = [inputs[s] for s in FLAG_SLOTS if s in inputs]
    return FlagCondition(inputs["r"], tuple(degs))


def _flag_regime(flag: FlagCondition):
    if flag.length < 2 or (flag.length == 2 and flag.r == 3):
        return None
    return prop1_regime(flag).as_dict()


def _bool_regime(ok: bool, clause: str) -> dict:
    return {"satisfied": ok, "failed_clauses": [] if ok else [clause]}


def _empty_row(model: str, inputs: Mapping[str, int]) -> dict[str, Any]:
    return {
        "model": model, "inputs": dict(inputs), "value": None, "equality_possible": None,
        "witness": None, "regime": None, "extra": {}, "trace": None, "error": None,
    }


def _fill(row: dict, report: BoundReport) -> None:
    row["value"] = report.value
    row["equality_possible"] = report.equality_possible
    row["witness"] = list(report.witness.multidegree) if report.witness else None


def evaluate(model: str, inputs: Mapping[str, int]) -> dict[str, Any]:
    """Evaluate one grid point; domain errors land in the row's ``error`` field."""
    model = canonical_model(model)
    row = _empty_row(model, inputs)
    try:
        _evaluate_into(row, model, inputs)
    except CurveBoundsError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _evaluate_into(row: dict, model: str, p: Mapping[str, int]) -> None:
    if model == "Halphen":
        r, d, s = p["r"], p["d"], p["s"]
        row["value"] = halphen_value(r, d, s)
        row["extra"] = {"R": halphen_R(r, d, s)}
        row["trace"] = decompose(r, d, s).as_dict()
    elif model == "ThmA":
        _fill(row, thmA_bound(p["d"], p["s"]))
    elif model == "ThmB":
        _fill(row, thmB_bound(p["d"], p["s"], p["t"], p["u"]))
        row["regime"] = thmB_regime(p["d"], p["s"], p["t"], p["u"]).as_dict()
    elif model == "Prop1i":
        flag = _flag_of(p)
        _fill(row, prop1_bound_i(flag, p.get("s_next")))
        row["regime"] = _flag_regime(flag)
    elif model == "Prop1ii":
        flag = _flag_of(p)
        _fill(row, prop1_bound_ii(flag))
        row["regime"] = _flag_regime(flag)
    elif model == "Prop1iii":
        row["value"] = prop1_bound_iii(p["s1"], p["s2"], p["G"])
        if "r" in p:
            row["regime"] = _bool_regime(prop1_iii_regime(p["r"], p["s1"], p["s2"]), "s1 > 2 s2^4/(r-2)")
    elif model == "Prop2":
        r, d, s = p["r"], p["d"], p["s"]
        report = prop2_bound(r, d, s)
        _fill(row, report)
        row["extra"] = {"G": halphen_value(r, d, s), "R": halphen_R(r, d, s)}
        row["regime"] = _bool_regime(prop2_regime(r, d, s), "d > 2 s^4/(r-2)")
        row["trace"] = report.trace.as_dict()
    elif model == "Lemma1":
        r, d, s, pi = p["r"], p["d"], p["s"], p["pi"]
        with warnings.catch_warnings():
            # the row's regime column already records the failure
            warnings.simplefilter("ignore")
            row["value"] = lemma1_spec_bound(d, s, pi, r, strict=False)
        if d >= s * s:
            row["extra"] = {"genus_bound": lemma1_genus_bound(r, d, s, pi)}
        row["regime"] = _bool_regime(d > lemma1_threshold(r, s), "d > 2 s^4/(r-2)")
    elif model == "Lemma2":
        _fill(row, lemma2_bound(p["d"], p["s"], p["t"], p["k"]))
    elif model == "RemarkIII":
        _fill(row, remark_iii_bound(p["r"], p["d"]))
    if row["trace"] is None:
        row["trace"] = dict(p)


def _row_checks(row: dict, checks: frozenset[str]) -> list[dict]:
    """Return the property violations found at one row."""
    model, p = row["model"], row["inputs"]
    active = checks & _CHECKS_FOR.get(model, set())
    if row["error"] or not active:
        return []
    found = []

    def flag(check: str, detail: str) -> None:
        found.append({"check": check, "inputs": dict(p), "detail": detail})

    if model in ("Halphen", "Prop2"):
        r, d, s = p["r"], p["d"], p["s"]
        G = halphen_value(r, d, s)
        R = halphen_R(r, d, s)
        if "integrality" in active and G.denominator != 1:
            flag("integrality", f"G = {G}")
        if "R-magnitude" in active and abs(R) > Fraction(s**3, r - 2):
            flag("R-magnitude", f"|R| = {abs(R)} > s^3/(r-2)")
        if "identity-14" in active and d >= s:
            lhs = Fraction(2 * G - 2, d)
            rhs = prop2_bound(r, d, s).value + Fraction(2 * (R - 1), d)
            if lhs != rhs:
                flag("identity-14", f"{lhs} != {rhs}")
        if "equality-equivalence" in active:
            report = prop2_bound(r, d, s)
            if report.is_integer != report.equality_possible:
                flag("equality-equivalence", f"is_integer={report.is_integer}, equality_case={report.equality_possible}")
            elif report.equality_possible and R != 1:
                flag("equality-equivalence", f"equality case with R = {R}")
    if "sharpness" in active:
        params = dict(p)
        if model == "Prop1ii":
            params = {"r": p["r"], "flag": _flag_of(p).degrees}
        try:
            res = verify_sharp(model, params)
        except DivisibilityError:
            return found
        if not (res.attained and res.subcanonical):
            flag("sharpness", f"witness {res.ci} has speciality {res.ci.speciality}, bound {res.bound}")
    return found


def _evaluate_chunk(args) -> list[tuple[dict, list[dict]]]:
    model, points, checks = args
    out = []
    for p in points:
        row = evaluate(model, p)
        out.append((row, _row_checks(row, checks)))
    return out


@dataclass
class ScanResult:
    rows: list[dict]
    violations: list[dict]
    counts: dict[str, int] = field(default_factory=dict)


def run_scan(spec: ScanSpec, workers: int = 1, chunk: int = 512) -> ScanResult:
    """Evaluate every grid point; ``workers > 1`` shards the grid in order."""
    points = list(spec.points())
    chunks = [(spec.model, points[i:i + chunk], spec.checks) for i in range(0, len(points), chunk)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_evaluate_chunk, chunks))
    else:
        parts = [_evaluate_chunk(c) for c in chunks]
    rows, violations = [], []
    for part in parts:
        for row, found in part:
            rows.append(row)
            violations.extend(found)
    counts = {
        "points": len(rows),
        "errors": sum(1 for r in rows if r["error"]),
        "violations": len(violations),
        "regime_failures": sum(1 for r in rows if r["regime"] and not r["regime"]["satisfied"]),
    }
    for c in sorted(spec.checks):
        counts[f"violations[{c}]"] = sum(1 for v in violations if v["check"] == c)
    return ScanResult(rows, violations, counts)


# --- serialization -------------------------------------------------------

def _is_integer(v) -> bool | None:
    return None if v is None else Fraction(v).denominator == 1


def _floor(v) -> int | None:
    return None if v is None else Fraction(v).__floor__()


def row_to_json(row: dict, trace: bool = False) -> dict:
    v = row["value"]
    out = {
        "model": row["model"],
        "inputs": row["inputs"],
        "value": None if v is None else {"num": Fraction(v).numerator, "den": Fraction(v).denominator},
        "floor": _floor(v),
        "is_integer": _is_integer(v),
        "equality_possible": row["equality_possible"],
        "witness": row["witness"],
        "regime": row["regime"],
        "extra": {k: format_rational(x) for k, x in row["extra"].items()},
        "error": row["error"],
    }
    if trace:
        out["trace"] = row["trace"]
    return out


def _flat(row: dict, trace: bool) -> dict[str, str]:
    v = row["value"]
    reg = row["regime"]
    flat = {"model": row["model"]}
    flat.update({k: str(x) for k, x in row["inputs"].items()})
    flat.update({
        "value": "" if v is None else format_rational(v),
        "floor": "" if v is None else str(_floor(v)),
        "is_integer": "" if v is None else str(_is_integer(v)).lower(),
        "equality_possible": "" if row["equality_possible"] is None else str(row["equality_possible"]).lower(),
        "witness": "" if row["witness"] is None else ",".join(map(str, row["witness"])),
        "regime_satisfied": "" if reg is None else str(reg["satisfied"]).lower(),
        "failed_clauses": "" if reg is None else "; ".join(reg["failed_clauses"]),
    })
    for k, x in row["extra"].items():
        flat[k] = format_rational(x)
    if trace and row["trace"] is not None:
        flat["trace"] = " ".join(f"{k}={x}" for k, x in row["trace"].items())
    flat["error"] = row["error"] or ""
    return flat


def format_rows(rows: list[dict], fmt: str = "table", trace: bool = False) -> str:
    """Render rows as an aligned table, CSV, or JSON lines."""
    if fmt == "json":
        return "".join(json.dumps(row_to_json(r, trace), sort_keys=False) + "\n" for r in rows)
    flats = [_flat(r, trace) for r in rows]
    columns: list[str] = []
    for f in flats:
        for k in f:
            if k not in columns:
                columns.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for f in flats:
            writer.writerow({c: f.get(c, "") for c in columns})
        return buf.getvalue()
    if fmt != "table":
        raise DomainError(f"unknown format {fmt!r}")
    widths = {c: max([len(c)] + [len(f.get(c, "")) for f in flats]) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns).rstrip()]
    lines.append("  ".join("-" * widths[c] for c in columns))
    for f in flats:
        lines.append("  ".join(f.get(c, "").ljust(widths[c]) for c in columns).rstrip())
    return "\n".join(lines) + "\n"
