"""Command-line front end.

Machine output always renders exact rationals as ``num/den``; the optional
``--approx`` column is the only place decimals appear.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GoldenMismatch, RouteMismatch, TheoremViolation
from .invariants import full_invariants
from .obstruction import _decide_many, decide, verify_theorems
from .pretzel import PretzelKnot, canonical_knots, parse_knot
from .signature import sigma_table, signature_profile

__all__ = ["main", "SurveyConfig", "build_parser"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VIOLATION = 3


def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _genus_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected G or G1-G2, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"genus range must satisfy 1 <= G1 <= G2, got {text!r}")
    return a, b


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _nonnegative(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


@dataclass(frozen=True)
class SurveyConfig:
    genus: tuple[int, int]
    max_sum: int
    max_twist: int | None = None
    format: str = "json"
    jobs: int = 1
    out: str | None = None
    min_sum: int = 1

    def __post_init__(self):
        lo, hi = self.genus
        if lo < 1 or hi < lo:
            raise ValueError(f"bad genus range {self.genus}")
        if self.max_sum < 1 or self.jobs < 1 or (self.max_twist is not None and self.max_twist < 1):
            raise ValueError("survey bounds must be positive")
        if self.format not in ("json", "csv"):
            raise ValueError(f"format must be json or csv, got {self.format!r}")

    def knots(self) -> list[PretzelKnot]:
        out = []
        for g in range(self.genus[0], self.genus[1] + 1):
            out.extend(canonical_knots(g, self.max_sum, min_sum=self.min_sum, max_twist=self.max_twist))
        return sorted(out, key=lambda k: (k.strands, k.twist_sum, tuple(-t for t in k.twists)))


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# commands; each returns the text to emit


def cmd_invariants(knot: str, *, fmt: str = "json", jones: bool = True) -> str:
    inv = full_invariants(parse_knot(knot), jones=jones)
    if fmt == "csv":
        d = inv.to_dict()
        row = [d["knot"], ";".join(map(str, d["conway"])), d["a2"],
               "" if d["a4"] is None else d["a4"], "" if d["a6"] is None else d["a6"], d["v3"]]
        return _csv_text(["knot", "conway", "a2", "a4", "a6", "v3"], [row])
    return _dump_json(inv.to_dict())


def cmd_sigtable(knot: str, pmax: int, *, fmt: str = "csv", approx: bool = False) -> str:
    k = parse_knot(knot)
    rows = sigma_table(k, pmax)
    if fmt == "json":
        return _dump_json({
            "knot": str(k),
            "rows": [{"p": s.p, "sigma": s.value, "sigma_over_p": _frac(s.ratio),
                      "coincidence": s.coincidence_flag} for s in rows],
        })
    header = ["p", "sigma", "sigma_over_p", "coincidence"]
    if approx:
        header.append("sigma_over_p_approx")
    out = []
    for s in rows:
        row = [s.p, s.value, _frac(s.ratio), "true" if s.coincidence_flag else "false"]
        if approx:
            row.append(f"~{float(s.ratio):.6f}")
        out.append(row)
    return _csv_text(header, out)


def cmd_staircase(knot: str, *, fmt: str = "csv", approx: bool = False) -> str:
    """Breakpoints of the signature function on ``(0, pi]``: the step at
    ``theta_m`` raises the value from ``2(m-1)`` to ``2m``."""
    k = parse_knot(knot)
    prof = signature_profile(k)
    rows = []
    for m, t in enumerate(prof.turns, start=1):
        rows.append({"m": m, "theta_over_pi_lo": _frac(2 * t.lo), "theta_over_pi_hi": _frac(2 * t.hi),
                     "sigma_before": 2 * (m - 1), "sigma_after": 2 * m,
                     "approx": f"~{float(t.lo + t.hi):.9f}"})
    if fmt == "json":
        for r in rows:
            r.pop("approx")
        return _dump_json({"knot": str(k), "breakpoints": rows})
    header = ["m", "theta_over_pi_lo", "theta_over_pi_hi", "sigma_before", "sigma_after"]
    if approx:
        header.append("theta_over_pi_approx")
    return _csv_text(header, [[r[h] if h in r else r["approx"] for h in header] for r in rows])


def _verdict_row(v) -> list:
    return [
        str(v.knot), v.outcome,
        ";".join(r.criterion for r in v.decisive),
        ";".join(r.statement for r in v.decisive),
        ";".join(f"{p}:{_frac(s)}" for p, s in v.survivors),
    ]


_VERDICT_HEADER = ["knot", "outcome", "criteria", "statements", "survivors"]


def cmd_check(knot: str, *, fmt: str = "json") -> str:
    v = decide(parse_knot(knot))
    if fmt == "csv":
        return _csv_text(_VERDICT_HEADER, [_verdict_row(v)])
    return _dump_json(v.to_dict())


def cmd_verify(genus: tuple[int, int] | None, max_sum: int | None, *, jobs: int = 1,
               samples: int = 200, seed: int = 0) -> tuple[str, bool]:
    kw = {}
    if genus is not None:
        if max_sum is None:
            raise ValueError("--genus needs --max-sum")
        kw["genus_sums"] = tuple((g, max_sum) for g in range(genus[0], genus[1] + 1))
        kw["threshold_genera"] = range(genus[0], genus[1] + 1)
    elif max_sum is not None:
        raise ValueError("--max-sum needs --genus")
    report = verify_theorems(jobs=jobs, threshold_samples=samples, seed=seed,
                             raise_on_violation=False, **kw)
    return _dump_json(report.to_dict()), report.ok


def cmd_survey(cfg: SurveyConfig) -> tuple[str, list]:
    verdicts = _decide_many(cfg.knots(), cfg.jobs)
    if cfg.format == "csv":
        return _csv_text(_VERDICT_HEADER, [_verdict_row(v) for v in verdicts]), verdicts
    counts: dict[str, int] = {}
    for v in verdicts:
        counts[v.outcome] = counts.get(v.outcome, 0) + 1
    return _dump_json({
        "genus": list(cfg.genus), "max_sum": cfg.max_sum, "max_twist": cfg.max_twist,
        "knots": len(verdicts), "counts": counts,
        "verdicts": [v.to_dict() for v in verdicts],
    }), verdicts


def cmd_reproduce(*, jobs: int = 1) -> tuple[str, bool]:
    from .reproduce import reproduce_tables

    rep = reproduce_tables(jobs=jobs)
    return json.dumps(rep.to_dict(), indent=2, sort_keys=True, default=str) + "\n", rep.ok


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cosmetic-pretzel",
        description="Invariants, signatures and chirally cosmetic surgery obstructions "
                    "for alternating odd pretzel knots K(k1,...,k2g+1).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def out_flag(sp):
        sp.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    sp = sub.add_parser("invariants", help="Conway coefficients and v3, cross-checked across routes")
    sp.add_argument("knot")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--no-jones", action="store_true", help="skip the Jones-polynomial route")
    out_flag(sp)

    sp = sub.add_parser("sigtable", help="exact sigma(K,p)/p for p = 1..pmax")
    sp.add_argument("knot")
    sp.add_argument("--pmax", type=_positive, required=True)
    sp.add_argument("--format", choices=("json", "csv"), default="csv")
    sp.add_argument("--approx", action="store_true", help="append an approximate decimal column")
    out_flag(sp)

    sp = sub.add_parser("staircase", help="certified breakpoints of the signature function")
    sp.add_argument("knot")
    sp.add_argument("--format", choices=("json", "csv"), default="csv")
    sp.add_argument("--approx", action="store_true", help="append an approximate decimal column")
    out_flag(sp)

    sp = sub.add_parser("check", help="run the obstruction pipeline on one knot")
    sp.add_argument("knot")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    out_flag(sp)

    sp = sub.add_parser("verify", help="check the classification theorems over a range")
    sp.add_argument("--genus", type=_genus_range)
    sp.add_argument("--max-sum", type=_positive)
    sp.add_argument("--samples", type=_positive, default=200, help="random knots per genus for the threshold check")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=_positive, default=1)
    out_flag(sp)

    sp = sub.add_parser("survey", help="decide every canonical knot in a range")
    sp.add_argument("--genus", type=_genus_range, required=True)
    sp.add_argument("--max-sum", type=_positive, required=True)
    sp.add_argument("--max-twist", type=_positive)
    sp.add_argument("--min-sum", type=_nonnegative, default=1)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--jobs", type=_positive, default=1)
    out_flag(sp)

    sp = sub.add_parser("reproduce", help="regenerate the published tables and diff against golden data")
    sp.add_argument("--jobs", type=_positive, default=1)
    out_flag(sp)
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    ok = True
    try:
        if args.command == "invariants":
            text = cmd_invariants(args.knot, fmt=args.format, jones=not args.no_jones)
        elif args.command == "sigtable":
            text = cmd_sigtable(args.knot, args.pmax, fmt=args.format, approx=args.approx)
        elif args.command == "staircase":
            text = cmd_staircase(args.knot, fmt=args.format, approx=args.approx)
        elif args.command == "check":
            text = cmd_check(args.knot, fmt=args.format)
        elif args.command == "verify":
            text, ok = cmd_verify(args.genus, args.max_sum, jobs=args.jobs, samples=args.samples, seed=args.seed)
        elif args.command == "survey":
            cfg = SurveyConfig(genus=args.genus, max_sum=args.max_sum, max_twist=args.max_twist,
                               format=args.format, jobs=args.jobs, out=args.out, min_sum=args.min_sum)
            text, _ = cmd_survey(cfg)
        else:
            text, ok = cmd_reproduce(jobs=args.jobs)
    except (TheoremViolation, GoldenMismatch, RouteMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        # ParseError, BadLength, NegativeTwist and bad option combinations
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
