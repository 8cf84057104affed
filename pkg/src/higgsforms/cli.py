"""Command-line front end: ``higgsforms <command> ...``.

Exit codes: 0 on success, 1 when an identity check fails, 2 on invalid input.
Rationals are printed as ``"p/q"`` strings and Gaussian rationals as
``{"re": ..., "im": ...}``; no value is ever rendered as a float.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .checks import SUITES, run_suite
from .curvature import hhym_bookkeeping, hhym_flat
from .higgs import F_table, f_table
from .scalar import Scalar
from .slope import (bigthm_verdict, parse_selector, slope, slope_diff, slope_diff_direct)

__all__ = ["main", "build_parser", "RunConfig"]


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    fmt: str
    args: Dict[str, Any] = field(default_factory=dict)


@dataclass
class Output:
    doc: dict
    header: List[str]
    rows: List[List[Any]]
    failed: bool = False


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(x):
    """Exact values to strings and ``{re, im}`` pairs, containers recursively."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return _q(x)
    if isinstance(x, Scalar):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if hasattr(x, "_asdict"):
        return {k: to_jsonable(v) for k, v in x._asdict().items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in x]
    return str(x)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _odd_n(n: int) -> None:
    if n <= 1 or n % 2 == 0:
        raise UsageError(f"n must be odd and greater than 1, got {n}")


# -- commands ----------------------------------------------------------------

def cmd_tables(n: int, k: Optional[int] = None) -> Output:
    _odd_n(n)
    f = f_table(n)
    doc = {"n": n, "f": {str(p): _q(v) for p, v in f.items()}}
    rows = [["f", p, _q(v)] for p, v in f.items()]
    if k is not None:
        if k < 3 or k % 2 == 0:
            raise UsageError(f"k must be odd and at least 3, got {k}")
        F = F_table(k)
        doc["k"] = k
        doc["F"] = {str(p): _q(v) for p, v in F.items()}
        rows += [["F", p, _q(v)] for p, v in F.items()]
    return Output(doc, ["table", "degree", "value"], rows)


def _sign_summary(c: Fraction) -> str:
    if c == 0:
        return "mu(P) = mu(Q) for every d"
    return "mu(P) > mu(Q) iff d " + (">" if c > 0 else "<") + " 0"


def cmd_slope(n: int, set_text: str, against: Optional[str] = None) -> Output:
    P = parse_selector(n, set_text)
    rp = slope(P)
    doc = {"n": n, "unit": "d", "set": list(P.degrees), "report": rp.to_json()}
    rows = [["set", " ".join(map(str, P.degrees)), _q(rp.degree_coeff), rp.rank, _q(rp.slope_coeff)]]
    if against is not None:
        Q = parse_selector(n, against)
        rq = slope(Q)
        direct = slope_diff_direct(P, Q)
        if Q.issubset(P):
            diff, method = slope_diff(P, Q), "pairwise"
            if diff != direct:
                raise ArithmeticError("pairwise and direct slope differences disagree")
        else:
            diff, method = direct, "direct"
        doc.update({"against": list(Q.degrees), "against_report": rq.to_json(),
                    "diff": _q(diff), "method": method, "summary": _sign_summary(diff)})
        rows.append(["against", " ".join(map(str, Q.degrees)), _q(rq.degree_coeff), rq.rank,
                     _q(rq.slope_coeff)])
        rows.append(["diff", method, "", "", _q(diff)])
    return Output(doc, ["row", "degrees", "degree_coeff", "rank", "slope_coeff"], rows)


def cmd_verdict(n: int, k: int, deg_sign: int, set_text: str,
                contains_omega: Optional[bool] = None) -> Output:
    sel = parse_selector(n, set_text)
    v = bigthm_verdict(n, k, deg_sign, sel, contains_omega)
    doc = v.to_json()
    rows = [["verdict", v.tag]] + [["satisfied", s] for s in v.satisfied] + \
        [[key, json.dumps(to_jsonable(val))] for key, val in v.facts.items()]
    return Output(doc, ["key", "value"], rows)


def cmd_check(suite: str, n: int, k: Optional[int], seed: int, trials: int) -> Output:
    results = run_suite(suite, n, k, seed, trials)
    failed = [r for r in results if not r.ok]
    doc = {"suite": suite, "n": n, "seed": seed, "trials": trials,
           "passed": len(results) - len(failed), "failed": len(failed),
           "checks": [{"suite": r.suite, "check": r.name, "pass": r.ok,
                       **({"witness": to_jsonable(r.witness)} if r.witness else {})}
                      for r in results]}
    rows = [[r.suite, r.name, "PASS" if r.ok else "FAIL"] for r in results]
    out = Output(doc, ["suite", "check", "result"], rows, failed=bool(failed))
    if failed:
        first = failed[0]
        print(f"first failure: {first.suite}/{first.name} witness="
              f"{json.dumps(to_jsonable(first.witness), sort_keys=True)}", file=sys.stderr)
    return out


def cmd_hhym(n: int, lam: Fraction, C: Fraction) -> Output:
    _odd_n(n)
    c = hhym_flat(n, lam, C)
    ok = hhym_bookkeeping(n, lam, C, c)
    doc = {"n": n, "lambda": _q(lam), "C": _q(C), "c": {str(p): _q(v) for p, v in c.items()},
           "bookkeeping_identity": ok}
    rows = [[p, _q(v)] for p, v in c.items()] + [["bookkeeping_identity", str(ok).lower()]]
    return Output(doc, ["degree", "c_p"], rows, failed=not ok)


# -- plumbing ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="higgsforms", description="Exact Higgs-form calculator.")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("tables", help="T-eigenvalue tables")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int)

    s = sub.add_parser("slope", help="slopes in units of d")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", required=True, dest="set_text")
    s.add_argument("--against")

    v = sub.add_parser("verdict", help="HHYM obstruction verdict")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--deg-sign", type=int, required=True, choices=(-1, 0, 1))
    v.add_argument("--set", required=True, dest="set_text")
    v.add_argument("--contains-omega", type=_bool, nargs="?", const=True)

    c = sub.add_parser("check", help="run identity suites")
    c.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int, default=10)

    h = sub.add_parser("hhym", help="flat HHYM conformal coefficients")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--lambda", type=_rational, required=True, dest="lam")
    h.add_argument("--C", type=_rational, required=True)

    for sp in (t, s, v, c, h):
        sp.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    return p


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_jsonable(out.doc), sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(out.header)
        w.writerows(out.rows)
        return buf.getvalue()
    return "".join("  ".join(str(x) for x in row).rstrip() + "\n" for row in out.rows)


def dispatch(cfg: RunConfig) -> Output:
    a = cfg.args
    if cfg.command == "tables":
        return cmd_tables(a["n"], a.get("k"))
    if cfg.command == "slope":
        return cmd_slope(a["n"], a["set_text"], a.get("against"))
    if cfg.command == "verdict":
        return cmd_verdict(a["n"], a["k"], a["deg_sign"], a["set_text"], a.get("contains_omega"))
    if cfg.command == "check":
        return cmd_check(a["suite"], a["n"], a.get("k"), a["seed"], a["trials"])
    if cfg.command == "hhym":
        return cmd_hhym(a["n"], a["lam"], a["C"])
    raise UsageError(f"unknown command {cfg.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args = vars(ns)
    cfg = RunConfig(args.pop("command"), args.pop("format"), args)
    try:
        out = dispatch(cfg)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(render(out, cfg.fmt))
    return 1 if out.failed else 0


if __name__ == "__main__":
    sys.exit(main())
