"""Command line front end.

Subcommands::

    invariants M N
    compare M N M2 N2 [--category C] [--orientation O]
    classes N [--category C] [--orientation preserving|either]
    table N
    verify-section4
    sqrt N [--minus]

Every subcommand takes ``--format text|json`` and ``-v``. Exit codes: 0 for an
equivalent/ok answer, 1 for a valid negative answer or a table mismatch, 2 for
usage and domain errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from .classifier import CATEGORY_ALIASES, Orientation, equivalent, parse_category, parse_orientation
from .enumeration import exotic_sphere_census, partition, section4_table, verify_section4
from .invariants import Bundle, BundleError, invariant_record
from .modular import unit_square_roots

__all__ = ["SCHEMA_VERSION", "UsageError", "Command", "Report", "parse", "run", "main"]

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

log = logging.getLogger("s3bundles")


class UsageError(Exception):
    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True)
class Command:
    name: str
    args: dict = field(default_factory=dict)
    fmt: str = "text"
    verbosity: int = 0

    def echo(self) -> dict:
        return {"name": self.name, **self.args}


@dataclass
class Report:
    command: dict
    status: str
    payload: dict
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "status": self.status,
            "payload": self.payload,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> Report:
        d = json.loads(text)
        return cls(command=d["command"], status=d["status"], payload=d["payload"],
                   schema_version=d["schema_version"])


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="s3bundles", description="Classify total spaces of S^3-bundles over S^4.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="halfp, s1 and mu of M(m,n)")
    p.add_argument("m", type=_integer)
    p.add_argument("n", type=_integer)

    p = sub.add_parser("compare", parents=[common], help="decide whether M(m,n) and M(m2,n2) are equivalent")
    for name in ("m", "n", "m2", "n2"):
        p.add_argument(name, type=_integer)
    p.add_argument("--category", default="homeo", choices=sorted(CATEGORY_ALIASES))
    p.add_argument("--orientation", default="preserving", choices=("preserving", "reversing", "either"))

    p = sub.add_parser("classes", parents=[common], help="equivalence classes of m mod 56n")
    p.add_argument("n", type=_integer)
    p.add_argument("--category", default="homeo", choices=sorted(CATEGORY_ALIASES))
    p.add_argument("--orientation", default="preserving", choices=("preserving", "either"))

    p = sub.add_parser("table", parents=[common], help="Hom and Diff counts for one n")
    p.add_argument("n", type=_integer)

    sub.add_parser("verify-section4", parents=[common], help="recompute and check the published count tables")
    sub.add_parser("census", parents=[common], help="mu-invariants of the homotopy spheres M(m,1)")

    p = sub.add_parser("sqrt", parents=[common], help="square roots of +1 (default) or -1 mod n")
    p.add_argument("n", type=_integer)
    p.add_argument("--minus", action="store_true", help="solve alpha^2 = -1 instead of +1")
    return parser


def _check_euler(n: int, m: int | None = None, token=None) -> None:
    if n < 0:
        hint = f"; use the equivalent M({m + n},{-n})" if m is not None else ""
        raise UsageError(f"Euler number n must be >= 0, got {n} (M(m,n) = M(m+n,-n){hint})", token)


def parse(argv: list[str]) -> Command:
    """Turn argv into a :class:`Command`, raising :class:`UsageError` on bad input."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.command is None:
        raise UsageError("missing subcommand; choose from invariants, compare, classes, table, "
                         "verify-section4, census, sqrt")
    name = ns.command
    args: dict = {}
    if name == "invariants":
        _check_euler(ns.n, ns.m, str(ns.n))
        if ns.n == 0:
            raise UsageError("invariants are undefined for n = 0 (H^4 is infinite cyclic)", "0")
        args = {"m": ns.m, "n": ns.n}
    elif name == "compare":
        _check_euler(ns.n, ns.m, str(ns.n))
        _check_euler(ns.n2, ns.m2, str(ns.n2))
        args = {"m": ns.m, "n": ns.n, "m2": ns.m2, "n2": ns.n2,
                "category": parse_category(ns.category).value, "orientation": ns.orientation}
    elif name == "classes":
        _check_euler(ns.n, token=str(ns.n))
        if ns.n == 0:
            raise UsageError("n = 0 has infinitely many classes", "0")
        args = {"n": ns.n, "category": parse_category(ns.category).value, "orientation": ns.orientation}
    elif name == "table":
        _check_euler(ns.n, token=str(ns.n))
        if ns.n == 0:
            raise UsageError("tables need n >= 1", "0")
        args = {"n": ns.n}
    elif name == "sqrt":
        if ns.n < 1:
            raise UsageError(f"modulus must be >= 1, got {ns.n}", str(ns.n))
        args = {"n": ns.n, "sign": -1 if ns.minus else 1}
    return Command(name, args, ns.format, ns.verbose)


# ---------------------------------------------------------------------------
# execution


def _run_invariants(a):
    rec = invariant_record(Bundle(a["m"], a["n"]))
    return "ok", rec.to_dict()


def _run_compare(a):
    v = equivalent(Bundle(a["m"], a["n"]), Bundle(a["m2"], a["n2"]),
                   parse_category(a["category"]), parse_orientation(a["orientation"]))
    return ("ok" if v.equivalent else "not-equivalent"), v.to_dict()


def _run_classes(a):
    return "ok", partition(a["n"], a["category"], a["orientation"]).summary()


def _run_table(a):
    return "ok", section4_table(a["n"]).to_dict()


def _run_verify(a):
    report = verify_section4()
    return ("ok" if report.ok else "mismatch"), report.to_dict()


def _run_census(a):
    return "ok", exotic_sphere_census()


def _run_sqrt(a):
    rs = unit_square_roots(a["n"], a["sign"])
    return "ok", {"modulus": rs.modulus, "sign": rs.sign, "elements": list(rs.elements),
                  "count": len(rs)}


_RUNNERS = {
    "invariants": _run_invariants,
    "compare": _run_compare,
    "classes": _run_classes,
    "table": _run_table,
    "verify-section4": _run_verify,
    "census": _run_census,
    "sqrt": _run_sqrt,
}

_EXIT = {"ok": EXIT_OK, "not-equivalent": EXIT_NEGATIVE, "mismatch": EXIT_NEGATIVE, "error": EXIT_USAGE}


def run(cmd: Command) -> tuple[Report, int]:
    log.debug("running %s %s", cmd.name, cmd.args)
    try:
        status, payload = _RUNNERS[cmd.name](cmd.args)
    except (BundleError, ValueError) as exc:
        status, payload = "error", {"message": str(exc)}
    return Report(cmd.echo(), status, payload), _EXIT[status]


# ---------------------------------------------------------------------------
# text rendering


def _fmt_record(d):
    if d["halfp"] is None:
        return f"M({d['m']},{d['n']})"
    return f"M({d['m']},{d['n']}): halfp = {d['halfp']} mod {d['n']}, s1 = {d['s1']}, mu = {d['mu']}"


def render_text(report: Report) -> str:
    name, p = report.command["name"], report.payload
    if report.status == "error":
        return f"error: {p['message']}"
    if name == "invariants":
        return _fmt_record(p)
    if name == "compare":
        lines = [_fmt_record(p["left"]), _fmt_record(p["right"])]
        head = f"{p['category']} / {p['orientation']}: "
        if p["equivalent"]:
            head += "equivalent"
            if p["matched_orientation"] and p["matched_orientation"] != p["orientation"]:
                head += f" ({p['matched_orientation']})"
            if p["witness_alpha"] is not None:
                head += f", witness α = {p['witness_alpha']}"
            if p["witness_shift"] is not None:
                head += f", shift j = {p['witness_shift']}"
        else:
            head += "not equivalent"
        lines += [head, f"rule: {p['rule']}"]
        return "\n".join(lines)
    if name == "classes":
        lines = [f"n = {p['n']}, {p['category']} / {p['orientation']}: "
                 f"{p['count']} classes in m mod {p['period']}"]
        for c in p["classes"]:
            lines.append(f"  [{c['representative']}] size {c['size']}, m mod n in {c['residues_mod_n']}")
        return "\n".join(lines)
    if name == "table":
        return _fmt_table(p)
    if name == "verify-section4":
        lines = [_fmt_table(t) for t in p["tables"]]
        for mm in p["mismatches"]:
            lines.append(f"MISMATCH n={mm['n']} {mm['quantity']} residue={mm['residue']}: "
                         f"expected {mm['expected']}, computed {mm['computed']}")
        lines.append(f"{p['matched']}/{p['total']} tables match")
        return "\n".join(lines)
    if name == "census":
        return (f"{p['distinct']} distinct mu values, {p['nonzero']} nonzero: "
                + ", ".join(p["values"]))
    if name == "sqrt":
        rhs = "1" if p["sign"] == 1 else "-1"
        return f"alpha^2 = {rhs} mod {p['modulus']}: {p['count']} solutions {p['elements']}"
    return json.dumps(p)


def _fmt_table(t):
    lines = [f"n = {t['n']}: Hom+ = {t['hom_plus']}, Hom = {t['hom_either']}"]
    for row in t["diff_plus"]:
        lines.append(f"  Diff+ = {row['count']} for {row['condition']['text']}")
    if t["reversing_exists"]:
        for row in t["diff_either"]:
            lines.append(f"  Diff = {row['count']} for {row['condition']['text']}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse(argv)
    except UsageError as exc:
        msg = str(exc)
        if exc.token is not None:
            msg += f" (offending token: {exc.token!r})"
        if "--format" in argv and "json" in argv:
            report = Report({"name": None, "argv": list(argv)}, "error", {"message": msg})
            print(report.to_json())
        else:
            print(f"s3bundles: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if cmd.verbosity > 1 else
                        logging.INFO if cmd.verbosity else logging.WARNING)
    report, code = run(cmd)
    print(report.to_json() if cmd.fmt == "json" else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
