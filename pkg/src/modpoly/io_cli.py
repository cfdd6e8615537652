"""File ingestion, serialization and the command line front end.

The text format accepted here is the one used by published modular
polynomial tables: one coefficient per line, written as

    [m,n] value

with m >= n, optional blank lines, comment lines starting with '#', and
an optional monic boundary entry such as "[8,0] 1" for level 7.  Only
one triangle of the symmetric table appears in a file; the parser fills
the other half and flags conflicts.

JSON output serializes coefficient values as decimal strings since they
overflow 64-bit integers almost immediately.

Exit codes of the CLI: 0 success, 1 usage error, 2 computation error,
3 a proved divisibility statement failed, 4 a conjectural one failed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .closedform import CoeffRequest, closed_row, coeff_closed, coeff_small_m
from .comb import is_prime
from .congruence import ALL_CHECKS, ROW_CHECKS, CongruenceReport, check_conjecture_div, check_row
from .jfun import j_coefficients
from .recurrence import ModularPolynomial, coeff_recurrence, recurrence_row, solve_full_polynomial

SOLVER_FEASIBLE_MAX = 13


class UsageError(Exception):
    """Bad arguments or configuration; maps to exit code 1."""


class SutherlandParseError(ValueError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line %d: %s" % (line_number, message)
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True)
class SutherlandFile:
    """Raw parse result: the level and the (m, n, value) triples in file order."""

    ell: int
    lines: tuple

    def to_polynomial(self) -> ModularPolynomial:
        """Drop monic boundary entries and build the symmetric table."""
        entries = {}
        for m, n, v in self.lines:
            if m == self.ell + 1:
                if n != 0 or v != 1:
                    raise SutherlandParseError(
                        "unexpected boundary entry [%d,%d] %d for level %d" % (m, n, v, self.ell)
                    )
                continue
            entries[(m, n)] = v
        return ModularPolynomial(self.ell, entries)


_LINE_RE = re.compile(r"^\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s+([+-]?\d+)\s*$")
_HEADER_ELL_RE = re.compile(r"^#\s*(?:ell|level)\s*[=:]\s*(\d+)\s*$", re.IGNORECASE)


def parse_sutherland(text, ell: int | None = None, name: str | None = None) -> SutherlandFile:
    """Parse coefficient lines; figure out the level if none is supplied.

    ``text`` may be str or UTF-8 bytes; LF and CRLF both work.  The level
    is taken from, in order: the explicit argument, a "# ell = N" header
    comment, digits in the supplied file name, and as a last resort the
    entry indices themselves (a boundary entry [M,0] with value 1 puts
    the level at M-1, otherwise at the largest m seen).
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header_ell = None
    triples = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            got = _HEADER_ELL_RE.match(line)
            if got and header_ell is None:
                header_ell = int(got.group(1))
            continue
        got = _LINE_RE.match(raw)
        if not got:
            raise SutherlandParseError("malformed coefficient line %r" % line, lineno)
        m, n, v = int(got.group(1)), int(got.group(2)), int(got.group(3))
        if (m, n) in seen:
            raise SutherlandParseError("duplicate entry [%d,%d]" % (m, n), lineno)
        if (n, m) in seen and seen[(n, m)] != v:
            raise SutherlandParseError(
                "symmetry conflict: [%d,%d] is %d but [%d,%d] was %d"
                % (m, n, v, n, m, seen[(n, m)]),
                lineno,
            )
        seen[(m, n)] = v
        triples.append((m, n, v))
    if not triples:
        raise SutherlandParseError("no coefficient lines found")
    level = ell if ell is not None else header_ell
    if level is None and name:
        digits = re.findall(r"(\d+)", os.path.basename(name))
        if digits:
            level = int(digits[-1])
    if level is None:
        top = max(m for m, _, _ in triples)
        if any(m == top and n == 0 and v == 1 for m, n, v in triples):
            level = top - 1
        else:
            level = top
    return SutherlandFile(level, tuple(triples))


def load_sutherland(path: str, ell: int | None = None) -> SutherlandFile:
    with open(path, "rb") as fh:
        return parse_sutherland(fh.read(), ell=ell, name=path)


def emit_polynomial_json(poly: ModularPolynomial) -> str:
    """Deterministic JSON, one entry per stored pair, (m, n) descending."""
    doc = {
        "ell": poly.ell,
        "monic_degree": poly.ell + 1,
        "coefficients": [
            {"m": m, "n": n, "value": str(v)} for m, n, v in poly.items()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_polynomial_json(text) -> ModularPolynomial:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    doc = json.loads(text)
    entries = {(int(c["m"]), int(c["n"])): int(c["value"]) for c in doc["coefficients"]}
    return ModularPolynomial(int(doc["ell"]), entries)


def emit_sutherland_text(poly: ModularPolynomial) -> str:
    lines = ["[%d,0] 1" % (poly.ell + 1)]
    lines.extend("[%d,%d] %d" % (m, n, v) for m, n, v in poly.items())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RunConfig:
    ell: int
    m_max: int | None = None
    precision_override: int | None = None
    output_path: str | None = None
    check_set: tuple = ROW_CHECKS
    threads: int = 1

    def __post_init__(self):
        if not is_prime(self.ell):
            raise UsageError("--ell must be prime, got %r" % (self.ell,))
        if self.m_max is not None and not 0 <= self.m_max <= self.ell:
            raise UsageError("--m-max must lie in [0, ell]")
        if self.precision_override is not None and self.precision_override < 1:
            raise UsageError("--precision must be positive")
        bad = [c for c in self.check_set if c not in ALL_CHECKS]
        if bad:
            raise UsageError(
                "unknown checks: %s (choose from %s)" % (",".join(bad), ",".join(ALL_CHECKS))
            )
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    top = _ArgumentParser(
        prog="modpoly",
        description="Exact modular polynomial coefficients and divisibility checks.",
    )
    sub = top.add_subparsers(dest="command", metavar="command")

    def common(p, ell=True):
        if ell:
            p.add_argument("--ell", type=int, required=True, help="prime level")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
        p.add_argument("--threads", type=int, default=None,
                       help="parallelism budget (default: MODPOLY_THREADS or 1)")

    p = sub.add_parser("jcoeff", help="print j-invariant coefficients c_{-1}..c_{N-1}")
    p.add_argument("--count", type=int, required=True)
    common(p, ell=False)

    p = sub.add_parser("coeff", help="one coefficient a_{ell,ell-m}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recurrence", "small"), default="closed")
    common(p)

    p = sub.add_parser("row", help="the row a_{ell,ell-m} for m = 0..m-max")
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--method", choices=("closed", "recurrence"), default="recurrence")
    common(p)

    p = sub.add_parser("poly", help="solve the full polynomial (JSON by default)")
    p.add_argument("--precision", type=int, default=None,
                   help="j coefficient count for the solve (default ell^2+ell+2)")
    common(p)
    p.set_defaults(format="json")

    p = sub.add_parser("check", help="run divisibility checkers, report pass/fail")
    p.add_argument("--file", metavar="SUTHERLAND", help="check an ingested coefficient file")
    p.add_argument("--set", default=",".join(ROW_CHECKS),
                   help="comma list from %s (default %%(default)s)" % ",".join(ALL_CHECKS))
    common(p)

    p = sub.add_parser("crosscheck", help="assert closed = recurrence (= solver when feasible)")
    p.add_argument("--m-max", type=int, default=None)
    common(p)

    return top


def _threads_from(args) -> int:
    if getattr(args, "threads", None) is not None:
        value = args.threads
    else:
        raw = os.environ.get("MODPOLY_THREADS", "1")
        try:
            value = int(raw)
        except ValueError:
            raise UsageError("MODPOLY_THREADS must be an integer, got %r" % raw) from None
    if value < 1:
        raise UsageError("thread count must be at least 1")
    return value


def _deliver(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_jcoeff(args) -> int:
    _threads_from(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    table = j_coefficients(args.count)
    if args.format == "json":
        doc = {"first_index": -1, "values": [str(v) for v in table.values]}
        _deliver(json.dumps(doc, indent=2) + "\n", args)
    else:
        _deliver("".join("%d\n" % v for v in table.values), args)
    return 0


def _cmd_coeff(args) -> int:
    cfg = RunConfig(ell=args.ell, m_max=args.m, threads=_threads_from(args))
    req = CoeffRequest(cfg.ell, args.m)
    j = j_coefficients(max(args.m, 1))
    if args.method == "closed":
        value = coeff_closed(req, j)
    elif args.method == "recurrence":
        value = coeff_recurrence(cfg.ell, args.m, j)
    else:
        value = coeff_small_m(req, j)
    if args.format == "json":
        doc = {"ell": cfg.ell, "m": args.m, "value": str(value)}
        _deliver(json.dumps(doc, indent=2) + "\n", args)
    else:
        _deliver("%d\n" % value, args)
    return 0


def _cmd_row(args) -> int:
    cfg = RunConfig(ell=args.ell, m_max=args.m_max, threads=_threads_from(args))
    m_max = cfg.m_max if cfg.m_max is not None else cfg.ell
    j = j_coefficients(max(m_max, 1))
    if args.method == "closed":
        row = closed_row(cfg.ell, j, m_max)
    else:
        row = recurrence_row(cfg.ell, j, m_max)
    if args.format == "json":
        doc = {
            "ell": cfg.ell,
            "values": [{"m": m, "value": str(v)} for m, v in enumerate(row)],
        }
        _deliver(json.dumps(doc, indent=2) + "\n", args)
    else:
        _deliver("".join("%d %d\n" % (m, v) for m, v in enumerate(row)), args)
    return 0


def _cmd_poly(args) -> int:
    cfg = RunConfig(ell=args.ell, precision_override=args.precision,
                    threads=_threads_from(args))
    count = cfg.precision_override or cfg.ell * cfg.ell + cfg.ell + 2
    poly = solve_full_polynomial(cfg.ell, j_coefficients(count))
    if args.format == "text":
        _deliver(emit_sutherland_text(poly), args)
    else:
        _deliver(emit_polynomial_json(poly), args)
    return 0


def _report_text(report: CongruenceReport) -> str:
    lines = []
    for rec in report.records:
        if not rec.passed:
            where = ",".join(str(i) for i in rec.index)
            lines.append(
                "FAIL %s [%s]: ord_%d = %s, required %d (%s)"
                % (rec.check, where, rec.prime, rec.observed, rec.required, rec.severity)
            )
    for name, (passed, failed) in sorted(report.summary.items()):
        lines.append("%s: %d checked, %d failed" % (name, passed + failed, failed))
    for key, (hit, total) in sorted(report.stats.items()):
        lines.append("note: %s: %d of %d" % (key, hit, total))
    fatal = report.failures("FATAL")
    if fatal:
        lines.append("result: FATAL (%d proved statements failed)" % len(fatal))
    elif report.failures():
        lines.append(
            "result: COUNTEREXAMPLE (%d conjectural statements failed)" % len(report.failures())
        )
    else:
        lines.append("result: OK")
    return "\n".join(lines) + "\n"


def _cmd_check(args) -> int:
    check_set = tuple(s.strip() for s in args.set.split(",") if s.strip())
    cfg = RunConfig(ell=args.ell, check_set=check_set, threads=_threads_from(args))
    poly = None
    if args.file:
        parsed = load_sutherland(args.file)
        if parsed.ell != cfg.ell:
            raise ValueError(
                "file is for level %d but --ell %d was requested" % (parsed.ell, cfg.ell)
            )
        poly = parsed.to_polynomial()

    report = CongruenceReport(cfg.ell)
    row_checks = tuple(c for c in cfg.check_set if c in ROW_CHECKS)
    if row_checks:
        if poly is not None:
            row = poly.top_row()[1:]
        elif cfg.ell == 2:
            row = solve_full_polynomial(2, j_coefficients(8)).top_row()[1:]
        else:
            row = recurrence_row(cfg.ell, j_coefficients(cfg.ell))[1:]
        report = report.merge(check_row(cfg.ell, row, row_checks))
    if "conj12" in cfg.check_set:
        if poly is None:
            if cfg.ell > SOLVER_FEASIBLE_MAX:
                raise ValueError(
                    "full-table checks for ell=%d need --file; the reference solver "
                    "is limited to ell <= %d" % (cfg.ell, SOLVER_FEASIBLE_MAX)
                )
            poly = solve_full_polynomial(cfg.ell, j_coefficients(cfg.ell * cfg.ell + cfg.ell + 2))
        report = report.merge(check_conjecture_div(poly))

    payload = json.dumps(report.to_json_dict(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        sys.stdout.write(_report_text(report))
    elif args.format == "json":
        sys.stdout.write(payload)
    else:
        sys.stdout.write(_report_text(report))
    if report.failures("FATAL"):
        return 3
    if report.failures():
        return 4
    return 0


def _cmd_crosscheck(args) -> int:
    cfg = RunConfig(ell=args.ell, m_max=args.m_max, threads=_threads_from(args))
    if cfg.ell < 3:
        raise UsageError("crosscheck needs ell >= 3")
    m_max = cfg.m_max if cfg.m_max is not None else cfg.ell
    j = j_coefficients(max(m_max, 1))
    sources = {"recurrence": recurrence_row(cfg.ell, j, m_max)}

    def one_closed(m):
        return coeff_closed(CoeffRequest(cfg.ell, m), j)

    ms = range(m_max + 1)
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            sources["closed"] = list(pool.map(one_closed, ms))
    else:
        sources["closed"] = [one_closed(m) for m in ms]

    if cfg.ell <= SOLVER_FEASIBLE_MAX:
        solved = solve_full_polynomial(cfg.ell, j_coefficients(cfg.ell * cfg.ell + cfg.ell + 2))
        sources["solver"] = solved.top_row()[: m_max + 1]

    mismatches = []
    for m in ms:
        values = {name: vals[m] for name, vals in sources.items()}
        if len(set(values.values())) != 1:
            mismatches.append((m, values))
    for m, values in mismatches:
        detail = ", ".join("%s=%d" % (k, v) for k, v in sorted(values.items()))
        sys.stdout.write("MISMATCH at m=%d: %s\n" % (m, detail))
    if mismatches:
        sys.stdout.write("crosscheck: MISMATCH (%d of %d rows)\n" % (len(mismatches), m_max + 1))
        return 3
    sys.stdout.write(
        "crosscheck: OK (ell=%d, m <= %d, methods: %s)\n"
        % (cfg.ell, m_max, ",".join(sorted(sources)))
    )
    return 0


_COMMANDS = {
    "jcoeff": _cmd_jcoeff,
    "coeff": _cmd_coeff,
    "row": _cmd_row,
    "poly": _cmd_poly,
    "check": _cmd_check,
    "crosscheck": _cmd_crosscheck,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a command is required (one of %s)" % ", ".join(sorted(_COMMANDS)))
        return _COMMANDS[args.command](args)
    except UsageError as err:
        sys.stderr.write("error: %s\n" % err)
        return 1
    except (ValueError, ArithmeticError, OSError) as err:
        # parse errors, precision shortfalls, integrality and solver
        # failures, unreadable files
        sys.stderr.write("error: %s\n" % err)
        return 2


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
