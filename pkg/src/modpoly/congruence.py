"""p-adic valuations of modular polynomial coefficients and their checkers.

Two kinds of divisibility statements are checked.  Row statements bound
ord_2 and ord_3 of a_{ell,ell-m} by the residue of m (these are proved
facts, so a failure is flagged FATAL), and predict when 5 divides a
coefficient from (ell mod 5, m mod 5) (conjectural, flagged
COUNTEREXAMPLE on failure).  Corner statements bound ord_2 / ord_3 /
ord_5 of a_{m,n} linearly in c = ell + 1 - m - n when c > 0; these are
conjectural as well.

Checkers never raise on a failed comparison; they record verdicts so a
sweep can aggregate.  Zero coefficients have INFINITE valuation and pass
everything vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .comb import is_prime
from .recurrence import ModularPolynomial

ROW_CHECKS = ("prop22", "prop23", "conj25")
ALL_CHECKS = ("prop22", "prop23", "conj25", "conj12")

_FATAL_CHECKS = frozenset({"prop22", "prop23"})


@dataclass(frozen=True)
class Valuation:
    """ord_p of an integer; value None stands for INFINITE (input 0)."""

    value: int | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def at_least(self, bound: int) -> bool:
        return self.value is None or self.value >= bound

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


INFINITE = Valuation(None)


def ord_p(x: int, p: int) -> Valuation:
    """Largest e with p^e dividing x; INFINITE when x is 0."""
    if not is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    if x == 0:
        return INFINITE
    if x < 0:
        x = -x
    e = 0
    chunk = p ** 64
    while x % chunk == 0:
        x //= chunk
        e += 64
    while x % p == 0:
        x //= p
        e += 1
    return Valuation(e)


def required_two_valuation(m: int) -> int:
    """Guaranteed ord_2 of a_{ell,ell-m} for odd primes ell, by m mod 8."""
    if m < 1:
        raise ValueError("m must be positive")
    return (0, 3, 2, 5, 1, 4, 2, 5)[m % 8]


def required_three_valuation(m: int) -> int:
    """Guaranteed ord_3 of a_{ell,ell-m}, by m mod 3."""
    if m < 1:
        raise ValueError("m must be positive")
    return (0, 1, 2)[m % 3]


def five_predicted(ell: int, m: int) -> bool:
    """Whether 5 is predicted to divide a_{ell,ell-m}, for 0 < m < ell."""
    if not 0 < m < ell:
        raise ValueError("need 0 < m < ell, got m=%d, ell=%d" % (m, ell))
    return (ell % 5, m % 5) in {(1, 4), (3, 4), (2, 3), (4, 2)}


@dataclass(frozen=True)
class CheckRecord:
    check: str            # prop22 | prop23 | conj25 | conj12
    index: tuple          # (m,) for row checks, (m, n) for corner checks
    prime: int
    required: int
    observed: Valuation
    passed: bool
    severity: str         # FATAL for proved statements, COUNTEREXAMPLE otherwise


@dataclass
class CongruenceReport:
    ell: int
    records: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        out = {}
        for rec in self.records:
            passed, failed = out.get(rec.check, (0, 0))
            if rec.passed:
                out[rec.check] = (passed + 1, failed)
            else:
                out[rec.check] = (passed, failed + 1)
        return out

    def failures(self, severity: str | None = None) -> list:
        return [
            r for r in self.records
            if not r.passed and (severity is None or r.severity == severity)
        ]

    def merge(self, other: "CongruenceReport") -> "CongruenceReport":
        if other.ell != self.ell:
            raise ValueError("cannot merge reports for different levels")
        stats = dict(self.stats)
        for k, v in other.stats.items():
            a, b = stats.get(k, (0, 0))
            stats[k] = (a + v[0], b + v[1])
        return CongruenceReport(self.ell, self.records + other.records, stats)

    def to_json_dict(self) -> dict:
        return {
            "ell": self.ell,
            "checks": [
                {
                    "check": r.check,
                    "index": list(r.index),
                    "prime": r.prime,
                    "required": r.required,
                    "observed": str(r.observed),
                    "verdict": "pass" if r.passed else "fail",
                    "severity": r.severity,
                }
                for r in self.records
            ],
            "summary": {
                name: {"pass": p, "fail": f} for name, (p, f) in sorted(self.summary.items())
            },
            "stats": {k: {"indivisible": v[0], "total": v[1]} for k, v in sorted(self.stats.items())},
        }


def _record(check, index, prime, required, observed):
    return CheckRecord(
        check=check,
        index=index,
        prime=prime,
        required=required,
        observed=observed,
        passed=observed.at_least(required),
        severity="FATAL" if check in _FATAL_CHECKS else "COUNTEREXAMPLE",
    )


def check_row(ell: int, row, checks=ROW_CHECKS) -> CongruenceReport:
    """Check a_{ell,ell-m} for m = 1..ell against the row divisibility tables.

    ``row`` lists the coefficients starting at m=1, so it has length ell.
    The two-adic table applies to odd levels only and is skipped for
    ell = 2.  Residue classes carrying no divisibility claim (m = 0 mod 8
    for ord_2, m = 0 mod 3 for ord_3) are tallied in report.stats instead
    of being asserted.
    """
    if not is_prime(ell):
        raise ValueError("ell must be prime, got %r" % (ell,))
    row = list(row)
    if len(row) != ell:
        raise ValueError("row must list a_{ell,ell-m} for m=1..ell, got %d values" % len(row))
    report = CongruenceReport(ell)
    two_untouched = [0, 0]
    three_untouched = [0, 0]
    for m in range(1, ell + 1):
        a = row[m - 1]
        if "prop22" in checks and ell % 2 == 1:
            v2 = ord_p(a, 2)
            report.records.append(_record("prop22", (m,), 2, required_two_valuation(m), v2))
            if m % 8 == 0:
                two_untouched[1] += 1
                if not v2.at_least(1):
                    two_untouched[0] += 1
        if "prop23" in checks:
            v3 = ord_p(a, 3)
            report.records.append(_record("prop23", (m,), 3, required_three_valuation(m), v3))
            if m % 3 == 0:
                three_untouched[1] += 1
                if not v3.at_least(1):
                    three_untouched[0] += 1
        if "conj25" in checks and m < ell and five_predicted(ell, m):
            report.records.append(_record("conj25", (m,), 5, 1, ord_p(a, 5)))
    if "prop22" in checks and ell % 2 == 1:
        report.stats["unclaimed_mod8_indivisible_by_2"] = tuple(two_untouched)
    if "prop23" in checks:
        report.stats["unclaimed_mod3_indivisible_by_3"] = tuple(three_untouched)
    return report


def check_conjecture_div(poly: ModularPolynomial) -> CongruenceReport:
    """Check every a_{m,n} with c = ell+1-m-n > 0 against the corner bounds.

    Required valuations: ord_2 >= 15c (unless ell = 2); ord_3 >= 3c,
    strengthened to ceil(9c/2) when ell = 1 mod 3 (unless ell = 3);
    ord_5 >= 3c (unless ell = 5).
    """
    ell = poly.ell
    report = CongruenceReport(ell)
    for m, n, a in poly.items():
        c = ell + 1 - m - n
        if c <= 0:
            continue
        if ell != 2:
            report.records.append(_record("conj12", (m, n), 2, 15 * c, ord_p(a, 2)))
        if ell != 3:
            need3 = (9 * c + 1) // 2 if ell % 3 == 1 else 3 * c
            report.records.append(_record("conj12", (m, n), 3, need3, ord_p(a, 3)))
        if ell != 5:
            report.records.append(_record("conj12", (m, n), 5, 3 * c, ord_p(a, 5)))
    return report
