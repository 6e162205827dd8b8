"""Vertex-count bounds for the stochastic-cube polytope, in exact arithmetic."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import IntegrityError


def p_of(n: int) -> int:
    """Number of half-spaces cutting out the polytope: ``n^3 + 6n^2 - 6n + 2``.

    Two per reduced equality (``<=`` and ``>=``) plus one per entry.
    """
    return n ** 3 + 6 * n * n - 6 * n + 2


def independent_lines(n: int) -> int:
    return 3 * n * n - 3 * n + 1


def upper_bound(n: int) -> Fraction:
    """``C(p(n), n^3 - 1) / n^3``."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n ** 3
    return Fraction(comb(p_of(n), m - 1), m)


def lower_bound(n: int) -> Fraction:
    """``(n!)^(2n) / n^(n^2)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(factorial(n) ** (2 * n), n ** (n * n))


def floor_of(q: Fraction) -> int:
    return q.numerator // q.denominator


@dataclass(frozen=True)
class BoundsReport:
    n: int
    p_n: int
    independent_lines: int
    lower: Fraction
    upper: Fraction
    enumerated_count: Optional[int] = None

    def as_dict(self):
        d = asdict(self)
        d["lower"] = str(self.lower)
        d["upper"] = str(self.upper)
        d["lower_floor"] = floor_of(self.lower)
        d["upper_floor"] = floor_of(self.upper)
        return d


def bounds_report(n: int, enumerated_count: Optional[int] = None) -> BoundsReport:
    report = BoundsReport(n, p_of(n), independent_lines(n), lower_bound(n), upper_bound(n),
                          enumerated_count)
    if enumerated_count is not None and not report.lower <= enumerated_count <= report.upper:
        raise IntegrityError(
            f"vertex count {enumerated_count} outside [{report.lower}, {report.upper}] for n={n}")
    return report


def format_table(reports, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in reports]) + "\n"
    header = ("n", "p(n)", "3n^2-3n+1", "lower", "upper", "count")
    rows = [header]
    for r in reports:
        rows.append((str(r.n), str(r.p_n), str(r.independent_lines), str(r.lower), str(r.upper),
                     "-" if r.enumerated_count is None else str(r.enumerated_count)))
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows) + "\n"
