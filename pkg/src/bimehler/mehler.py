"""Three independent constructions of the two-sex Mehler series and their comparison.

* ``lhs``: labelled coefficient ``H_{m,n}(x) H_{m,n}(y)`` cell by cell.
* ``component``: ``exp`` of the sum of the seven connected-component series.
* ``closed``: ``(1 - xyts)^-1 * exp((t + s + xts + yts) / (1 - xyts))``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List

from .algebra import X, Y, WeightPoly
from .biegf import BiSeries, bs_exp, bs_inv_one_minus, bs_term
from .hermite import hermite_pair_poly
from .profiles import all_components_series

__all__ = [
    "FORMS",
    "Mismatch",
    "VerifyReport",
    "lhs_series",
    "rhs_component_series",
    "rhs_closed_series",
    "verify",
]


def lhs_series(max_m: int, max_n: int) -> BiSeries:
    return BiSeries.from_function(max_m, max_n, hermite_pair_poly)


def rhs_component_series(max_m: int, max_n: int) -> BiSeries:
    return bs_exp(all_components_series(max_m, max_n))


def rhs_closed_series(max_m: int, max_n: int) -> BiSeries:
    one = WeightPoly.constant(1)
    geometric = bs_inv_one_minus(bs_term(1, 1, X * Y, max_m, max_n))
    numerator = (
        bs_term(1, 0, one, max_m, max_n)
        + bs_term(0, 1, one, max_m, max_n)
        + bs_term(1, 1, X + Y, max_m, max_n)
    )
    return geometric * bs_exp(numerator * geometric)


FORMS: Dict[str, Callable[[int, int], BiSeries]] = {
    "lhs": lhs_series,
    "component": rhs_component_series,
    "closed": rhs_closed_series,
}


@dataclass(frozen=True)
class Mismatch:
    m: int
    n: int
    forms: str
    expected: WeightPoly
    actual: WeightPoly

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "forms": self.forms,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


@dataclass
class VerifyReport:
    max_m: int
    max_n: int
    mismatches: List[Mismatch] = field(default_factory=list)
    elapsed_ms: Dict[str, float] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if not self.mismatches else "fail"

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def cells(self) -> int:
        return (self.max_m + 1) * (self.max_n + 1)

    def to_dict(self) -> dict:
        return {
            "max_m": self.max_m,
            "max_n": self.max_n,
            "status": self.status,
            "mismatches": [mm.to_dict() for mm in self.mismatches],
            "elapsed_ms": dict(self.elapsed_ms),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({self.cells} cells, {len(FORMS)} forms)"
        return f"FAIL ({len(self.mismatches)} mismatches over {self.cells} cells, {len(FORMS)} forms)"


def verify(max_m: int, max_n: int) -> VerifyReport:
    """Build all three forms and compare every pair of them on every cell."""
    report = VerifyReport(max_m, max_n)
    built: Dict[str, BiSeries] = {}
    for name, build in FORMS.items():
        start = time.perf_counter()
        built[name] = build(max_m, max_n)
        report.elapsed_ms[name] = round((time.perf_counter() - start) * 1000.0, 3)
    for a, b in combinations(FORMS, 2):
        for m, n, expected in built[a].cells():
            actual = built[b].coeff(m, n)
            if expected != actual:
                report.mismatches.append(Mismatch(m, n, f"{a}/{b}", expected, actual))
    return report
