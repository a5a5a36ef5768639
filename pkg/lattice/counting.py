"""
Closed-form interval counts and brute-force refined counting polynomials
"""
import logging
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import List, Optional

from sympy.polys.domains import QQ

from config import DEFAULT_VERTEX_CAP
from errors import InvalidInputError, VerificationMismatch
from lattice.paths import (
    contacts,
    from_parking_function,
    is_parking_function,
    labelled_paths,
    labellings_count,
    to_parking_function,
)
from lattice.tamari import TamariPoset, build_poset, enumerate_intervals
from reports import CheckReport, CountRow
from series.poly import TRING, Poly, Q, X, Y, has_nonnegative_integer_coefficients, poly_to_json, specialize

logger = logging.getLogger(__name__)


def closed_unlabelled(m: int, n: int) -> int:
    """(m+1) / (n(mn+1)) * C((m+1)^2 n + m, n-1)"""
    if n < 1:
        raise InvalidInputError("the closed form counts intervals of size n >= 1")
    value = QQ(m + 1, n * (m * n + 1)) * comb((m + 1) ** 2 * n + m, n - 1)
    if value.denominator != 1:
        raise VerificationMismatch("closed_unlabelled", f"non-integral value {value}")
    return int(value.numerator)


def closed_labelled(m: int, n: int) -> int:
    """(m+1)^n (mn+1)^(n-2)"""
    if n < 1:
        raise InvalidInputError("the closed form counts intervals of size n >= 1")
    value = QQ(m + 1) ** n * QQ(m * n + 1) ** (n - 2)
    if value.denominator != 1:
        raise VerificationMismatch("closed_labelled", f"non-integral value {value}")
    return int(value.numerator)


def closed_labelled_total(m: int, n: int) -> int:
    """Number of labelled m-ballot paths of size n: (mn+1)^(n-1)"""
    return int((QQ(m * n + 1) ** (n - 1)).numerator)


@dataclass(frozen=True)
class RefinedCount:
    """Sum over labelled intervals of x^c(P) y^r(Q) (q^dist(P,Q))"""

    m: int
    n: int
    poly: Poly
    intervals: int
    with_q: bool = False

    def __post_init__(self) -> None:
        if not has_nonnegative_integer_coefficients(self.poly):
            raise VerificationMismatch("refined_polynomial", f"coefficients of {self.poly} are not counts")

    @property
    def labelled(self) -> int:
        """Total number of labelled intervals"""
        return int(specialize(self.poly, x=1, y=1, q=1).LC.numerator) if self.poly else 0


def refined_polynomial(m: int, n: int, with_q: bool = False, cap: int = DEFAULT_VERTEX_CAP,
                       poset: Optional[TamariPoset] = None) -> RefinedCount:
    """Brute-force generating polynomial of labelled intervals of T_n^(m)"""
    poset = poset or build_poset(m, n, cap)
    poly = TRING.zero
    intervals = enumerate_intervals(poset)
    for interval in intervals:
        term = labellings_count(interval.upper) * X ** interval.contacts * Y ** interval.rise
        if with_q:
            term *= Q ** interval.dist
        poly += term
    logger.debug("refined polynomial of T_%d^(%d): %d intervals", n, m, len(intervals))
    return RefinedCount(m=m, n=n, poly=poly, intervals=len(intervals), with_q=with_q)


def _is_augmented(word: str, m: int, k: int) -> bool:
    runs = [len(r) for r in word.split("d") if r]
    if not word or not runs or not word.startswith("u" * k):
        return k == 0 and not word
    first, rest = runs[0] - k, runs[1:]
    return first >= 0 and first % m == 0 and all(r % m == 0 for r in rest)


def augmented_refined_polynomial(m: int, k: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> Poly:
    """Labelled k-augmented m-Tamari intervals with n blocks: Dyck paths of size
    k + mn opening with k up steps, the other up steps grouped in blocks of m,
    counted by x^(non-initial contacts of P) y^(blocks in the first ascent of Q)"""
    poset = build_poset(1, k + m * n, cap)
    words = [p.word.replace("N", "u").replace("E", "d") for p in poset.vertices]
    keep = [i for i, w in enumerate(words) if _is_augmented(w, m, k)]
    poly = TRING.zero
    for j in keep:
        upper = words[j]
        runs = [len(r) for r in upper.split("d") if r]
        blocks = [(runs[0] - k) // m] + [r // m for r in runs[1:]] if runs else [0]
        labellings = factorial(n) // prod(factorial(b) for b in blocks)
        for i in keep:
            if poset.reach[i, j]:
                poly += labellings * X ** (contacts(poset.vertices[i]) - 1) * Y ** blocks[0]
    return poly


def check_closed_forms(m: int, rows: List[CountRow]) -> List[CountRow]:
    """Fill in the closed-form columns from scratch and compare them with the brute-force counts"""
    for row in rows:
        if row.n < 1:
            continue
        row.unlabelled_closed = closed_unlabelled(m, row.n)
        row.labelled_closed = closed_labelled(m, row.n)
        if (row.unlabelled, row.labelled) != (row.unlabelled_closed, row.labelled_closed):
            raise VerificationMismatch(
                "intervals",
                f"m={m} n={row.n}: brute force ({row.unlabelled}, {row.labelled}) vs closed form "
                f"({row.unlabelled_closed}, {row.labelled_closed})",
            )
    return rows


def count_rows(m: int, n_max: int, with_q: bool = False, cap: int = DEFAULT_VERTEX_CAP) -> List[CountRow]:
    """Brute-force and closed-form counts for n = 0..n_max"""
    rows: List[CountRow] = []
    for n in range(n_max + 1):
        refined = refined_polynomial(m, n, with_q, cap)
        rows.append(CountRow(n=n, unlabelled=refined.intervals, labelled=refined.labelled,
                             poly=poly_to_json(refined.poly)))
    return check_closed_forms(m, rows)


def check_parking_bijection(m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> CheckReport:
    """Labelled paths of every size up to n against (mk+1)^(k-1), and the parking-function round trip"""
    name = "paths"
    for k in range(n + 1):
        seen = set()
        total = 0
        for labelling in labelled_paths(m, k, cap):
            parking = to_parking_function(labelling)
            if not is_parking_function(parking.values, m):
                return CheckReport.failed(name, m, k, f"{labelling.pretty()} maps to {list(parking.values)}")
            back = from_parking_function(parking.values, m)
            if (back.path, back.labels) != (labelling.path, labelling.labels):
                return CheckReport.failed(name, m, k, f"{labelling.pretty()} does not survive the round trip")
            seen.add(parking.values)
            total += 1
        expected = closed_labelled_total(m, k)
        if total != expected or len(seen) != total:
            return CheckReport.failed(name, m, k, f"{total} labelled paths, {len(seen)} parking functions, "
                                                  f"expected {expected}")
    return CheckReport.passed(name, m, n, f"sizes 0..{n}")
