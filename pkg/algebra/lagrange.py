"""
Lagrange interpolation identities over exact rationals
"""
import random
from math import prod
from typing import Optional, Sequence

from sympy.polys.domains import QQ

from errors import InvalidInputError
from reports import CheckReport


def _weights(values: Sequence):
    for i, x in enumerate(values):
        yield x, prod((x - other for j, other in enumerate(values) if j != i), start=QQ(1))


def _evaluate(coeffs: Sequence, x):
    total = QQ(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def lagrange_check(values: Sequence, Q: Sequence = ()) -> CheckReport:
    """The three interpolation identities at x_0..x_m for Q of degree < m (coefficients low to high)"""
    name = "lagrange"
    values = [QQ.convert(v) for v in values]
    Q = [QQ.convert(c) for c in Q]
    m = len(values) - 1
    if m < 1:
        raise InvalidInputError("need at least two points")
    if len(set(values)) != len(values):
        raise InvalidInputError(f"points {values} are not distinct")
    while Q and Q[-1] == 0:
        Q = Q[:-1]
    if len(Q) > m:
        raise InvalidInputError(f"Q has degree {len(Q) - 1}, need less than {m}")

    leading = sum((x ** m / w for x, w in _weights(values)), QQ(0))
    if leading != 1:
        return CheckReport.failed(name, m, detail=f"sum x_i^m / prod (x_i - x_j) = {leading}")
    if 0 not in values:
        reciprocal = sum((1 / (x * w) for x, w in _weights(values)), QQ(0))
        expected = (-1) ** m / prod(values, start=QQ(1))
        if reciprocal != expected:
            return CheckReport.failed(name, m, detail=f"reciprocal sum {reciprocal}, expected {expected}")
    vanishing = sum((_evaluate(Q, x) / w for x, w in _weights(values)), QQ(0))
    if vanishing != 0:
        return CheckReport.failed(name, m, detail=f"sum Q(x_i) / prod (x_i - x_j) = {vanishing}")
    return CheckReport.passed(name, m, detail=f"points {[str(v) for v in values]}")


def random_lagrange_check(m_max: int = 4, trials: int = 100, seed: Optional[int] = 0) -> CheckReport:
    """lagrange_check on random distinct nonzero rational tuples for m = 1..m_max"""
    rng = random.Random(seed)
    for trial in range(trials):
        m = 1 + trial % m_max
        values = set()
        while len(values) < m + 1:
            value = QQ(rng.randint(-50, 50), rng.randint(1, 12))
            if value:
                values.add(value)
        Q = [QQ(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)]
        report = lagrange_check(sorted(values), Q)
        if not report.ok:
            return report
    return CheckReport.passed("lagrange", None, None, f"{trials} random tuples, m <= {m_max}")
