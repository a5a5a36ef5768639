"""
Order-by-order solver for the functional equation of labelled m-Tamari intervals

    dF/dy = t x (F(x,1) Delta)^(m) F,   F(x,0) = x

where Delta is the divided difference in x (its q-analogue when with_q).
"""
import logging
from math import comb
from typing import Callable, List

from config import DEFAULT_VERTEX_CAP, MAX_DECOMPOSITION_SIZE, MAX_SERIES_ORDER
from errors import InvalidInputError, ResourceCapExceeded
from lattice.counting import augmented_refined_polynomial, refined_polynomial
from reports import CheckReport
from series.poly import TRING, Poly, X, Y, delta, delta_q, integrate_y, specialize
from series.tseries import TSeries

logger = logging.getLogger(__name__)


def _validate(m: int, N: int) -> None:
    if m < 1 or N < 0:
        raise InvalidInputError(f"need m >= 1 and N >= 0, got m={m}, N={N}")
    if N > MAX_SERIES_ORDER:
        raise ResourceCapExceeded("series order", N, MAX_SERIES_ORDER)


def _convolve(j: int, left: List[Poly], right: List[Poly]) -> Poly:
    """j-th EGF coefficient of a product"""
    return sum((comb(j, i) * left[i] * right[j - i] for i in range(j + 1)), TRING.zero)


def solve_functional_equation(m: int, N: int, with_q: bool = False) -> TSeries:
    """EGF coefficients a_0..a_N of F(t; x, y) (and q when with_q)

    The stages S_0 = F, S_k = F(x,1) Delta(S_(k-1)) are extended by one
    coefficient per order, so a_n only needs a_0..a_(n-1).
    """
    _validate(m, N)
    op: Callable[[Poly], Poly] = delta_q if with_q else delta

    coeffs: List[Poly] = [X]
    at_one: List[Poly] = [X]
    # stages[k][j] = j-th coefficient of S_k, divided[k][j] = Delta of it
    stages: List[List[Poly]] = [coeffs] + [[] for _ in range(m)]
    divided: List[List[Poly]] = [[op(X)]] + [[] for _ in range(m)]

    for n in range(1, N + 1):
        j = n - 1
        for k in range(1, m + 1):
            value = _convolve(j, at_one, divided[k - 1])
            stages[k].append(value)
            if k < m:
                divided[k].append(op(value))
        a_n = integrate_y(n * X * stages[m][j])
        coeffs.append(a_n)
        at_one.append(specialize(a_n, y=1))
        divided[0].append(op(a_n))
        logger.debug("m=%d order %d: %d terms", m, n, len(a_n))

    return TSeries.of(coeffs)


def augmented_series(F: TSeries, m: int, k: int) -> TSeries:
    """F_k = (F(x,1) Delta)^(k) F for 1 <= k <= m, and F_0 = F/x

    F_k counts labelled k-augmented intervals: Dyck paths of size k + mn
    opening with k free up steps, x marking non-initial contacts of the
    lower path and y the blocks in the first ascent of the upper one.
    """
    if not 0 <= k <= m:
        raise InvalidInputError(f"augmentation k={k} outside 0..{m}")
    if k == 0:
        return F.divide_by_x()
    at_one = F.at(y=1)
    series = F
    for _ in range(k):
        series = at_one * series.map(delta)
    return series


def check_solver_oracle(m: int, n_max: int, with_q: bool = False,
                        cap: int = DEFAULT_VERTEX_CAP) -> CheckReport:
    """a_n against the brute-force refined polynomials for n <= n_max"""
    name = "solver-oracle"
    F = solve_functional_equation(m, n_max, with_q)
    for n in range(n_max + 1):
        expected = refined_polynomial(m, n, with_q, cap).poly
        if F[n] != expected:
            return CheckReport.failed(name, m, n_max, f"a_{n} = {F[n]}, brute force {expected}", order=n)
    # a longer run must reproduce the shorter one
    longer = solve_functional_equation(m, n_max + 1, with_q)
    if longer.truncate(n_max) != F:
        return CheckReport.failed(name, m, n_max, "solution depends on the truncation order")
    return CheckReport.passed(name, m, n_max, f"with_q={with_q}")


def check_augmented(m: int, N: int, cap: int = DEFAULT_VERTEX_CAP) -> CheckReport:
    """t x F_m = dF/dy coefficientwise, and F_k against enumerated augmented intervals"""
    name = "augmented"
    F = solve_functional_equation(m, N)
    top = augmented_series(F, m, m)
    for n in range(1, N + 1):
        lhs = n * X * top[n - 1]
        rhs = F[n].diff(Y)
        if lhs != rhs:
            return CheckReport.failed(name, m, N, f"t x F_{m} differs from dF/dy: {lhs} vs {rhs}", order=n)
    compared = 0
    for k in range(m + 1):
        series = augmented_series(F, m, k)
        for n in range(N + 1):
            if k + m * n > MAX_DECOMPOSITION_SIZE:
                break
            expected = augmented_refined_polynomial(m, k, n, cap)
            if series[n] != expected:
                return CheckReport.failed(name, m, N, f"F_{k} at order {n}: {series[n]} vs enumeration {expected}",
                                          order=n)
            compared += 1
    return CheckReport.passed(name, m, N, f"{compared} augmented coefficients enumerated")
