"""
Symmetric functions of the roots u_0 = u, u_1, ..., u_m of (1+U)^(m+1) = U^m v

Every quantity is a Laurent polynomial in u (a LaurentU over the z-series ring),
so symmetric expressions in the roots reduce without ever naming a root.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Callable, Dict, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement
from sympy.utilities.iterables import multiset_partitions

from algebra.laurent import LaurentU
from algebra.rings import U, V, VRING, ZRING
from config import DEFAULT_SERIES_ORDER, MAX_POWER_SUM_WINDOW, POWER_SUM_WINDOW_FACTOR
from errors import CancellationFailure, InvalidInputError, ResourceCapExceeded
from reports import CheckReport

logger = logging.getLogger(__name__)

Family = Literal["all", "others"]
Scalar = Union[int, PolyElement, LaurentU]


def v_laurent(m: int) -> LaurentU:
    """v = (1+u)^(m+1) u^(-m)"""
    return LaurentU.of((1 + U) ** (m + 1), m)


def elementary_all(m: int) -> Tuple[LaurentU, ...]:
    """e_0..e_(m+1) of u_0..u_m"""
    v = v_laurent(m)
    out = []
    for j in range(m + 2):
        e = LaurentU.monomial(0, (-1) ** j * comb(m + 1, j))
        out.append(e + v if j == 1 else e)
    return tuple(out)


def elementary_others(m: int) -> Tuple[LaurentU, ...]:
    """e_0..e_m of u_1..u_m, polynomials in 1/u"""
    out: List[Optional[LaurentU]] = [None] * (m + 1)
    out[0] = LaurentU.monomial(0, 1)
    for j in range(m):
        terms = {p - j - 1: (-1) ** (m - j - 1) * comb(m + 1, p) for p in range(j + 1)}
        out[m - j] = LaurentU.from_terms(terms)
    return tuple(out)


def newton_power_sums(e: Sequence[LaurentU], k_max: int) -> List[LaurentU]:
    """p_0..p_k_max from e_0..e_n by Newton's identities"""
    n = len(e) - 1
    p = [LaurentU.monomial(0, n)]
    for k in range(1, k_max + 1):
        total = LaurentU.monomial(0, 0)
        for i in range(1, min(k - 1, n) + 1):
            term = e[i] * p[k - i]
            total = total + term if i % 2 else total - term
        if k <= n:
            last = e[k] * k
            total = total + last if k % 2 else total - last
        p.append(total)
    return p


def reciprocal_elementary(e: Sequence[LaurentU]) -> Tuple[LaurentU, ...]:
    """e_j of the reciprocal roots: e_(n-j) / e_n, with e_n a monomial in u"""
    n = len(e) - 1
    inverse = e[n].monomial_inverse()
    return tuple(e[n - j] * inverse for j in range(n + 1))


def _power_sum_table(e: Sequence[LaurentU], window: int) -> Dict[int, LaurentU]:
    table = dict(enumerate(newton_power_sums(e, window)))
    negative = newton_power_sums(reciprocal_elementary(e), window)
    for k in range(1, window + 1):
        table[-k] = negative[k]
    return table


@dataclass(frozen=True)
class SymContext:
    """Elementary symmetric functions of both root families and their power sums on [-window, window]"""

    m: int
    window: int
    e_all: Tuple[LaurentU, ...]
    e_others: Tuple[LaurentU, ...]
    p_all: Dict[int, LaurentU] = field(repr=False)
    p_others: Dict[int, LaurentU] = field(repr=False)

    def elementary(self, family: Family) -> Tuple[LaurentU, ...]:
        """e_j of the chosen family"""
        return self.e_all if family == "all" else self.e_others

    def power_sum(self, family: Family, k: int) -> LaurentU:
        """p_k of the chosen family; k must lie in the window"""
        if abs(k) > self.window:
            raise ResourceCapExceeded(f"power sum p_{k} (window)", abs(k), self.window)
        return (self.p_all if family == "all" else self.p_others)[k]

    def ensure(self, k: int) -> "SymContext":
        """A context whose window contains +-k; self when it already does"""
        if abs(k) <= self.window:
            return self
        window = max(abs(k), 2 * self.window)
        if abs(k) > MAX_POWER_SUM_WINDOW:
            raise ResourceCapExceeded("power-sum window", abs(k), MAX_POWER_SUM_WINDOW)
        logger.debug("growing power-sum window for m=%d from %d to %d", self.m, self.window, window)
        return sym_context(self.m, window=min(window, MAX_POWER_SUM_WINDOW))


def sym_context(m: int, N: int = DEFAULT_SERIES_ORDER, window: Optional[int] = None) -> SymContext:
    """Tables for the roots of (1+U)^(m+1) = U^m v, window (m+2) N by default"""
    if m < 1:
        raise InvalidInputError(f"need m >= 1, got {m}")
    window = window or POWER_SUM_WINDOW_FACTOR * (m + 2) * max(N, 1)
    if window > MAX_POWER_SUM_WINDOW:
        raise ResourceCapExceeded("power-sum window", window, MAX_POWER_SUM_WINDOW)
    e_all = elementary_all(m)
    e_others = elementary_others(m)
    return SymContext(m=m, window=window, e_all=e_all, e_others=e_others,
                      p_all=_power_sum_table(e_all, window), p_others=_power_sum_table(e_others, window))


def monomial_symmetric(parts: Sequence[int], power_sum: Callable[[int], LaurentU], prec: int) -> LaurentU:
    """m_lambda from power sums: set-partition Moebius inversion, then the multiplicity factor"""
    parts = tuple(parts)
    total = LaurentU.monomial(0, 0)
    for blocks in multiset_partitions(list(range(len(parts)))):
        weight = 1
        term = LaurentU.monomial(0, 1)
        for block in blocks:
            weight *= (-1) ** (len(block) - 1) * factorial(len(block) - 1)
            term = term.mul(power_sum(sum(parts[i] for i in block)), prec)
        total = total + term * weight
    repeats = prod(factorial(c) for c in Counter(parts).values())
    return total * QQ(1, repeats)


def reduce_symmetric(ctx: SymContext, family: Family, terms: Mapping[Tuple[int, ...], Scalar],
                     prec: int) -> LaurentU:
    """sum over lambda of coefficient * m_lambda(family), as a Laurent z-series"""
    total = LaurentU.monomial(0, 0)
    for parts, coeff in terms.items():
        needed = max(abs(sum(parts)), max((abs(p) for p in parts), default=0))
        if needed > ctx.window:
            raise ResourceCapExceeded(f"power sums up to {needed} (window)", needed, ctx.window)
        reduced = monomial_symmetric(parts, lambda k: ctx.power_sum(family, k), prec)
        if isinstance(coeff, LaurentU):
            total = total + reduced.mul(coeff, prec)
        else:
            total = total + reduced * coeff
    return total.truncate(prec)


def v_to_laurent(P: PolyElement, m: int) -> LaurentU:
    """A polynomial in v (VRING) written in u"""
    v = v_laurent(m)
    total = LaurentU.monomial(0, 0)
    power = LaurentU.monomial(0, 1)
    for d in range(P.degree(V) + 1 if P else 0):
        coeff = P.coeff_wrt(V, d)
        if coeff:
            total = total + power * coeff.set_ring(ZRING)
        power = power * v
    return total


def laurent_to_v(L: LaurentU, m: int) -> PolyElement:
    """The polynomial in v equal to L, by removing leading terms in u"""
    v = v_laurent(m)
    powers = [LaurentU.monomial(0, 1)]
    remainder = L
    result = VRING.zero
    while not remainder.is_zero():
        top = remainder.top_degree()
        if top < 0:
            raise CancellationFailure("laurent_to_v", f"{L} is not a polynomial in v (remainder {remainder})")
        while len(powers) <= top:
            powers.append(powers[-1] * v)
        coeff = remainder.coefficient(top)
        remainder = remainder - powers[top] * coeff
        result += coeff.set_ring(VRING) * V ** top
    return result


def check_power_sums_at_point(ctx: SymContext, family: Family, u_value, k_max: int = 8) -> CheckReport:
    """p_k(u_value) against sums of exact numeric roots for |k| <= k_max"""
    from algebra.roots import sample_roots

    name = "symmetric"
    roots = sample_roots(ctx.m, u_value)
    if roots is None:
        return CheckReport.skipped(name, ctx.m, detail=f"no exact roots at u={u_value}")
    if family == "others":
        roots = roots[1:]
    context = ctx.ensure(k_max)
    for k in range(-k_max, k_max + 1):
        expected = sum((r ** k for r in roots), QQ(0))
        got = context.power_sum(family, k).evaluate(u_value)
        if got != ZRING(expected):
            return CheckReport.failed(name, ctx.m, detail=f"p_{k} of {family} roots at u={u_value}: {got} vs {expected}")
    return CheckReport.passed(name, ctx.m, detail=f"{family} roots at u={u_value}, |k| <= {k_max}")
