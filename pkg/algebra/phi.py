"""
Extraction of G(z; u, y) from its symmetric linear combination

Starting from Phi_m(v) = v e^(zyv), the series Phi_(m-1), ..., Phi_0 are found by
a descending induction: the positive part in u of Phi_(k-1) comes from monomial
symmetric functions of A(u_1), ..., A(u_m), and Phi_(k-1) itself is rebuilt from
that positive part as a symmetric function of all m+1 roots.
"""
import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement
from sympy.utilities.iterables import partitions

from algebra.laurent import LaurentU, laurent_exp
from algebra.rings import U, V, VY, VZ, Z, ZY, zexp, zmul
from algebra.symmetric import (
    SymContext,
    laurent_to_v,
    monomial_symmetric,
    sym_context,
    v_laurent,
    v_to_laurent,
)
from errors import CancellationFailure, InvalidInputError
from reports import PhiRecord
from series.poly import poly_to_json

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiTable:
    """Phi_0..Phi_m (polynomials in z, v, y) and the positive parts Phi_k^>(u) for k < m"""

    m: int
    N: int
    phis: Tuple[PolyElement, ...]
    positive_parts: Tuple[LaurentU, ...]

    def __getitem__(self, k: int) -> PolyElement:
        return self.phis[k]

    def to_record(self) -> PhiRecord:
        """JSON form of the table"""
        return PhiRecord(m=self.m, N=self.N, phi=[poly_to_json(p) for p in self.phis],
                         positive_parts=[poly_to_json(p.poly) for p in self.positive_parts])


def amplitude_power_sum(ctx: SymContext, r: int, prec: int) -> LaurentU:
    """sum over i >= 1 of (u_i^(1-m) (1+u_i)^m e^(-z u_i))^r, so that A(u_i) = this base / v"""
    m = ctx.m
    total = LaurentU.monomial(0, 0)
    for n in range(prec):
        inner = LaurentU.monomial(0, 0)
        for c in range(r * m + 1):
            inner = inner + ctx.power_sum("others", r * (1 - m) + n + c) * comb(r * m, c)
        total = total + inner * (Z ** n * QQ((-r) ** n, factorial(n)))
    return total.truncate(prec)


def _window_for(m: int, prec: int) -> int:
    return max(m * (m - 1), m + prec)


def _positive_to_v(ctx: SymContext, positive: LaurentU) -> Tuple[PolyElement, SymContext]:
    """Phi(v) = sum_i (Phi^>(u_i) - Phi^>(-1)) as a polynomial in v"""
    m = ctx.m
    ctx = ctx.ensure(positive.top_degree() or 0)
    total = LaurentU.monomial(0, 0)
    for e, coeff in positive.terms():
        total = total + (ctx.power_sum("all", e) - (m + 1) * (-1) ** e) * coeff
    return laurent_to_v(total, m), ctx


def phi_recursion(m: int, N: int, ctx: Optional[SymContext] = None) -> PhiTable:
    """Phi_0..Phi_m below z^(N+1)"""
    if m < 1 or N < 0:
        raise InvalidInputError(f"need m >= 1 and N >= 0, got m={m}, N={N}")
    prec = N + 1
    ctx = (ctx or sym_context(m, N)).ensure(_window_for(m, prec))
    v = v_laurent(m)

    amplitudes: Dict[int, LaurentU] = {}

    def amplitude(r: int) -> LaurentU:
        if r not in amplitudes:
            amplitudes[r] = amplitude_power_sum(ctx, r, prec)
        return amplitudes[r]

    phis: Dict[int, PolyElement] = {m: zmul(V, zexp(VZ * VY * V, prec), prec)}
    positives: Dict[int, LaurentU] = {}
    for k in range(m, 0, -1):
        depth = m - k + 1
        numerator = LaurentU.monomial(0, 0)
        for j in range(k, m + 1):
            d = j - k + 1
            M = LaurentU.monomial(0, 0)
            for parts in partitions(d):
                lam = [p for p, mult in sorted(parts.items(), reverse=True) for _ in range(mult)]
                length = len(lam)
                if length > k:
                    continue
                M = M + monomial_symmetric(lam, amplitude, prec) * comb(m - length, k - length)
            numerator = numerator + v_to_laurent(phis[j], m).mul(v ** (depth - d), prec).mul(M, prec)
        # divide by v^depth = (1+u)^((m+1) depth) u^(-m depth)
        shifted = numerator * LaurentU.monomial(m * depth, 1)
        X = shifted.exquo((1 + U) ** ((m + 1) * depth), f"symmetric sum for Phi_{k - 1}")
        positive = X.positive_part() * QQ(-1, comb(m, k))
        phi, ctx = _positive_to_v(ctx, positive)
        if phi.coeff_wrt(V, 0):
            raise CancellationFailure("phi_recursion", f"Phi_{k - 1} has a nonzero constant term in v")
        phis[k - 1] = phi
        positives[k - 1] = positive
        logger.debug("Phi_%d for m=%d: %d terms", k - 1, m, len(phi))
    return PhiTable(m=m, N=N, phis=tuple(phis[k] for k in range(m + 1)),
                    positive_parts=tuple(positives[k] for k in range(m)))


def assemble_laurent(phi: PhiTable) -> LaurentU:
    """sum_k Phi_k(v) A(u)^k, cleared of its (1+u) denominators"""
    m, prec = phi.m, phi.N + 1
    total = LaurentU.monomial(0, 0)
    for k in range(m + 1):
        weight = U ** k * (1 + U) ** (m - k) * zexp(-k * Z * U, prec)
        total = total + v_to_laurent(phi[k], m).mul(LaurentU.of(weight), prec)
    result = total.exquo((1 + U) ** m, "assemble_F")
    if not result.is_polynomial():
        raise CancellationFailure("assemble_F", f"negative powers of u survive: {result}")
    return result


def assemble_F(ctx: SymContext, phi: PhiTable, N: int):
    """F = sum_k Phi_k(v) A(u)^k as a ZSeries with polynomial coefficients"""
    from series.zseries import ZSeries

    if ctx.m != phi.m or N > phi.N:
        raise InvalidInputError(f"table for m={phi.m}, N={phi.N} cannot give m={ctx.m}, N={N}")
    return ZSeries.from_laurent(assemble_laurent(phi), N).assert_polynomial("assemble_F")


def positive_part_laurent(ctx: SymContext, phi: PhiTable) -> LaurentU:
    """F = P - P(-1) with P = [u^>] sum_(k>=1) Phi_k(v) (A(u)^k - (1/m) sum_(i>=1) A(u_i)^k)"""
    m, prec = phi.m, phi.N + 1
    ctx = ctx.ensure(_window_for(m, prec))
    total = LaurentU.monomial(0, 0)
    for k in range(1, m + 1):
        own = LaurentU.of(U ** k * (1 + U) ** ((m + 1) * m - k) * zexp(-k * Z * U, prec))
        others = amplitude_power_sum(ctx, k, prec).mul(
            LaurentU.of(U ** (m * k) * (1 + U) ** ((m + 1) * (m - k))), prec)
        total = total + v_to_laurent(phi[k], m).mul(own - others * QQ(1, m), prec)
    T = total.exquo((1 + U) ** ((m + 1) * m), "positive_part_form")
    P = T.positive_part()
    return P - P.evaluate(-1)


def positive_part_form(ctx: SymContext, phi: PhiTable, N: int):
    """ZSeries form of positive_part_laurent"""
    from series.zseries import ZSeries

    return ZSeries.from_laurent(positive_part_laurent(ctx, phi), N).assert_polynomial("positive_part_form")


def reconstruct_from_positive_part(P: PolyElement, m: int, ctx: Optional[SymContext] = None) -> PolyElement:
    """P(0) + sum_i (P^>(u_i) - P^>(-1)) rebuilt as a polynomial in v"""
    ctx = ctx or sym_context(m)
    positive = v_to_laurent(P, m).positive_part()
    rebuilt, _ = _positive_to_v(ctx, positive)
    return P.coeff_wrt(V, 0) + rebuilt


def theorem_m1_nonneg_form(N: int) -> PolyElement:
    """(1+u) e^(2yz) [u^>=](e^(zu(y-1) + zy/u) - u^(-1) e^(z(y-1)/u + zyu)) below z^(N+1)"""
    prec = N + 1
    first = LaurentU.from_terms({1: Z * (ZY - 1), -1: Z * ZY})
    second = LaurentU.from_terms({-1: Z * (ZY - 1), 1: Z * ZY})
    inner = laurent_exp(first, prec) - laurent_exp(second, prec).divide_by_u(1)
    kept = inner.nonneg_part()
    return zmul((1 + U) * zexp(2 * ZY * Z, prec), kept.poly, prec)
