"""
Closed forms of the transformed series and the checks tying them to the solver
"""
import logging
from math import factorial

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement

from algebra.rings import U, Z, ZRING, ZY, z_valuation, zexp, zmul, ztrunc
from errors import CancellationFailure
from reports import CheckReport
from series.solver import _validate, solve_functional_equation
from series.substitution import substitute_t_of_z, transformed_poly
from series.zseries import ZSeries

logger = logging.getLogger(__name__)


def closed_form_G1_poly(m: int, N: int) -> PolyElement:
    """(1+u) e^((m+1)z - (m-1)zu) (1 + (1 - e^(mzu))/u) below z^(N+1)"""
    _validate(m, N)
    prec = N + 1
    try:
        quotient = (1 - zexp(m * Z * U, prec)).exquo(U)
    except ExactQuotientFailed:
        raise CancellationFailure("closed_form_G1", "u does not divide 1 - e^(mzu)") from None
    head = zmul(1 + U, zexp((m + 1) * Z - (m - 1) * Z * U, prec), prec)
    return zmul(head, 1 + quotient, prec)


def closed_form_G1(m: int, N: int) -> ZSeries:
    """ZSeries form of closed_form_G1_poly"""
    return ZSeries.from_ring_poly(closed_form_G1_poly(m, N), N).assert_polynomial("closed_form_G1")


def labelled_total_z(m: int, N: int) -> PolyElement:
    """(1 - mz) e^((m+1)z) below z^(N+1)"""
    prec = N + 1
    return ztrunc((1 - m * Z) * zexp((m + 1) * Z, prec), prec)


def closed_form_m1_trivariate_poly(N: int) -> PolyElement:
    """Double-sum form of G(z; u, y) for m = 1"""
    _validate(1, N)
    prec = N + 1
    inner = ZRING.zero
    for i in range(prec):
        for j in range(prec - i):
            weight = Z ** (i + j) * ZY ** i * (ZY - 1) ** j * QQ(1, factorial(i) * factorial(j))
            if i <= j:
                inner += U ** (j - i) * weight
            else:
                inner -= U ** (i - j - 1) * weight
    return zmul((1 + U) * zexp(2 * ZY * Z, prec), inner, prec)


def closed_form_m1_trivariate(N: int) -> ZSeries:
    """ZSeries form of closed_form_m1_trivariate_poly"""
    return ZSeries.from_ring_poly(closed_form_m1_trivariate_poly(N), N)


def bessel_form_u0(N: int) -> PolyElement:
    """F(t; 1, y) for m = 1 as a series in z and y"""
    prec = N + 1
    total = ZRING.zero
    for i in range(prec):
        if 2 * i < prec:
            total += Z ** (2 * i) * ZY ** i * (ZY - 1) ** i * QQ(1, factorial(i) ** 2)
        if 2 * i + 1 < prec:
            total -= Z ** (2 * i + 1) * ZY ** (i + 1) * (ZY - 1) ** i * QQ(1, factorial(i + 1) * factorial(i))
    return zmul(zexp(2 * ZY * Z, prec), total, prec)


def _mismatch_order(a: PolyElement, b: PolyElement):
    return z_valuation(a - b)


def theorem_main_check(m: int, N: int) -> CheckReport:
    """The y = 1 solver pipeline against G_1, and F(t; 1, 1) against (1 - mz) e^((m+1)z)"""
    name = "theorem-main"
    order = _mismatch_order(transformed_poly(m, N, True), closed_form_G1_poly(m, N))
    if order is not None:
        return CheckReport.failed(name, m, N, "F(t;x,1) differs from (1+u)e^((m+1)z-(m-1)zu)(1+(1-e^(mzu))/u)",
                                  order=order)
    F = solve_functional_equation(m, N).at(x=1, y=1)
    order = _mismatch_order(substitute_t_of_z(F, m, N), labelled_total_z(m, N))
    if order is not None:
        return CheckReport.failed(name, m, N, "F(t;1,1) differs from (1-mz)e^((m+1)z)", order=order)
    return CheckReport.passed(name, m, N, "G(u,1) = G_1(u) and F(t;1,1) = (1-mz)e^((m+1)z)")


def theorem_m1_check(N: int) -> CheckReport:
    """The m = 1 trivariate pipeline against the double sum, the [u^>=] form and the u = 0 form"""
    from algebra.phi import theorem_m1_nonneg_form

    name = "theorem-m1"
    G = transformed_poly(1, N)
    checks = (
        ("double sum", closed_form_m1_trivariate_poly(N)),
        ("[u^>=] form", theorem_m1_nonneg_form(N)),
    )
    for label, expected in checks:
        order = _mismatch_order(G, expected)
        if order is not None:
            return CheckReport.failed(name, 1, N, f"solver pipeline differs from the {label}", order=order)
    order = _mismatch_order(G.subs(U, 0), bessel_form_u0(N))
    if order is not None:
        return CheckReport.failed(name, 1, N, "u = 0 specialization differs from the Bessel form", order=order)
    if closed_form_m1_trivariate_poly(N).subs(ZY, 1) != closed_form_G1_poly(1, N):
        return CheckReport.failed(name, 1, N, "double sum at y = 1 differs from G_1")
    return CheckReport.passed(name, 1, N, "double sum, [u^>=] form and Bessel form agree with the solver")
