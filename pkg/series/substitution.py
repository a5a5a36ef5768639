"""
Change of variables t = z e^(-m(m+1)z), x = (1+u) e^(-mzu) and the transformed equation in u
"""
import logging
from functools import lru_cache

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.ring_series import rs_series_inversion
from sympy.polys.rings import PolyElement

from algebra.laurent import LaurentU
from algebra.rings import U, Z, ZRING, ZX, ZY, move, z_valuation, zexp, zmul, ztrunc
from errors import CancellationFailure, InvalidInputError
from reports import CheckReport
from series.solver import _validate, solve_functional_equation
from series.tseries import TSeries
from series.zseries import ZSeries

logger = logging.getLogger(__name__)


def t_of_z(m: int, prec: int) -> PolyElement:
    """z e^(-m(m+1)z) truncated below z^prec"""
    return ztrunc(Z * zexp(-m * (m + 1) * Z, prec), prec)


def x_of_zu(m: int, prec: int) -> PolyElement:
    """(1+u) e^(-mzu) truncated below z^prec"""
    return zmul(1 + U, zexp(-m * Z * U, prec), prec)


def substitute_t_of_z(F: TSeries, m: int, N: int) -> PolyElement:
    """F(t(z)) up to z^N, coefficients in Q[x, y]"""
    if F.order < N:
        raise InvalidInputError(f"series known to order {F.order}, substitution needs {N}")
    prec = N + 1
    t = t_of_z(m, prec)
    # Horner in t on the ordinary coefficients a_n / n!
    result = ZRING.zero
    factorial = QQ(1)
    scaled = []
    for n in range(N + 1):
        if n:
            factorial *= n
        scaled.append(move(F[n], ZRING) * (1 / factorial))
    for coeff in reversed(scaled):
        result = coeff + zmul(result, t, prec)
    return ztrunc(result, prec)


def _substitute_x(series: PolyElement, m: int, prec: int) -> PolyElement:
    xi = x_of_zu(m, prec)
    top = series.degree(ZX) if series else 0
    result = ZRING.zero
    for k in range(top, -1, -1):
        result = series.coeff_wrt(ZX, k) + zmul(result, xi, prec)
    return ztrunc(result, prec)


def substitute_x_of_zu(series: PolyElement, m: int, N: int) -> ZSeries:
    """x replaced by (1+u) e^(-mzu); coefficients become polynomials in u and y"""
    return ZSeries.from_ring_poly(_substitute_x(series, m, N + 1), N).assert_polynomial("substitute_x_of_zu")


@lru_cache(maxsize=32)
def substituted_t(m: int, N: int) -> PolyElement:
    """Solver output after t = z e^(-m(m+1)z)"""
    _validate(m, N)
    return substitute_t_of_z(solve_functional_equation(m, N), m, N)


@lru_cache(maxsize=32)
def transformed_poly(m: int, N: int, y_one: bool = False) -> PolyElement:
    """G(z; u, y) (or G(z; u, 1)) as a polynomial in z, u, y truncated below z^(N+1)"""
    series = substituted_t(m, N)
    if y_one:
        series = series.subs(ZY, 1)
    result = _substitute_x(series, m, N + 1)
    logger.debug("transformed series m=%d N=%d y_one=%s: %d terms", m, N, y_one, len(result))
    return result


def transformed_series(m: int, N: int, y_one: bool = False) -> ZSeries:
    """ZSeries form of transformed_poly"""
    return ZSeries.from_ring_poly(transformed_poly(m, N, y_one), N).assert_polynomial("transformed_series")


def divided_difference_u(H: PolyElement) -> PolyElement:
    """(H(u) - H(0)) / u"""
    try:
        return (H - H.subs(U, 0)).exquo(U)
    except ExactQuotientFailed:
        raise CancellationFailure("divided_difference_u", f"u does not divide {H} - H(0)") from None


def lambda_poly(H: PolyElement, prec: int) -> PolyElement:
    """Lambda on a series with polynomial coefficients: (H(u) - H(0)) (1+u) e^(zu) / u"""
    return zmul(divided_difference_u(H) * (1 + U), zexp(Z * U, prec), prec)


def _first_difference(lhs: PolyElement, rhs: PolyElement, prec: int):
    return z_valuation(ztrunc(lhs - rhs, prec))


def check_transformed_equation(m: int, N: int) -> CheckReport:
    """dG/dy against its three right-hand sides: with Delta_u, with Lambda, and expanded over the g_j"""
    name = "transformed-equation"
    prec = N + 1
    G = transformed_poly(m, N)
    G1 = transformed_poly(m, N, True)
    lhs = G.diff(ZY)

    if G.subs(ZY, 0) != x_of_zu(m, prec):
        return CheckReport.failed(name, m, N, "G(u,0) differs from (1+u)e^(-mzu)")

    # uG(u,1) / ((1+u)e^(-mzu) - 1) = G(u,1) / (1 + (1+u)(e^(-mzu) - 1)/u)
    reduced = 1 + divided_difference_u(zmul(1 + U, zexp(-m * Z * U, prec) - 1, prec))
    weight = zmul(G1, rs_series_inversion(reduced, Z, prec), prec)
    H = G
    for _ in range(m):
        H = zmul(weight, divided_difference_u(H), prec)
    rhs = zmul(Z * (1 + U) * zexp(-m * Z * U - m * (m + 1) * Z, prec), H, prec)
    order = _first_difference(lhs, rhs, prec)
    if order is not None:
        return CheckReport.failed(name, m, N, "Delta_u form", order=order)

    H = G
    gs = []
    for _ in range(m):
        gs.append(H.subs(U, 0))
        H = lambda_poly(H, prec)
    rhs = zmul(Z * x_of_zu(m, prec), H, prec)
    order = _first_difference(lhs, rhs, prec)
    if order is not None:
        return CheckReport.failed(name, m, N, "Lambda form", order=order)

    # z v G - z v sum_j g_j A^j with z v A^j = z (1+u)^(m+1-j) u^(j-m) e^(-jzu)
    expanded = LaurentU.of(Z * G * (1 + U) ** (m + 1), m)
    for j, g in enumerate(gs):
        term = zmul(g * Z * (1 + U) ** (m + 1 - j), zexp(-j * Z * U, prec) if j else ZRING.one, prec)
        expanded = expanded - LaurentU.of(term, m - j)
    expanded = expanded.truncate(prec)
    if expanded != LaurentU.of(ztrunc(lhs, prec)):
        return CheckReport.failed(name, m, N, "expanded form with the g_j")

    degrees = ", ".join(f"g_{j}: deg_y {g.degree(ZY) if g else 0}" for j, g in enumerate(gs))
    return CheckReport.passed(name, m, N, f"three forms agree; g_j observed in Q[y][[z]] ({degrees})")
