"""
A(u) = u e^(-zu) / (1+u) and the operator Lambda(H) = (H(u) - H(0)) / A(u)

Series here are URat values whose numerators are truncated polynomials in z.
"""
import logging
from math import factorial
from typing import List, Tuple

from sympy.polys.domains import QQ

from algebra.rings import U, Z, ZRING, gen_named, z_valuation, zexp, ztrunc
from algebra.urat import URat
from errors import InvalidInputError
from reports import CheckReport

logger = logging.getLogger(__name__)


def exp_z_times(w: URat, prec: int, sign: int = -1) -> URat:
    """e^(sign z w) below z^prec, for w free of z"""
    z = gen_named(w.ring, "z")
    top = prec - 1
    num = w.ring.zero
    for n in range(prec):
        num += (sign * z) ** n * w.num ** n * w.den ** (top - n) * QQ(1, factorial(n))
    return URat.of(ztrunc(num, prec), w.den ** top, w.var)


def A_of(expr: URat, N: int) -> URat:
    """A(expr) = expr e^(-z expr) / (1 + expr) below z^(N+1)"""
    prec = N + 1
    try:
        ratio = expr / (1 + expr)
    except (ZeroDivisionError, InvalidInputError):
        raise InvalidInputError(f"A is not defined at {expr} = -1") from None
    return ratio.mul(exp_z_times(expr, prec), prec)


def inverse_A(var, prec: int) -> URat:
    """1/A(u) = (1+u) e^(zu) / u for the main variable var"""
    z = gen_named(var.ring, "z")
    return URat.of(((1 + var) * zexp(z * var, prec)), var, var).truncate(prec)


def lambda_op(H: URat, N: int) -> URat:
    """Lambda(H) below z^(N+1); H must be finite at u = 0"""
    prec = N + 1
    at_zero = H.at(0)
    return (H - at_zero).mul(inverse_A(H.var, prec), prec)


def lambda_iterates(H: URat, k: int, N: int) -> Tuple[List[URat], URat]:
    """g_0..g_(k-1) with g_j = Lambda^(j)(H) at u = 0, and Lambda^(k)(H)"""
    gs = []
    current = H
    for _ in range(k):
        gs.append(current.at(0))
        current = lambda_op(current, N)
    return gs, current


def lambda_expansion_check(H: URat, k: int, N: int) -> CheckReport:
    """Lambda^(k) H = A^(-k) (H - sum_(j<k) g_j A^j) below z^(N+1)"""
    name = "lambda"
    prec = N + 1
    gs, lhs = lambda_iterates(H, k, N)
    A = A_of(URat.poly(H.var, H.var), N)
    inner = H
    power = URat.poly(H.ring.one, H.var)
    for g in gs:
        inner = inner - g.mul(power, prec)
        power = power.mul(A, prec)
    rhs = inner
    inv = inverse_A(H.var, prec)
    for _ in range(k):
        rhs = rhs.mul(inv, prec)
    if lhs != rhs:
        order = z_valuation((lhs - rhs).num)
        return CheckReport.failed(name, None, N, f"Lambda^({k}) of {H} differs from its A-expansion", order=order)
    logger.debug("Lambda expansion verified for k=%d on %s", k, H)
    return CheckReport.passed(name, None, N, f"k={k}, H={H}")


def sample_inputs(m: int, N: int) -> List[URat]:
    """Test series: 1, u^2, (1+u) e^(-mzu) and 1/(1-u) + zu"""
    prec = N + 1
    z = gen_named(ZRING, "z")
    return [
        URat.poly(ZRING.one, U),
        URat.poly(U ** 2, U),
        URat.poly(ztrunc((1 + U) * zexp(-m * z * U, prec), prec), U),
        URat.of(ztrunc(1 + z * U * (1 - U), prec), 1 - U, U),
    ]


def lambda_suite_check(m: int, N: int, k_max: int = 3) -> CheckReport:
    """Lambda(A) = 1, Lambda(1) = 0, then the A-expansion for every sample input and k <= k_max"""
    name = "lambda"
    prec = N + 1
    A = A_of(URat.poly(U, U), N)
    if lambda_op(A, N) != URat.poly(ZRING.one, U):
        return CheckReport.failed(name, m, N, "Lambda(A) is not 1")
    if not lambda_op(URat.poly(ZRING.one, U), N).is_zero():
        return CheckReport.failed(name, m, N, "Lambda(1) is not 0")
    if lambda_op(URat.poly(U, U), N) != URat.poly(ztrunc((1 + U) * zexp(Z * U, prec), prec), U):
        return CheckReport.failed(name, m, N, "Lambda(u) is not (1+u)e^(zu)")
    for H in sample_inputs(m, N):
        for k in range(1, k_max + 1):
            report = lambda_expansion_check(H, k, N)
            if not report.ok:
                return report.model_copy(update={"m": m})
    return CheckReport.passed(name, m, N, f"{len(sample_inputs(m, N))} inputs, k <= {k_max}")
