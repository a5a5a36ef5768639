"""
Explicit roots of (1+U)^(m+1) = U^m v(u) for m = 1 and m = 2

For m = 2 the roots live in Q(u)[sqrt(1+4u)]; writing u = (s^2 - 1)/4 makes
the square root equal to s, so all three roots are rational functions of s.
"""
from math import isqrt
from typing import List, Optional, Tuple

from sympy.polys.domains import QQ

from algebra.rings import S, SRING, U, ZRING
from algebra.urat import URat
from errors import InvalidInputError


def u_of_s() -> URat:
    """u = (s^2 - 1)/4"""
    return URat.of(S ** 2 - 1, SRING(4), S)


def explicit_roots(m: int) -> Tuple[URat, ...]:
    """(u_0, ..., u_m): over Q(u) for m = 1, over Q(s) for m = 2"""
    if m == 1:
        return URat.poly(U, U), URat.of(ZRING.one, U, U)
    if m == 2:
        return (u_of_s(),
                URat.of(2 * (S + 1), (S - 1) ** 2, S),
                URat.of(-2 * (S - 1), (S + 1) ** 2, S))
    raise InvalidInputError(f"explicit roots are only available for m <= 2, got m={m}")


def radical_display_roots() -> Tuple[URat, URat]:
    """(1 + 3u +- (1+u) sqrt(1+4u)) / (2u^2) with sqrt(1+4u) = s"""
    u = u_of_s()
    s = URat.poly(S, S)
    head = 1 + u * 3
    tail = (1 + u) * s
    den = u * u * 2
    return (head + tail) / den, (head - tail) / den


def v_image(roots: Tuple[URat, ...]) -> URat:
    """v = (1+u_0)^(m+1) / u_0^m in the parameter of the roots"""
    m = len(roots) - 1
    base = roots[0]
    return (1 + base) ** (m + 1) / base ** m


def roots_satisfy_equation(roots: Tuple[URat, ...]) -> bool:
    """Each root r has (1+r)^(m+1) = r^m v"""
    m = len(roots) - 1
    v = v_image(roots)
    return all((1 + r) ** (m + 1) == r ** m * v for r in roots)


def sample_roots(m: int, u_value) -> Optional[List]:
    """The m+1 roots at a rational u, or None when they are not rational"""
    u = QQ.convert(u_value)
    if u == 0 or u == -1:
        return None
    if m == 1:
        return [u, 1 / u]
    if m == 2:
        square = 1 + 4 * u
        if square < 0 or square.denominator != 1 or isqrt(int(square)) ** 2 != int(square):
            return None
        s = QQ(isqrt(int(square)))
        return [u, 2 * (s + 1) / (s - 1) ** 2, -2 * (s - 1) / (s + 1) ** 2]
    return None
