"""
Exact polynomials in x, y, q and the divided-difference operators
"""
from typing import Dict, Optional

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from errors import CancellationFailure, InvalidInputError

# Coefficient ring of t-series
TRING, X, Y, Q = ring("x,y,q", QQ)

Poly = PolyElement


def delta(poly: Poly) -> Poly:
    """(S(x) - S(1)) / (x - 1)"""
    return _exact_quotient(poly - poly.subs(X, 1), X - 1, "delta")


def delta_q(poly: Poly) -> Poly:
    """(S(qx) - S(1)) / (qx - 1)"""
    return _exact_quotient(poly.compose(X, Q * X) - poly.subs(X, 1), Q * X - 1, "delta_q")


def _exact_quotient(numerator: Poly, divisor: Poly, name: str) -> Poly:
    try:
        return numerator.exquo(divisor)
    except ExactQuotientFailed:
        raise CancellationFailure(name, f"{divisor} does not divide {numerator}") from None


def integrate_y(poly: Poly) -> Poly:
    """Antiderivative in y vanishing at y = 0"""
    terms = {}
    for (ex, ey, eq), coeff in poly.items():
        terms[(ex, ey + 1, eq)] = coeff * QQ(1, ey + 1)
    return TRING.from_dict(terms) if terms else TRING.zero


def specialize(poly: Poly, x: Optional[int] = None, y: Optional[int] = None, q: Optional[int] = None) -> Poly:
    """Substitute numbers for some of the variables, staying in the ring"""
    for gen, value in ((X, x), (Y, y), (Q, q)):
        if value is not None:
            poly = poly.subs(gen, value)
    return poly


def has_nonnegative_integer_coefficients(poly: Poly) -> bool:
    """True when every coefficient is a nonnegative integer"""
    return all(c >= 0 and c.denominator == 1 for c in poly.values())


def format_rational(value) -> str:
    """Exact decimal integer or p/q string"""
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str):
    """Inverse of format_rational"""
    try:
        if "/" in text:
            num, den = text.split("/")
            return QQ(int(num), int(den))
        return QQ(int(text))
    except ValueError:
        raise InvalidInputError(f"'{text}' is not an exact rational") from None


def monomial_key(symbols, monom) -> str:
    """Text key such as x^2*y for an exponent tuple"""
    parts = []
    for name, power in zip(symbols, monom):
        if power == 1:
            parts.append(str(name))
        elif power:
            parts.append(f"{name}^{power}")
    return "*".join(parts) or "1"


def poly_to_json(poly: PolyElement) -> Dict[str, str]:
    """Monomial to coefficient map with sorted keys"""
    symbols = poly.ring.symbols
    return {k: v for k, v in sorted((monomial_key(symbols, m), format_rational(c)) for m, c in poly.items())}


def poly_from_json(data: Dict[str, str], target=TRING) -> PolyElement:
    """Inverse of poly_to_json for the given ring"""
    names = [str(s) for s in target.symbols]
    terms = {}
    for key, value in data.items():
        monom = [0] * len(names)
        if key != "1":
            for factor in key.split("*"):
                name, _, power = factor.partition("^")
                if name not in names:
                    raise InvalidInputError(f"unknown variable '{name}' in '{key}'")
                monom[names.index(name)] += int(power) if power else 1
        terms[tuple(monom)] = parse_rational(value)
    return target.from_dict(terms) if terms else target.zero
