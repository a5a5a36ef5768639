"""
Laurent polynomials in u, stored as poly * u^(-shift)

The polynomial part may live in any ring that has a generator called u, so the
same type carries plain Laurent polynomials and truncated z-series whose
coefficients are Laurent in u.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement
from typing_extensions import Self

from algebra.rings import ZRING, gen_named, z_gen, zmul, ztrunc
from errors import CancellationFailure, InvalidInputError

Scalar = Union[int, PolyElement]


def _u_index(ring_) -> int:
    return [str(s) for s in ring_.symbols].index("u")


def _min_u_exponent(poly: PolyElement, index: int) -> int:
    return min(monom[index] for monom in poly.itermonoms())


@dataclass(frozen=True)
class LaurentU:
    """poly * u^(-shift) in canonical form: when shift > 0, u does not divide poly"""

    poly: PolyElement
    shift: int = 0

    @classmethod
    def of(cls, poly: PolyElement, shift: int = 0) -> Self:
        """Normalise poly * u^(-shift)"""
        if not poly:
            return cls(poly.ring.zero, 0)
        index = _u_index(poly.ring)
        common = min(_min_u_exponent(poly, index), shift) if shift > 0 else 0
        if shift < 0:
            poly = poly * gen_named(poly.ring, "u") ** (-shift)
            shift = 0
        elif common:
            poly = _divide_u_power(poly, index, common)
            shift -= common
        return cls(poly, shift)

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar], ring_=ZRING) -> Self:
        """Build sum c_e u^e from an exponent map"""
        if not terms:
            return cls(ring_.zero, 0)
        u = gen_named(ring_, "u")
        low = min(terms)
        shift = max(0, -low)
        poly = ring_.zero
        for exponent, coeff in terms.items():
            poly += ring_(coeff) * u ** (exponent + shift)
        return cls.of(poly, shift)

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1, ring_=ZRING) -> Self:
        """coeff * u^exponent"""
        return cls.from_terms({exponent: coeff}, ring_)

    @property
    def ring(self):
        return self.poly.ring

    def is_zero(self) -> bool:
        return not self.poly

    def is_polynomial(self) -> bool:
        """No negative powers of u"""
        return self.shift == 0

    def _aligned(self, other: "LaurentU") -> Tuple[PolyElement, PolyElement, int]:
        other = self._coerce(other)
        shift = max(self.shift, other.shift)
        u = gen_named(self.ring, "u")
        return self.poly * u ** (shift - self.shift), other.poly * u ** (shift - other.shift), shift

    def _coerce(self, other) -> "LaurentU":
        if isinstance(other, LaurentU):
            return other
        return LaurentU(self.ring(other), 0)

    def __add__(self, other) -> Self:
        a, b, shift = self._aligned(other)
        return type(self).of(a + b, shift)

    __radd__ = __add__

    def __sub__(self, other) -> Self:
        a, b, shift = self._aligned(other)
        return type(self).of(a - b, shift)

    def __rsub__(self, other) -> Self:
        return self._coerce(other) - self

    def __neg__(self) -> Self:
        return type(self)(-self.poly, self.shift)

    def __mul__(self, other) -> Self:
        other = self._coerce(other)
        return type(self).of(self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def mul(self, other: "LaurentU", prec: int) -> Self:
        """Product of z-series truncated below z^prec"""
        other = self._coerce(other)
        return type(self).of(zmul(self.poly, other.poly, prec), self.shift + other.shift)

    def truncate(self, prec: int) -> Self:
        """Drop z^prec and beyond"""
        return type(self).of(ztrunc(self.poly, prec), self.shift)

    def __pow__(self, k: int) -> Self:
        if k >= 0:
            return type(self).of(self.poly ** k, self.shift * k)
        return self.monomial_inverse() ** (-k)

    def power(self, k: int, prec: int) -> Self:
        """self^k truncated below z^prec"""
        result = type(self)(self.ring.one, 0)
        for _ in range(k):
            result = result.mul(self, prec)
        return result

    def monomial_inverse(self) -> Self:
        """Inverse of c u^e; other elements are not invertible here"""
        if len(self.poly) != 1:
            raise InvalidInputError(f"{self} is not a monomial in u")
        (monom, coeff), = self.poly.items()
        index = _u_index(self.ring)
        if any(e for i, e in enumerate(monom) if i != index):
            raise InvalidInputError(f"{self} involves variables other than u")
        return type(self).monomial(-(monom[index] - self.shift), 1 / coeff, self.ring)

    def divide_by_u(self, k: int = 1) -> Self:
        """self * u^(-k)"""
        return type(self).of(self.poly, self.shift + k)

    def exquo(self, divisor: PolyElement, what: str = "exquo") -> Self:
        """Exact division by a polynomial prime to u"""
        try:
            return type(self).of(self.poly.exquo(self.ring(divisor)), self.shift)
        except ExactQuotientFailed:
            raise CancellationFailure(what, f"{divisor} does not divide the numerator of {self}") from None

    def terms(self) -> Iterator[Tuple[int, PolyElement]]:
        """(exponent of u, coefficient free of u) in increasing exponent order"""
        u = gen_named(self.ring, "u")
        for degree in range(self.poly.degree(u) + 1 if self.poly else 0):
            coeff = self.poly.coeff_wrt(u, degree)
            if coeff:
                yield degree - self.shift, coeff

    def coefficient(self, exponent: int) -> PolyElement:
        """[u^exponent] self"""
        degree = exponent + self.shift
        if degree < 0 or not self.poly:
            return self.ring.zero
        return self.poly.coeff_wrt(gen_named(self.ring, "u"), degree)

    def top_degree(self) -> Optional[int]:
        """Largest exponent of u, None for zero"""
        if not self.poly:
            return None
        return self.poly.degree(gen_named(self.ring, "u")) - self.shift

    def bottom_degree(self) -> Optional[int]:
        """Smallest exponent of u, None for zero"""
        if not self.poly:
            return None
        return _min_u_exponent(self.poly, _u_index(self.ring)) - self.shift

    def _keep(self, lowest: int) -> Self:
        kept = {e: c for e, c in self.terms() if e >= lowest}
        return type(self).from_terms(kept, self.ring)

    def positive_part(self) -> Self:
        """[u^>] self"""
        return self._keep(1)

    def nonneg_part(self) -> Self:
        """[u^>=] self"""
        return self._keep(0)

    def constant_term(self) -> PolyElement:
        """[u^0] self"""
        return self.coefficient(0)

    def evaluate(self, value) -> PolyElement:
        """Substitute a nonzero rational (or zero when polynomial) for u"""
        if self.shift and value == 0:
            raise InvalidInputError(f"{self} has a pole at u=0")
        u = gen_named(self.ring, "u")
        value = self.ring.domain.convert(value)
        numerator = self.poly.subs(u, value)
        return numerator * (1 / value) ** self.shift if self.shift else numerator

    def invert_u(self) -> Self:
        """u -> 1/u"""
        return type(self).from_terms({-e: c for e, c in self.terms()}, self.ring)

    def substitute_u_power(self, k: int) -> Self:
        """u -> u^k for k >= 1"""
        return type(self).from_terms({k * e: c for e, c in self.terms()}, self.ring)

    def to_urat(self):
        """The same element as a fraction"""
        from algebra.urat import URat
        u = gen_named(self.ring, "u")
        return URat.of(self.poly, u ** self.shift, u)

    def to_ring(self, target) -> Self:
        """Move the polynomial part to another ring containing u"""
        return type(self)(self.poly.set_ring(target), self.shift)

    def z_order(self) -> int:
        """Largest z-degree present"""
        return self.poly.degree(z_gen(self.poly)) if self.poly else -1

    def __str__(self) -> str:
        if not self.shift:
            return str(self.poly)
        return f"({self.poly})/u^{self.shift}"


def _divide_u_power(poly: PolyElement, index: int, k: int) -> PolyElement:
    terms = {}
    for monom, coeff in poly.items():
        reduced = list(monom)
        reduced[index] -= k
        terms[tuple(reduced)] = coeff
    return poly.ring.from_dict(terms)


def laurent_exp(arg: LaurentU, prec: int) -> LaurentU:
    """exp(arg) truncated below z^prec; arg must vanish at z = 0"""
    result = LaurentU(arg.ring.one, 0)
    term = result
    for n in range(1, prec):
        term = term.mul(arg, prec) * QQ(1, n)
        if term.is_zero():
            break
        result = result + term
    return result


def plus_one_identity(P: LaurentU) -> Tuple[LaurentU, LaurentU]:
    """Both sides of [u^>](1+u)P = (1+u)[u^>]P + u[u^0]P"""
    u = gen_named(P.ring, "u")
    lhs = (P * (1 + u)).positive_part()
    rhs = P.positive_part() * (1 + u) + LaurentU(P.constant_term() * u, 0)
    return lhs, rhs
