"""
Fractions num/den whose denominator only involves one main variable (u or s)
"""
from dataclasses import dataclass
from typing import Optional

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement
from typing_extensions import Self

from algebra.rings import z_gen, zmul, ztrunc
from errors import CancellationFailure, InvalidInputError


def _index(var: PolyElement) -> int:
    return var.ring.gens.index(var)


def _is_var_monomial(den: PolyElement, var: PolyElement) -> bool:
    if len(den) != 1:
        return False
    (monom, _), = den.items()
    index = _index(var)
    return all(e == 0 for i, e in enumerate(monom) if i != index)


def _var_valuation(poly: PolyElement, var: PolyElement) -> int:
    index = _index(var)
    return min(monom[index] for monom in poly.itermonoms())


@dataclass(frozen=True, eq=False)
class URat:
    """Canonical fraction: gcd removed, monic denominator, zero written 0/1"""

    num: PolyElement
    den: PolyElement
    var: PolyElement

    @classmethod
    def of(cls, num: PolyElement, den: PolyElement, var: PolyElement) -> Self:
        """Reduce num/den to canonical form"""
        ring_ = var.ring
        num, den = ring_(num), ring_(den)
        if not den:
            raise InvalidInputError("zero denominator")
        if not num:
            return cls(ring_.zero, ring_.one, var)
        if _is_var_monomial(den, var):
            k = min(den.degree(var), _var_valuation(num, var))
            if k:
                num = num.exquo(var ** k)
                den = den.exquo(var ** k)
        else:
            num, den = num.cancel(den)
        lc = den.LC
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        return cls(num, den, var)

    @classmethod
    def poly(cls, num: PolyElement, var: PolyElement) -> Self:
        """num/1"""
        return cls(var.ring(num), var.ring.one, var)

    @property
    def ring(self):
        return self.var.ring

    def _coerce(self, other) -> "URat":
        if isinstance(other, URat):
            return other
        return URat.poly(self.ring(other), self.var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, URat):
            other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other) -> Self:
        other = self._coerce(other)
        if self.den == other.den:
            return type(self).of(self.num + other.num, self.den, self.var)
        return type(self).of(self.num * other.den + other.num * self.den, self.den * other.den, self.var)

    __radd__ = __add__

    def __neg__(self) -> Self:
        return type(self)(-self.num, self.den, self.var)

    def __sub__(self, other) -> Self:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Self:
        return self._coerce(other) - self

    def __mul__(self, other) -> Self:
        other = self._coerce(other)
        return type(self).of(self.num * other.num, self.den * other.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Self:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by a zero fraction")
        return type(self).of(self.num * other.den, self.den * other.num, self.var)

    def __pow__(self, k: int) -> Self:
        if k < 0:
            return type(self).of(self.den ** -k, self.num ** -k, self.var)
        return type(self)(self.num ** k, self.den ** k, self.var)

    def mul(self, other, prec: int) -> Self:
        """Product of z-series truncated below z^prec (denominators are free of z)"""
        other = self._coerce(other)
        return type(self).of(zmul(self.num, other.num, prec), self.den * other.den, self.var)

    def truncate(self, prec: int) -> Self:
        """Drop z^prec and beyond from the numerator"""
        return type(self).of(ztrunc(self.num, prec), self.den, self.var)

    def series_inverse(self, prec: int) -> Self:
        """1/self as a z-series; [z^0] self must be invertible"""
        z = z_gen(self.num)
        head = self.num.coeff_wrt(z, 0)
        if not head:
            raise InvalidInputError(f"{self} vanishes at z = 0")
        tail = self.num - head
        # den/(head + tail) = den * sum_k (-tail)^k head^(N-k) / head^(N+1)
        total = self.ring.zero
        power = self.ring.one
        for k in range(prec):
            total += power * head ** (prec - 1 - k)
            power = zmul(power, -tail, prec)
            if not power:
                break
        return type(self).of(zmul(total, self.den, prec), head ** prec, self.var)

    def is_polynomial(self) -> bool:
        """Denominator is 1"""
        return self.den == 1

    def is_laurent(self) -> bool:
        """Denominator is a power of the main variable"""
        return _is_var_monomial(self.den, self.var)

    def to_laurent(self, what: str = "laurent"):
        """The same element as a LaurentU (main variable must be u)"""
        from algebra.laurent import LaurentU
        if not self.is_laurent():
            raise CancellationFailure(what, f"denominator {self.den} is not a power of {self.var}")
        return LaurentU.of(self.num, self.den.degree(self.var))

    def at(self, value) -> Self:
        """Substitute a rational for the main variable"""
        value = QQ.convert(value)
        den = self.den.subs(self.var, value)
        if not den:
            raise InvalidInputError(f"{self} has a pole at {self.var} = {value}")
        return type(self).of(self.num.subs(self.var, value), den, self.var)

    def compose(self, image: "URat") -> Self:
        """Substitute the fraction image for the main variable"""
        return compose_poly(self.num, self.var, image) / compose_poly(self.den, self.var, image)

    def degree(self) -> Optional[int]:
        """Degree of the numerator in the main variable"""
        return self.num.degree(self.var) if self.num else None

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def compose_poly(poly: PolyElement, var: PolyElement, image: URat) -> URat:
    """poly with var replaced by image, as a single fraction in the ring of image"""
    top = poly.degree(var) if poly else 0
    total = image.ring.zero
    num_powers = [image.ring.one]
    den_powers = [image.ring.one]
    for _ in range(top):
        num_powers.append(num_powers[-1] * image.num)
        den_powers.append(den_powers[-1] * image.den)
    for k in range(top + 1):
        coeff = poly.coeff_wrt(var, k) if poly else image.ring.zero
        if coeff:
            total += coeff.set_ring(image.ring) * num_powers[k] * den_powers[top - k]
    return URat.of(total, den_powers[top], image.var)
