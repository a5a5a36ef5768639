"""
Truncated series in z whose coefficients are fractions in u over Q[y]
"""
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement
from typing_extensions import Self

from algebra.laurent import LaurentU
from algebra.rings import URING, UU, z_coefficients
from algebra.urat import URat
from errors import CancellationFailure, InvalidInputError
from reports import SeriesDump
from series.poly import poly_from_json, poly_to_json


@dataclass(frozen=True)
class ZSeries:
    """Coefficients g_0..g_N of sum g_n z^n; laurent marks denominators that must be powers of u"""

    coeffs: Tuple[URat, ...]
    laurent: bool = False

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidInputError("a series needs at least its constant coefficient")
        if self.laurent:
            for n, c in enumerate(self.coeffs):
                if not c.is_laurent():
                    raise CancellationFailure("zseries", f"z^{n} coefficient {c} is not a Laurent polynomial")

    @classmethod
    def of(cls, coeffs: Sequence, laurent: bool = False) -> Self:
        """Build from URat or polynomial coefficients"""
        return cls(tuple(c if isinstance(c, URat) else URat.poly(URING(c), UU) for c in coeffs), laurent)

    @classmethod
    def from_ring_poly(cls, poly: PolyElement, N: int, laurent: bool = False) -> Self:
        """Split a polynomial in z (ZRING or VRING style) into its first N+1 coefficients"""
        return cls.of([c.set_ring(URING) for c in z_coefficients(poly, N + 1)], laurent)

    @classmethod
    def from_laurent(cls, series: LaurentU, N: int) -> Self:
        """Split a Laurent z-series into coefficients, keeping the u^(-shift) denominators"""
        den = UU ** series.shift
        coeffs = [URat.of(c.set_ring(URING), den, UU) for c in z_coefficients(series.poly, N + 1)]
        return cls(tuple(coeffs), True)

    @property
    def order(self) -> int:
        """Truncation order N"""
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> URat:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[URat]:
        return iter(self.coeffs)

    def _align(self, other: "ZSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "ZSeries") -> Self:
        n = self._align(other)
        return type(self)(tuple(self[i] + other[i] for i in range(n + 1)))

    def __sub__(self, other: "ZSeries") -> Self:
        n = self._align(other)
        return type(self)(tuple(self[i] - other[i] for i in range(n + 1)))

    def __mul__(self, other: "ZSeries") -> Self:
        """Cauchy product"""
        n = self._align(other)
        coeffs = []
        for k in range(n + 1):
            total = URat.poly(URING.zero, UU)
            for i in range(k + 1):
                total = total + self[i] * other[k - i]
            coeffs.append(total)
        return type(self)(tuple(coeffs))

    def scale(self, factor) -> Self:
        """Multiply every coefficient by a fraction or scalar"""
        return type(self)(tuple(c * factor for c in self.coeffs))

    def truncate(self, order: int) -> Self:
        """Keep g_0..g_order"""
        if order > self.order:
            raise InvalidInputError(f"cannot extend a series of order {self.order} to {order}")
        return type(self)(self.coeffs[:order + 1], self.laurent)

    def at_y(self, value) -> Self:
        """Specialize y in every coefficient"""
        y = URING.gens[1]
        return type(self)(tuple(URat.of(c.num.subs(y, value), c.den.subs(y, value), UU) for c in self.coeffs))

    def is_polynomial(self) -> bool:
        """Every coefficient is a polynomial in u and y"""
        return all(c.is_polynomial() for c in self.coeffs)

    def assert_polynomial(self, what: str) -> Self:
        """Raise CancellationFailure unless every denominator has cancelled"""
        for n, c in enumerate(self.coeffs):
            if not c.is_polynomial():
                raise CancellationFailure(what, f"z^{n} coefficient keeps the denominator {c.den}")
        return self

    def first_mismatch(self, other: "ZSeries") -> Optional[int]:
        """Lowest order where the two series differ, None when they agree up to the common order"""
        for n in range(self._align(other) + 1):
            if self[n] != other[n]:
                return n
        return None

    def to_dump(self, m: int, stage: str) -> SeriesDump:
        """JSON dump; coefficients must be polynomials"""
        self.assert_polynomial(stage)
        return SeriesDump(var="z", order=self.order, m=m, stage=stage,
                          coeffs=[poly_to_json(c.num) for c in self.coeffs])

    @classmethod
    def from_dump(cls, dump: SeriesDump) -> Self:
        """Inverse of to_dump"""
        if dump.var != "z":
            raise InvalidInputError("not a z-series dump")
        return cls.of([poly_from_json(c, URING) for c in dump.coeffs])
