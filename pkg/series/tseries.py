"""
Truncated exponential generating series in t over Q[x, y, q]
"""
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, Optional, Sequence, Tuple

from typing_extensions import Self

from errors import InvalidInputError
from reports import SeriesDump
from series.poly import TRING, Poly, X, poly_from_json, poly_to_json, specialize


@dataclass(frozen=True)
class TSeries:
    """Coefficients a_0..a_N with a_n = n! [t^n] F"""

    coeffs: Tuple[Poly, ...]

    @classmethod
    def of(cls, coeffs: Sequence[Poly]) -> Self:
        """Build a series from its EGF coefficients"""
        if not coeffs:
            raise InvalidInputError("a series needs at least its constant coefficient")
        return cls(tuple(TRING(c) for c in coeffs))

    @classmethod
    def constant(cls, value: Poly, order: int) -> Self:
        """value + O(t^(order+1))"""
        return cls.of([TRING(value)] + [TRING.zero] * order)

    @classmethod
    def variable(cls, order: int) -> Self:
        """The series t"""
        coeffs = [TRING.zero] * (order + 1)
        if order >= 1:
            coeffs[1] = TRING.one
        return cls.of(coeffs)

    @property
    def order(self) -> int:
        """Truncation order N"""
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.coeffs)

    def truncate(self, order: int) -> Self:
        """Keep a_0..a_order"""
        if order > self.order:
            raise InvalidInputError(f"cannot extend a series of order {self.order} to {order}")
        return type(self)(self.coeffs[:order + 1])

    def _align(self, other: "TSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TSeries") -> Self:
        n = self._align(other)
        return type(self)(tuple(self[i] + other[i] for i in range(n + 1)))

    def __sub__(self, other: "TSeries") -> Self:
        n = self._align(other)
        return type(self)(tuple(self[i] - other[i] for i in range(n + 1)))

    def __mul__(self, other: "TSeries") -> Self:
        """Binomial convolution"""
        n = self._align(other)
        return type(self)(tuple(
            sum((comb(k, i) * self[i] * other[k - i] for i in range(k + 1)), TRING.zero)
            for k in range(n + 1)
        ))

    def map(self, fn: Callable[[Poly], Poly]) -> Self:
        """Apply a coefficientwise operator"""
        return type(self)(tuple(fn(c) for c in self.coeffs))

    def at(self, x: Optional[int] = None, y: Optional[int] = None, q: Optional[int] = None) -> Self:
        """Specialize variables in every coefficient"""
        return self.map(lambda c: specialize(c, x=x, y=y, q=q))

    def divide_by_x(self) -> Self:
        """F / x, defined when every coefficient is divisible by x"""
        return self.map(lambda c: c.exquo(X))

    def to_dump(self, m: int, stage: str) -> SeriesDump:
        """JSON dump of the coefficients"""
        return SeriesDump(var="t", order=self.order, m=m, stage=stage,
                          coeffs=[poly_to_json(c) for c in self.coeffs])

    @classmethod
    def from_dump(cls, dump: SeriesDump) -> Self:
        """Inverse of to_dump"""
        if dump.var != "t":
            raise InvalidInputError("not a t-series dump")
        return cls.of([poly_from_json(c) for c in dump.coeffs])
