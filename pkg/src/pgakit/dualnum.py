"""Dual numbers ``a + b*I`` with ``I**2 == 0`` (Study numbers).

These are the scalars of the even subalgebra of the 4D degenerate
Clifford algebra: the pseudoscalar commutes with everything and squares
to zero.  Only the elementary functions needed for screw logarithms are
provided: inverse, square root, cosine and sine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Multivector


@dataclass(frozen=True)
class DualNumber:
    re: float
    du: float = 0.0

    @property
    def euclidean(self) -> bool:
        """True when the real part is nonzero, so an inverse exists."""
        return self.re != 0.0

    def __add__(self, other):
        other = _coerce(other)
        return DualNumber(self.re + other.re, self.du + other.du)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return DualNumber(self.re - other.re, self.du - other.du)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return DualNumber(-self.re, -self.du)

    def __mul__(self, other):
        other = _coerce(other)
        # the dual part never feeds back: (a+bI)(c+dI) = ac + (ad+bc)I
        return DualNumber(self.re * other.re,
                          self.re * other.du + self.du * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def conjugate(self) -> "DualNumber":
        return DualNumber(self.re, -self.du)

    def norm(self) -> float:
        """The real part: ``z * z.conjugate() == norm()**2``."""
        return self.re

    def inverse(self) -> "DualNumber":
        if not self.euclidean:
            raise ZeroDivisionError("ideal dual number has no inverse")
        return DualNumber(self.re, -self.du) * (1.0 / self.re ** 2)

    def sqrt(self) -> "DualNumber":
        if self.re <= 0.0:
            raise ValueError("dual sqrt needs a positive real part")
        c = math.sqrt(self.re)
        return DualNumber(c, self.du / (2.0 * c))

    def isclose(self, other, tol: float = 1e-14) -> bool:
        other = _coerce(other)
        return (abs(self.re - other.re) <= tol
                and abs(self.du - other.du) <= tol)

    def __repr__(self):
        return f"{self.re!r} + {self.du!r}I"

    # -- pseudoscalar slice of a multivector ---------------------------

    @classmethod
    def from_multivector(cls, x: Multivector) -> "DualNumber":
        """Scalar plus pseudoscalar part of ``x``."""
        return cls(x.scalar_part, x.pseudo_part)

    def to_multivector(self, alg) -> Multivector:
        out = alg.zero().coeffs.copy()
        out[0] = self.re
        out[alg.pseudoscalar_index] = self.du
        return Multivector(alg, out)


def _coerce(value) -> DualNumber:
    if isinstance(value, DualNumber):
        return value
    return DualNumber(float(value))


def cos(z: DualNumber) -> DualNumber:
    """cos(x + yI) = cos x - y sin x I."""
    z = _coerce(z)
    return DualNumber(math.cos(z.re), -z.du * math.sin(z.re))


def sin(z: DualNumber) -> DualNumber:
    """sin(x + yI) = sin x + y cos x I."""
    z = _coerce(z)
    return DualNumber(math.sin(z.re), z.du * math.cos(z.re))
