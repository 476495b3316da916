"""Exact Gaussian rational arithmetic.

A Scalar is a + b*i with arbitrary-precision rational a, b.  The rational
ground type is gmpy2.mpq when available (much faster), otherwise
fractions.Fraction; set SYMLIE_GROUND=fraction to force the stdlib type.
Both keep values in lowest terms with positive denominator.
"""

from __future__ import annotations

import os

if os.environ.get("SYMLIE_GROUND") == "fraction":
    from fractions import Fraction as Q
else:
    try:
        from gmpy2 import mpq as Q  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover
        from fractions import Fraction as Q  # type: ignore[no-redef]

_Q0 = Q(0)
_Q1 = Q(1)


class Scalar:
    """An element of Q(i), immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_Q0) else Q(re)
        self.im = im if type(im) is type(_Q0) else Q(im)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(num, den=1) -> "Scalar":
        return Scalar(Q(num, den))

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_rational(self) -> bool:
        return not self.im

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        a, b, c, d = self.re, self.im, other.re, other.im
        if b or d:
            return Scalar(a * c - b * d, a * d + b * c)
        return Scalar(a * c, _Q0)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inverse()

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero Scalar")
            return Scalar(1 / a, _Q0)
        n = a * a + b * b
        return Scalar(a / n, -b / n)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        """Render within the expression grammar: "a", "a/b", "c*i", "a+c*i"."""
        re, im = self.re, self.im
        if not im:
            return str(re)
        if im == 1:
            istr = "i"
        elif im == -1:
            istr = "-1*i"
        else:
            istr = f"{im}*i"
        if not re:
            return istr
        if im == 1:
            return f"{re}+i"
        if im == -1:
            return f"{re}-i"
        if im > 0:
            return f"{re}+{im}*i"
        return f"{re}-{-im}*i"

    def __repr__(self) -> str:
        return f"Scalar({self.re!r}, {self.im!r})"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def integer(n: int) -> Scalar:
    return Scalar(Q(n))


def rational(num: int, den: int = 1) -> Scalar:
    return Scalar(Q(num, den))
