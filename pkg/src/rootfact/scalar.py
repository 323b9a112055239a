"""Exact Gaussian-rational scalars.

A Scalar is (a + b*i)/d with integers a, b and d >= 1, stored with
gcd(a, b, d) == 1.  All arithmetic is exact; there is no floating
point anywhere in this package.

Canonical string form, used in all JSON payloads:

- each part is a reduced fraction, "/1" omitted: "3", "-1/2"
- a zero imaginary part is omitted: "3/4"
- a zero real part is omitted when the imaginary part is nonzero,
  and the imaginary coefficient is always literal: "1*i", "-2/3*i"
- both parts: real first, then signed imaginary: "1/2-3/4*i"
- zero is "0"

>>> str(Scalar.parse("1/2-3/4*i") * 4)
'2-3*i'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import InvalidInputError

_PART = r"[+-]?\d+(?:/\d+)?"
_RE_REAL = re.compile(rf"^({_PART})$")
_RE_IMAG = re.compile(rf"^({_PART})\*i$")
_RE_BOTH = re.compile(rf"^({_PART})([+-]\d+(?:/\d+)?)\*i$")


def _frac(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise InvalidInputError(f"zero denominator in scalar part {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


class Scalar:
    """Immutable exact complex rational."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int, b: int = 0, d: int = 1):
        if d == 1:
            self.a = a
            self.b = b
            self.d = 1
            return
        if d == 0:
            raise InvalidInputError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self.a = a
        self.b = b
        self.d = d

    # -- construction ------------------------------------------------

    @classmethod
    def from_fraction(cls, re_part: Fraction, im_part: Fraction = Fraction(0)) -> "Scalar":
        d = math.lcm(re_part.denominator, im_part.denominator)
        return cls(int(re_part * d), int(im_part * d), d)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        s = text.strip()
        m = _RE_BOTH.match(s)
        if m:
            return cls.from_fraction(_frac(m.group(1)), _frac(m.group(2)))
        m = _RE_IMAG.match(s)
        if m:
            return cls.from_fraction(Fraction(0), _frac(m.group(1)))
        m = _RE_REAL.match(s)
        if m:
            return cls.from_fraction(_frac(m.group(1)))
        raise InvalidInputError(f"cannot parse scalar {text!r}")

    # -- structure ---------------------------------------------------

    @property
    def val(self) -> "Scalar":
        """Value part; scalars are their own value (jets override)."""
        return self

    @property
    def real(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_real(self) -> bool:
        return self.b == 0

    def is_positive_real(self) -> bool:
        return self.b == 0 and self.a > 0

    def conjugate(self) -> "Scalar":
        return _mk(self.a, -self.b, self.d)

    def abs2(self) -> "Scalar":
        """|z|^2, exact."""
        return Scalar(self.a * self.a + self.b * self.b, 0, self.d * self.d)

    def sqrt_exact(self) -> "Scalar":
        """Square root of a perfect-square nonnegative rational.

        Raises InvalidInputError when self is not such a square.
        """
        if self.b != 0 or self.a < 0:
            raise InvalidInputError("sqrt_exact needs a nonnegative real scalar")
        n = self.a * self.d
        r = math.isqrt(n)
        if r * r != n:
            raise InvalidInputError("not a perfect rational square")
        return Scalar(r, 0, self.d)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == 1 and d2 == 1:
            return _mk(self.a + other.a, self.b + other.b, 1)
        return Scalar(self.a * d2 + other.a * d1, self.b * d2 + other.b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.d, other.d
        if d1 == 1 and d2 == 1:
            return _mk(self.a - other.a, self.b - other.b, 1)
        return Scalar(self.a * d2 - other.a * d1, self.b * d2 - other.b * d1, d1 * d2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if b1 == 0 and b2 == 0:
            a, b = a1 * a2, 0
        else:
            a = a1 * a2 - b1 * b2
            b = a1 * b2 + b1 * a2
        d = self.d * other.d
        if d == 1:
            return _mk(a, b, 1)
        return Scalar(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.b == 0:
            if other.a == 0:
                raise ZeroDivisionError("division by zero scalar")
            num = self * other.d
            return Scalar(num.a, num.b, num.d * other.a)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return _mk(-self.a, -self.b, self.d)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return not self.is_zero()

    # -- formatting --------------------------------------------------

    def __str__(self):
        re_part = Fraction(self.a, self.d) if self.a else None
        im_part = Fraction(self.b, self.d) if self.b else None
        if im_part is None:
            return _fmt(re_part) if re_part is not None else "0"
        if re_part is None:
            return f"{_fmt(im_part)}*i"
        sign = "+" if im_part > 0 else "-"
        return f"{_fmt(re_part)}{sign}{_fmt(abs(im_part))}*i"

    def __repr__(self):
        return f"Scalar({self})"


def _fmt(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _mk(a: int, b: int, d: int) -> Scalar:
    out = object.__new__(Scalar)
    out.a = a
    out.b = b
    out.d = d
    return out


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return _mk(x, 0, 1)
    if isinstance(x, Fraction):
        return Scalar(x.numerator, 0, x.denominator)
    return None


ZERO = _mk(0, 0, 1)
ONE = _mk(1, 0, 1)
I = _mk(0, 1, 1)


def sc(x) -> Scalar:
    """Coerce an int, Fraction, or Scalar; reject everything else."""
    out = _coerce(x)
    if out is None:
        raise InvalidInputError(f"not a scalar: {x!r}")
    return out
