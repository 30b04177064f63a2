"""Exact rational and Gaussian-rational scalars.

Rationals are ``gmpy2.mpq`` values, which are always kept in lowest terms with
a positive denominator.  :class:`GaussRational` pairs two of them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational as _AbstractRational

from gmpy2 import mpq

from .errors import InputError

Rational = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


def to_rational(x) -> Rational:
    """Coerce ints, Fractions, mpq and ``"p/q"`` strings to an exact rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, (Integral, Fraction)):
        return mpq(x)
    if isinstance(x, _AbstractRational):
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return parse_rational(x)
    raise InputError(f"not an exact rational: {x!r}")


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Rational:
    m = _RAT_RE.match(text)
    if not m:
        raise InputError(f"cannot parse rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}")
    return mpq(num, den)


def format_rational(x: Rational) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussRational:
    """An element ``re + im*i`` of Q(i), immutable and exact."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Rational else to_rational(re)
        self.im = im if type(im) is Rational else to_rational(im)

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            raise InputError("floating complex numbers are not exact")
        return cls._make(to_rational(x), _ZERO)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except InputError:
                return NotImplemented
        return GaussRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except InputError:
                return NotImplemented
        return GaussRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __neg__(self):
        return GaussRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except InputError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRational._make(a * c, _ZERO)
        return GaussRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        a, b = self.re, self.im
        n = a * a + b * b
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational._make(a / n, -b / n)

    def __truediv__(self, other):
        if type(other) is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except InputError:
                return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussRational._make(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussRational":
        return GaussRational._make(self.re, -self.im)

    def norm(self) -> Rational:
        return self.re * self.re + self.im * self.im

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if type(other) is not GaussRational:
            try:
                other = GaussRational.coerce(other)
            except InputError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # text form ----------------------------------------------------------
    def __str__(self):
        return format_gauss(self)

    def __repr__(self):
        return f"GaussRational({format_gauss(self)!r})"


ZERO = GaussRational._make(_ZERO, _ZERO)
ONE = GaussRational._make(_ONE, _ZERO)
I = GaussRational._make(_ZERO, _ONE)


def gauss(x) -> GaussRational:
    if isinstance(x, str):
        return parse_gauss(x)
    return GaussRational.coerce(x)


def format_gauss(x: GaussRational) -> str:
    """Serialize as ``"p/q"`` or ``"p/q+r/s*i"``."""
    if not x.im:
        return format_rational(x.re)
    im = format_rational(x.im)
    sign = "" if im.startswith("-") else "+"
    return f"{format_rational(x.re)}{sign}{im}*i"


_GAUSS_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?:(?P<im>[+-]\s*\d+(?:/\d+)?|[+-])?\s*\*?\s*i)?\s*$"
)


def parse_gauss(text: str) -> GaussRational:
    text = text.strip()
    if not text:
        raise InputError("empty scalar")
    if "i" not in text:
        return GaussRational._make(parse_rational(text), _ZERO)
    if text in ("i", "+i", "*i"):
        return I
    if text == "-i":
        return -I
    m = _GAUSS_RE.match(text)
    if not m:
        raise InputError(f"cannot parse Gaussian rational {text!r}")
    re_part = parse_rational(m.group("re")) if m.group("re") else _ZERO
    im_text = m.group("im")
    if im_text is None:
        # a lone signed number before "i", e.g. "3*i" or "-1/3*i"
        return GaussRational._make(_ZERO, re_part)
    im_text = im_text.replace(" ", "")
    if im_text in ("+", "-"):
        im_part = _ONE if im_text == "+" else -_ONE
    else:
        im_part = parse_rational(im_text)
    return GaussRational._make(re_part, im_part)
