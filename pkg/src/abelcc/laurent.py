"""Laurent polynomials and reduced rational functions over Q(i).

Projective values (at 0 and at infinity) are returned as Gaussian rationals
or the :data:`INF` sentinel.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import InputError
from .poly import UniPoly, gcd_uni, _mul_coeffs, _trim
from .scalar import ONE, ZERO, GaussRational, gauss


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return "INF"


INF = _Infinity()


class LaurentPoly:
    """``sum(c[k] * z**k for k in lo..hi)`` with Gaussian-rational ``c``."""

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int = 0, coeffs: Iterable = ()):
        cs = [gauss(c) for c in coeffs]
        self._set(lo, cs)

    def _set(self, lo, cs):
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        cs = _trim(cs[start:])
        self.lo = lo + start if cs else 0
        self.coeffs = cs

    @classmethod
    def _raw(cls, lo: int, coeffs) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._set(lo, list(coeffs))
        return obj

    @classmethod
    def from_dict(cls, terms: Mapping[int, object]) -> "LaurentPoly":
        terms = {k: gauss(v) for k, v in terms.items()}
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls._raw(lo, [terms.get(k, ZERO) for k in range(lo, hi + 1)])

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls._raw(0, [gauss(c)])

    @classmethod
    def z(cls, k: int = 1) -> "LaurentPoly":
        return cls._raw(k, [ONE])

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def __getitem__(self, k: int) -> GaussRational:
        j = k - self.lo
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ZERO

    def items(self):
        for j, c in enumerate(self.coeffs):
            if c:
                yield self.lo + j, c

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs or (self.lo == 0 and len(self.coeffs) == 1)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.lo == other.lo and self.coeffs == other.coeffs
        try:
            return self == LaurentPoly.constant(other)
        except InputError:
            return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if not other:
            return self
        if not self:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [ZERO] * (hi - lo + 1)
        for k, c in self.items():
            out[k - lo] = out[k - lo] + c
        for k, c in other.items():
            out[k - lo] = out[k - lo] + c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.lo, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if not self or not other:
                return LaurentPoly()
            return LaurentPoly._raw(self.lo + other.lo, _mul_coeffs(self.coeffs, other.coeffs))
        c = gauss(other)
        return LaurentPoly._raw(self.lo, [x * c for x in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not Laurent")
        result = LaurentPoly.constant(ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj_reciprocal(self) -> "LaurentPoly":
        """The Laurent polynomial ``conj(L)(1/z)``."""
        return LaurentPoly._raw(-self.hi, [c.conj() for c in reversed(self.coeffs)])

    def is_real_type(self) -> bool:
        return self == self.conj_reciprocal()

    def numerator(self) -> tuple[UniPoly, int]:
        """Return ``(N, s)`` with ``L = N / z**s`` and ``s = max(0, -lo)``."""
        if not self:
            return UniPoly(), 0
        s = max(0, -self.lo)
        return UniPoly._raw([ZERO] * (self.lo + s) + list(self.coeffs)), s

    def to_ratfunc(self) -> "RatFunc":
        n, s = self.numerator()
        return RatFunc(n, UniPoly.monomial(s))

    @property
    def degree(self) -> int:
        """Degree as a rational function (total number of poles)."""
        if self.is_constant():
            return 0
        return max(self.hi, 0) + max(-self.lo, 0)

    def compose_into(self, outer: UniPoly) -> "LaurentPoly":
        """``outer(L)`` for a polynomial ``outer``."""
        acc = LaurentPoly()
        for c in reversed(outer.coeffs):
            acc = acc * self + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        return sum(complex(c) * z ** k for k, c in self.items())

    def __repr__(self):
        return f"LaurentPoly({ {k: str(c) for k, c in self.items()} })"


class RatFunc:
    """Reduced quotient ``num/den`` of polynomials over Q(i), ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce: bool = True):
        num = num if isinstance(num, UniPoly) else UniPoly.constant(num)
        if den is None:
            den = UniPoly.constant(ONE)
        elif not isinstance(den, UniPoly):
            den = UniPoly.constant(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = UniPoly(), UniPoly.constant(ONE)
            return
        if reduce and den.degree > 0 and num.degree > 0:
            g = gcd_uni(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        inv = den.lc.inverse()
        if inv != ONE:
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(UniPoly.x())

    @classmethod
    def mobius(cls, a, b, c, d) -> "RatFunc":
        """The map ``(a*x + b) / (c*x + d)``."""
        a, b, c, d = (gauss(t) for t in (a, b, c, d))
        if not a * d - b * c:
            raise InputError("singular Mobius matrix")
        return cls(UniPoly._raw([b, a]), UniPoly._raw([d, c]))

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (UniPoly, LaurentPoly)):
            return self == _as_ratfunc(other)
        try:
            return self == RatFunc(UniPoly.constant(other))
        except InputError:
            return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def compose(self, inner) -> "RatFunc":
        """``self(inner(x))``."""
        inner = _as_ratfunc(inner)
        k = self.degree
        s, t = inner.num, inner.den
        spow = [UniPoly.constant(ONE)]
        tpow = [UniPoly.constant(ONE)]
        for _ in range(k):
            spow.append(spow[-1] * s)
            tpow.append(tpow[-1] * t)
        num = UniPoly()
        den = UniPoly()
        for j in range(k + 1):
            h = spow[j] * tpow[k - j]
            if self.num[j]:
                num = num + h * self.num[j]
            if self.den[j]:
                den = den + h * self.den[j]
        return RatFunc(num, den)

    def __call__(self, x):
        if isinstance(x, (RatFunc, UniPoly, LaurentPoly)):
            return self.compose(x)
        x = gauss(x)
        d = self.den(x)
        if not d:
            return INF
        return self.num(x) / d

    def value_at_zero(self):
        d0 = self.den[0]
        if not d0:
            return INF
        return self.num[0] / d0

    def value_at_infinity(self):
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            return INF
        if dn < dd:
            return ZERO
        return self.num.lc / self.den.lc

    def as_laurent(self) -> LaurentPoly | None:
        """The equal Laurent polynomial, or ``None`` if ``den`` is not a monomial."""
        v = self.den.valuation()
        if self.den.degree != v:
            return None
        return LaurentPoly._raw(-v, self.num.coeffs)

    def conj_reciprocal(self) -> "RatFunc":
        """``conj(R)(1/x)`` as a reduced rational function."""
        k = self.degree
        return RatFunc(self.num.conj().reverse(k), self.den.conj().reverse(k))

    def eval_complex(self, x: complex) -> complex:
        return self.num.eval_complex(x) / self.den.eval_complex(x)

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, UniPoly):
        return RatFunc(x)
    if isinstance(x, LaurentPoly):
        return x.to_ratfunc()
    return RatFunc(UniPoly.constant(x))


# --------------------------------------------------------------------------
# degree-one maps as 2x2 matrices acting on projective points


def mobius_matrix(m: RatFunc) -> tuple:
    """``(a, b, c, d)`` with ``m = (a x + b)/(c x + d)``; ``m`` must have degree 1."""
    if m.degree != 1:
        raise InputError("not a degree-one rational function")
    return (m.num[1], m.num[0], m.den[1], m.den[0])


def mobius_inverse(m: RatFunc) -> RatFunc:
    a, b, c, d = mobius_matrix(m)
    return RatFunc.mobius(d, -b, -c, a)


def _proj(p) -> tuple:
    if p is INF:
        return (ONE, ZERO)
    return (gauss(p), ONE)


def _standard_frame(p, q, r) -> tuple:
    """Matrix sending 0 -> p, inf -> q, 1 -> r."""
    vp, vq, vr = _proj(p), _proj(q), _proj(r)
    # kappa * vq + lam * vp = vr
    det = vq[0] * vp[1] - vp[0] * vq[1]
    if not det:
        raise InputError("interpolation points are not distinct")
    kappa = (vr[0] * vp[1] - vp[0] * vr[1]) / det
    lam = (vq[0] * vr[1] - vr[0] * vq[1]) / det
    if not kappa or not lam:
        raise InputError("interpolation points are not distinct")
    return (kappa * vq[0], lam * vp[0], kappa * vq[1], lam * vp[1])


def _matmul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mobius_through(src, dst) -> RatFunc:
    """The degree-one map sending the three points ``src`` to ``dst``.

    Points are Gaussian rationals or :data:`INF`.
    """
    s = _standard_frame(*src)
    t = _standard_frame(*dst)
    a, b, c, d = s
    s_inv = (d, -b, -c, a)
    return RatFunc.mobius(*_matmul(t, s_inv))
