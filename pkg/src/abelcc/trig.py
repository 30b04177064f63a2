"""Real trigonometric polynomials with rational Fourier coefficients.

``TrigPoly`` stores ``a0 + sum(a[k] cos(k t) + b[k] sin(k t))``.  The maps
:func:`phi` (``cos t -> (z + 1/z)/2``, ``sin t -> (z - 1/z)/(2i)``) and
:func:`psi` (tangent half-angle, ``x = tan(t/2)``) carry them into Laurent
polynomials and rational functions.
"""

from __future__ import annotations

import math
from typing import Iterable

from gmpy2 import mpq

from .errors import InputError, NotPeriodicError, NotRealTypeError
from .laurent import LaurentPoly, RatFunc
from .poly import UniPoly
from .scalar import GaussRational, Rational, format_rational, to_rational

_Q0 = mpq(0)
_HALF = mpq(1, 2)


class TrigPoly:
    """Immutable trigonometric polynomial.

    ``cos[k]`` and ``sin[k]`` hold the coefficients of ``cos(k t)`` and
    ``sin(k t)``; ``cos[0]`` is the constant term and ``sin[0]`` is always 0.
    """

    __slots__ = ("cos", "sin")

    def __init__(self, a0=0, terms: Iterable = ()):
        cos = {0: to_rational(a0)}
        sin = {}
        for k, a, b in terms:
            if not isinstance(k, int) or k < 1:
                raise InputError(f"harmonic index must be a positive integer, got {k!r}")
            cos[k] = cos.get(k, _Q0) + to_rational(a)
            sin[k] = sin.get(k, _Q0) + to_rational(b)
        n = max(cos) if cos else 0
        self._set([cos.get(k, _Q0) for k in range(n + 1)],
                  [_Q0] + [sin.get(k, _Q0) for k in range(1, n + 1)])

    def _set(self, cos, sin):
        n = len(cos) - 1
        while n > 0 and not cos[n] and not sin[n]:
            n -= 1
        self.cos = tuple(cos[: n + 1])
        self.sin = tuple(sin[: n + 1])

    @classmethod
    def _raw(cls, cos, sin) -> "TrigPoly":
        obj = object.__new__(cls)
        obj._set(list(cos), list(sin))
        return obj

    @classmethod
    def constant(cls, c) -> "TrigPoly":
        return cls(c)

    @classmethod
    def cos_k(cls, k: int, a=1) -> "TrigPoly":
        return cls(0, [(k, a, 0)])

    @classmethod
    def sin_k(cls, k: int, b=1) -> "TrigPoly":
        return cls(0, [(k, 0, b)])

    @property
    def a0(self) -> Rational:
        return self.cos[0]

    @property
    def degree(self) -> int:
        return len(self.cos) - 1

    @property
    def terms(self) -> list[tuple[int, Rational, Rational]]:
        return [(k, self.cos[k], self.sin[k]) for k in range(1, len(self.cos))
                if self.cos[k] or self.sin[k]]

    def is_constant(self) -> bool:
        return self.degree == 0

    def __eq__(self, other):
        if isinstance(other, TrigPoly):
            return self.cos == other.cos and self.sin == other.sin
        try:
            return self == TrigPoly(other)
        except InputError:
            return NotImplemented

    def __hash__(self):
        return hash((self.cos, self.sin))

    def _coerce(self, other) -> "TrigPoly":
        return other if isinstance(other, TrigPoly) else TrigPoly(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(self.degree, other.degree)
        cos = [self._c(k) + other._c(k) for k in range(n + 1)]
        sin = [self._s(k) + other._s(k) for k in range(n + 1)]
        return TrigPoly._raw(cos, sin)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly._raw([-c for c in self.cos], [-s for s in self.sin])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _c(self, k):
        return self.cos[k] if k < len(self.cos) else _Q0

    def _s(self, k):
        return self.sin[k] if k < len(self.sin) else _Q0

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            c = to_rational(other)
            return TrigPoly._raw([x * c for x in self.cos], [x * c for x in self.sin])
        return trig_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TrigPoly":
        result = TrigPoly(1)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> "TrigPoly":
        cos = [_Q0] + [self.sin[k] * k for k in range(1, len(self.sin))]
        sin = [_Q0] + [-self.cos[k] * k for k in range(1, len(self.cos))]
        return TrigPoly._raw(cos, sin)

    def __call__(self, theta: float) -> float:
        return eval_trig(self, theta)

    def to_json(self) -> dict:
        return {
            "a0": format_rational(self.a0),
            "terms": [{"k": k, "a": format_rational(a), "b": format_rational(b)}
                      for k, a, b in self.terms],
        }

    @classmethod
    def from_json(cls, obj) -> "TrigPoly":
        if not isinstance(obj, dict):
            raise InputError("trig polynomial must be a JSON object")
        unknown = set(obj) - {"a0", "terms"}
        if unknown:
            raise InputError(f"unknown trig polynomial fields: {sorted(unknown)}")
        terms = []
        for t in obj.get("terms", []):
            if not isinstance(t, dict) or "k" not in t:
                raise InputError(f"bad term {t!r}")
            k = t["k"]
            if isinstance(k, bool) or not isinstance(k, int):
                raise InputError(f"harmonic index must be an integer, got {k!r}")
            terms.append((k, _json_rational(t.get("a", "0")), _json_rational(t.get("b", "0"))))
        return cls(_json_rational(obj.get("a0", "0")), terms)

    def __repr__(self):
        parts = [format_rational(self.a0)]
        for k, a, b in self.terms:
            if a:
                parts.append(f"{format_rational(a)}*cos({k}t)")
            if b:
                parts.append(f"{format_rational(b)}*sin({k}t)")
        return "TrigPoly(" + " + ".join(parts) + ")"


def _json_rational(v) -> Rational:
    if isinstance(v, float) or isinstance(v, bool):
        raise InputError(f"exact rational string expected, got {v!r}")
    return to_rational(v)


def trig_add(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    return f + g


def trig_mul(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """Product by the product-to-sum identities."""
    n = f.degree + g.degree
    cos = [_Q0] * (n + 1)
    sin = [_Q0] * (n + 1)
    for j in range(f.degree + 1):
        fa, fb = f.cos[j], f.sin[j]
        if not fa and not fb:
            continue
        for k in range(g.degree + 1):
            ga, gb = g.cos[k], g.sin[k]
            if not ga and not gb:
                continue
            s, d = j + k, abs(j - k)
            sign = 1 if j >= k else -1  # sin((j-k)t) = sign * sin(d t)
            # cos j cos k = (cos(j-k) + cos(j+k))/2
            # sin j sin k = (cos(j-k) - cos(j+k))/2
            # sin j cos k = (sin(j+k) + sin(j-k))/2
            # cos j sin k = (sin(j+k) - sin(j-k))/2
            cc = fa * ga * _HALF
            ss = fb * gb * _HALF
            sc = fb * ga * _HALF
            cs = fa * gb * _HALF
            cos[d] += cc + ss
            cos[s] += cc - ss
            sin[s] += sc + cs
            if d:
                sin[d] += sign * (sc - cs)
    sin[0] = _Q0
    return TrigPoly._raw(cos, sin)


def phi(f: TrigPoly) -> LaurentPoly:
    """Image under ``cos t -> (z + 1/z)/2``, ``sin t -> (z - 1/z)/(2i)``."""
    n = f.degree
    out = [None] * (2 * n + 1)
    out[n] = GaussRational(f.a0)
    for k in range(1, n + 1):
        a, b = f.cos[k] * _HALF, f.sin[k] * _HALF
        out[n + k] = GaussRational._make(a, -b)
        out[n - k] = GaussRational._make(a, b)
    return LaurentPoly._raw(-n, out)


def phi_inv(L: LaurentPoly) -> TrigPoly:
    """Inverse of :func:`phi`; ``L`` must satisfy ``conj(L)(1/z) = L``."""
    if not L.is_real_type():
        raise NotRealTypeError("Laurent polynomial is not conjugate-reciprocal")
    n = max(L.hi, 0)
    cos = [L[0].re] + [2 * L[k].re for k in range(1, n + 1)]
    sin = [_Q0] + [-2 * L[k].im for k in range(1, n + 1)]
    return TrigPoly._raw(cos, sin)


def psi(f: TrigPoly) -> RatFunc:
    """Image under the tangent half-angle substitution ``x = tan(t/2)``.

    Uses ``exp(i k t) = (1 + i x)**(2k) / (1 + x**2)**k``.
    """
    n = f.degree
    one_ix = UniPoly([1, GaussRational(0, 1)])
    q = UniPoly([1, 0, 1])
    qpow = [UniPoly.constant(1)]
    for _ in range(n):
        qpow.append(qpow[-1] * q)
    num = qpow[n] * f.a0
    e = UniPoly.constant(1)
    sq = one_ix * one_ix
    for k in range(1, n + 1):
        e = e * sq
        a, b = f.cos[k], f.sin[k]
        if a or b:
            re = UniPoly([c.re for c in e.coeffs])
            im = UniPoly([c.im for c in e.coeffs])
            num = num + (re * a + im * b) * qpow[n - k]
    return RatFunc(num, qpow[n])


def antiderivative(f: TrigPoly) -> TrigPoly:
    """``g(t) = integral of f from 0 to t``; requires zero mean."""
    if f.a0:
        raise NotPeriodicError("integrand has nonzero mean; the antiderivative is not periodic")
    n = f.degree
    cos = [_Q0] * (n + 1)
    sin = [_Q0] * (n + 1)
    for k in range(1, n + 1):
        a, b = f.cos[k], f.sin[k]
        # a sin(kt)/k + b (1 - cos(kt))/k
        sin[k] = a / k
        cos[k] = -b / k
        cos[0] += b / k
    return TrigPoly._raw(cos, sin)


def compose_poly_trig(A: UniPoly, w: TrigPoly) -> TrigPoly:
    """Fourier form of ``A(w(t))``; ``A`` must have real coefficients."""
    if not A.is_real():
        raise InputError("outer polynomial must have real coefficients")
    acc = TrigPoly(0)
    for c in reversed(A.coeffs):
        acc = acc * w + c.re
    return acc


def eval_trig(f: TrigPoly, theta: float) -> float:
    total = float(f.a0)
    for k in range(1, f.degree + 1):
        a, b = f.cos[k], f.sin[k]
        if a:
            total += float(a) * math.cos(k * theta)
        if b:
            total += float(b) * math.sin(k * theta)
    return total



__all__ = [
    "TrigPoly", "trig_add", "trig_mul", "phi", "phi_inv", "psi",
    "antiderivative", "compose_poly_trig", "eval_trig",
]
