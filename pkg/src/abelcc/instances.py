"""Seeded random instances for property suites and the ``random-instance`` command."""

from __future__ import annotations

import random

from gmpy2 import mpq

from .poly import UniPoly
from .trig import TrigPoly, compose_poly_trig


def random_rational(rng: random.Random, bound: int = 3, max_den: int = 3) -> mpq:
    return mpq(rng.randint(-bound, bound), rng.randint(1, max_den))


def _nonzero(rng: random.Random, bound: int, max_den: int) -> mpq:
    while True:
        q = random_rational(rng, bound, max_den)
        if q:
            return q


def random_trig(rng: random.Random, degree: int, bound: int = 3, max_den: int = 3,
                zero_mean: bool = False) -> TrigPoly:
    """Random trig polynomial of exact degree ``degree``."""
    a0 = 0 if zero_mean else random_rational(rng, bound, max_den)
    terms = []
    for k in range(1, degree + 1):
        a = random_rational(rng, bound, max_den)
        b = random_rational(rng, bound, max_den)
        if k == degree and not a and not b:
            a = _nonzero(rng, bound, max_den)
        terms.append((k, a, b))
    return TrigPoly(a0, terms)


def random_poly(rng: random.Random, degree: int, bound: int = 3, max_den: int = 3) -> UniPoly:
    """Random real polynomial of exact degree ``degree``."""
    coeffs = [random_rational(rng, bound, max_den) for _ in range(degree)]
    coeffs.append(_nonzero(rng, bound, max_den))
    return UniPoly(coeffs)


def holds_instance(rng: random.Random, degw: int, degl: int, degm: int,
                   bound: int = 3, max_den: int = 3):
    """``(l, m, w0, l0, m0)`` with ``l = l0(w0)`` and ``m = m0(w0)``."""
    w0 = random_trig(rng, degw, bound, max_den)
    l0 = random_poly(rng, degl, bound, max_den)
    m0 = random_poly(rng, degm, bound, max_den)
    return compose_poly_trig(l0, w0), compose_poly_trig(m0, w0), w0, l0, m0


def random_instance(seed: int, degw: int = 2, degl: int = 2, degm: int = 3,
                    kind: str = "holds") -> tuple[TrigPoly, TrigPoly]:
    rng = random.Random(seed)
    if kind == "holds":
        if min(degw, degl, degm) < 1:
            raise ValueError("degrees must be at least 1 for holds instances")
        l, m, *_ = holds_instance(rng, degw, degl, degm)
        return l, m
    if kind == "generic":
        return random_trig(rng, degl), random_trig(rng, degm)
    raise ValueError(f"unknown instance kind {kind!r}")
