import random

import pytest
from gmpy2 import mpq
from hypothesis import strategies as st

from abelcc.poly import BiPoly, UniPoly
from abelcc.scalar import GaussRational
from abelcc.trig import TrigPoly

small_rationals = st.builds(mpq, st.integers(-20, 20), st.integers(1, 12))
gauss_rationals = st.builds(GaussRational, small_rationals, small_rationals)


@st.composite
def trig_polys(draw, max_degree=6):
    n = draw(st.integers(0, max_degree))
    a0 = draw(small_rationals)
    terms = [(k, draw(small_rationals), draw(small_rationals)) for k in range(1, n + 1)]
    return TrigPoly(a0, terms)


def det(rows):
    """Determinant over Q(i) by plain Gaussian elimination (test oracle)."""
    m = [list(r) for r in rows]
    n = len(m)
    result = GaussRational(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return GaussRational(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result = result * m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for j in range(c, n):
                m[r][j] = m[r][j] - f * m[c][j]
    return result


def sylvester_resultant(p: UniPoly, q: UniPoly) -> GaussRational:
    dp, dq = p.degree, q.degree
    if dp == 0 or dq == 0:
        return GaussRational(1) if p and q else GaussRational(0)
    size = dp + dq
    rows = []
    for i in range(dq):
        row = [GaussRational(0)] * size
        for j, c in enumerate(reversed(p.coeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(dp):
        row = [GaussRational(0)] * size
        for j, c in enumerate(reversed(q.coeffs)):
            row[i + j] = c
        rows.append(row)
    return det(rows)


def random_bipoly(rng: random.Random, degw: int, degz: int, bound: int = 4) -> BiPoly:
    terms = {}
    for j in range(degw + 1):
        for i in range(degz + 1):
            if rng.random() < 0.7:
                terms[(i, j)] = GaussRational(rng.randint(-bound, bound), rng.randint(-1, 1))
    # guarantee exact bidegree
    terms[(rng.randint(0, degz), degw)] = GaussRational(rng.randint(1, bound))
    terms[(degz, rng.randint(0, degw))] = GaussRational(rng.randint(1, bound))
    return BiPoly.from_terms(terms)


@pytest.fixture
def rng():
    return random.Random(12345)
