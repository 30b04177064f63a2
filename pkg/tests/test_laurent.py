import pytest

from abelcc.errors import InputError
from abelcc.laurent import (
    INF,
    LaurentPoly,
    RatFunc,
    mobius_inverse,
    mobius_matrix,
    mobius_through,
)
from abelcc.poly import UniPoly
from abelcc.scalar import I, GaussRational

x = RatFunc.x()


def test_laurent_trim_and_bounds():
    L = LaurentPoly(-3, [0, 1, 0, 2, 0])
    assert (L.lo, L.hi) == (-2, 0)
    assert LaurentPoly(5, [0, 0]) == LaurentPoly()


def test_laurent_arithmetic():
    a = LaurentPoly.from_dict({-1: 1, 1: 1})
    assert a * a == LaurentPoly.from_dict({-2: 1, 0: 2, 2: 1})
    assert a - a == LaurentPoly()
    assert (a ** 3).degree == 6


def test_conj_reciprocal():
    L = LaurentPoly.from_dict({-2: GaussRational(1, 2), 1: I})
    assert L.conj_reciprocal() == LaurentPoly.from_dict({2: GaussRational(1, -2), -1: -I})
    assert not L.is_real_type()
    assert (L + L.conj_reciprocal()).is_real_type()


def test_ratfunc_reduces_and_normalizes():
    r = RatFunc(UniPoly([-1, 0, 1]), UniPoly([-2, 2]))
    # (x^2 - 1)/(2x - 2) = (x + 1)/2
    assert r.num == UniPoly(["1/2", "1/2"])
    assert r.den == UniPoly([1])


def test_ratfunc_projective_values():
    r = RatFunc(UniPoly([1, 0, 1]), UniPoly([0, 0, 1]))  # (z^2+1)/z^2
    assert r.value_at_zero() is INF
    assert r.value_at_infinity() == 1
    assert RatFunc(UniPoly([1]), UniPoly([1, 1])).value_at_infinity() == 0


def test_compose_and_laurent_view():
    zinv = RatFunc(UniPoly([1]), UniPoly([0, 1]))
    s = x + zinv
    assert s.as_laurent() == LaurentPoly.from_dict({-1: 1, 1: 1})
    assert s.compose(zinv) == s
    assert (s * s - 2).compose(x) == (s * s - 2)
    assert RatFunc(UniPoly([1]), UniPoly([1, 1])).as_laurent() is None


def test_mobius_helpers():
    m = RatFunc.mobius(2, 1, 1, 3)
    assert mobius_matrix(m) == (2, 1, 1, 3)
    assert m.compose(mobius_inverse(m)) == x
    with pytest.raises(InputError):
        RatFunc.mobius(1, 2, 2, 4)


@pytest.mark.parametrize("src, dst", [
    ((0, INF, 1), (I, -I, 2)),
    ((I, -I, 3), (INF, 0, GaussRational(1, 1))),
    ((1, 2, 3), (3, 2, 1)),
])
def test_mobius_through(src, dst):
    m = mobius_through(src, dst)
    for s, d in zip(src, dst):
        v = m(s) if s is not INF else m.value_at_infinity()
        assert v == d or (v is INF and d is INF)


def test_mobius_through_rejects_repeated_points():
    with pytest.raises(InputError):
        mobius_through((0, 0, 1), (1, 2, 3))
