import random
from math import gcd

import pytest
from gmpy2 import mpq

from abelcc.errors import DegenerateInputError, DegreeLimitError
from abelcc.field import (
    Fails,
    Holds,
    LaurentField,
    NotPeriodic,
    TanField,
    classify,
    common_generator,
    decide_cc,
    decide_cc_abel,
    decompose_through,
    fiber_polynomial,
    tan_image,
)
from abelcc.instances import holds_instance
from abelcc.laurent import LaurentPoly, RatFunc, mobius_inverse
from abelcc.poly import BiPoly, UniPoly, exact_div_bi, gcd_bi_in_w, gcd_bi_prs
from abelcc.scalar import GaussRational
from abelcc.trig import TrigPoly, compose_poly_trig, phi

from conftest import sylvester_resultant

cos1, sin1 = TrigPoly.cos_k(1), TrigPoly.sin_k(1)
cos2, sin2 = TrigPoly.cos_k(2), TrigPoly.sin_k(2)
x = RatFunc.x()
zinv = RatFunc(UniPoly([1]), UniPoly([0, 1]))
bz = BiPoly.from_uni_in_z(UniPoly.x())
bw = BiPoly.from_uni_in_w(UniPoly.x())


def mobius_equivalent(b1, b2):
    a = decompose_through(b1, b2)
    return a is not None and a.degree == 1


# ------------------------------------------------------------ fiber gcd oracle


def test_fiber_gcd_full_field():
    P, Q = fiber_polynomial(phi(cos1)), fiber_polynomial(phi(sin1))
    assert gcd_bi_prs(P, Q) == bw - bz
    assert gcd_bi_in_w(P, Q) == bw - bz


def test_fiber_gcd_bidegree_two():
    P, Q = fiber_polynomial(phi(cos2)), fiber_polynomial(phi(sin2))
    D = bw * bw - bz * bz
    cp, cq = exact_div_bi(P, D), exact_div_bi(Q, D)
    assert cp is not None and cq is not None
    z0 = GaussRational(7, 3)
    assert sylvester_resultant(cp.eval_z(z0), cq.eval_z(z0))
    assert gcd_bi_in_w(P, Q) == D
    assert gcd_bi_prs(P, Q) == D


# ------------------------------------------------------------ common_generator


def test_generator_of_cos_alone():
    L = phi(cos1)
    gen = common_generator(L, L)
    # C(z + 1/z) has index 2 in C(z): its fiber {z, 1/z} has two points
    assert gen.degree == 2
    assert mobius_equivalent(gen.B, x + zinv)


def test_generator_cos_sin_is_z():
    gen = common_generator(phi(cos1), phi(sin1))
    assert gen.B == x and gen.degree == 1


def test_generator_of_composition(rng):
    for _ in range(8):
        l, m, w0, l0, m0 = holds_instance(rng, rng.randint(1, 3), 1, rng.randint(1, 3))
        gen = common_generator(phi(l), phi(m))
        W0 = phi(w0).to_ratfunc()
        assert gen.degree == W0.degree == 2 * w0.degree
        assert mobius_equivalent(W0, gen.B)


def test_generator_both_constant():
    with pytest.raises(DegenerateInputError):
        common_generator(LaurentPoly.constant(1), LaurentPoly.constant(2))


def test_generator_one_constant():
    gen = common_generator(LaurentPoly.constant(3), phi(cos2))
    assert gen.degree == 4


# ------------------------------------------------------------ decompose_through


def test_decompose_chebyshev():
    A = decompose_through(phi(cos2), phi(cos1))
    assert A == RatFunc(UniPoly([-1, 0, 2]))


def test_decompose_through_z():
    A = decompose_through(phi(cos1), x)
    assert A == RatFunc(UniPoly([1, 0, 1]), UniPoly([0, 2]))


def test_decompose_degree_obstruction():
    assert decompose_through(phi(cos1), phi(cos2)) is None


def test_decompose_not_member():
    # sin t is not a rational function of cos t
    assert decompose_through(phi(sin1), phi(cos1)) is None


def test_decompose_constant():
    assert decompose_through(LaurentPoly.constant(5), phi(cos1)) == RatFunc(UniPoly([5]))


# ------------------------------------------------------------ classify


def test_classify_z_is_tan_one():
    c = classify(x)
    assert isinstance(c, TanField) and c.n == 1
    assert mobius_inverse(c.mu1).compose(x) == tan_image(1)
    # -i (z - 1)/(z + 1)
    assert tan_image(1) == RatFunc(UniPoly([GaussRational(0, 1), GaussRational(0, -1)]),
                                   UniPoly([1, 1]))


def test_classify_laurent_at_infinity():
    c = classify(x + zinv)
    assert isinstance(c, LaurentField)
    assert c.W == phi(cos1)
    assert c.mu == RatFunc(UniPoly([0, 2]))
    assert mobius_inverse(c.mu).compose(x + zinv) == c.W.to_ratfunc()


def test_classify_finite_common_value():
    # B = 3 + 1/(z + 1/z) has B(0) = B(inf) = 3
    B = 3 + 1 / (x + zinv)
    c = classify(B)
    assert isinstance(c, LaurentField)
    assert c.W.is_real_type() and not c.W.is_constant()
    assert mobius_inverse(c.mu).compose(B) == c.W.to_ratfunc()


def test_classify_complex_laurent_generator_is_made_real():
    W0 = (x + zinv) * GaussRational(2, 3) + GaussRational(1, -5)
    c = classify(W0)
    assert isinstance(c, LaurentField)
    assert c.W == phi(cos1)


def test_classify_tan_two():
    B = RatFunc(UniPoly([1, 0, 1]), UniPoly([0, 0, 1]))
    c = classify(B)
    assert isinstance(c, TanField) and c.n == 2
    assert mobius_inverse(c.mu1).compose(B) == tan_image(2)


# ------------------------------------------------------------ decide_cc


def test_decide_cos_sin_fails_one():
    v = decide_cc(cos1, sin1)
    assert v == Fails(1)


def test_decide_double_angle_fails_two():
    assert decide_cc(cos2, sin2) == Fails(2)


def test_decide_chebyshev_holds():
    v = decide_cc(cos1, cos2)
    assert v == Holds(cos1, UniPoly([0, 1]), UniPoly([-1, 0, 2]))


def test_decide_constructed_instance():
    w0 = cos1 + sin2
    l = compose_poly_trig(UniPoly([0, 3, 1]), w0)
    m = compose_poly_trig(UniPoly([0, -1, 0, 1]), w0)
    v = decide_cc(l, m)
    assert isinstance(v, Holds)
    assert compose_poly_trig(v.l_tilde, v.w) == l
    assert compose_poly_trig(v.m_tilde, v.w) == m
    assert v.w.degree == 2


def test_decide_constants():
    assert decide_cc(TrigPoly(2), TrigPoly(mpq(-1, 3))) == Holds(
        cos1, UniPoly([2]), UniPoly([mpq(-1, 3)]))
    assert decide_cc(TrigPoly(2), sin2) == Holds(sin2, UniPoly([2]), UniPoly.x())
    assert decide_cc(sin2, TrigPoly(0)) == Holds(sin2, UniPoly.x(), UniPoly())


def test_decide_degree_cap():
    with pytest.raises(DegreeLimitError):
        decide_cc(TrigPoly.cos_k(9), cos1, max_degree=8)


def test_decide_soundness_and_degrees(rng):
    for _ in range(25):
        l, m, w0, l0, m0 = holds_instance(rng, rng.randint(1, 3), rng.randint(1, 3),
                                          rng.randint(1, 3))
        v = decide_cc(l, m)
        assert isinstance(v, Holds)
        assert v.l_tilde.is_real() and v.m_tilde.is_real()
        assert compose_poly_trig(v.l_tilde, v.w) == l
        assert compose_poly_trig(v.m_tilde, v.w) == m
        assert l.degree == v.l_tilde.degree * v.w.degree
        assert m.degree == v.m_tilde.degree * v.w.degree
        assert gcd(l.degree, m.degree) % v.w.degree == 0
        assert w0.degree % v.w.degree == 0
        cls = v.classification
        assert mobius_inverse(cls.mu).compose(common_generator(phi(l), phi(m)).B) == \
            cls.W.to_ratfunc()


def test_decide_generic_pairs_fail():
    r = random.Random(99)
    for _ in range(3):
        l = TrigPoly(0, [(k, r.randint(-3, 3), r.randint(1, 3)) for k in range(1, 4)])
        m = TrigPoly(0, [(k, r.randint(1, 3), r.randint(-3, 3)) for k in range(1, 5)])
        assert decide_cc(l, m) == Fails(1)


# ------------------------------------------------------------ decide_cc_abel


def test_abel_chebyshev_shift():
    v = decide_cc_abel(-sin1, -2 * sin2)
    assert isinstance(v, Holds)
    assert v.w == cos1
    assert compose_poly_trig(v.l_tilde, v.w) == cos1 - 1
    assert compose_poly_trig(v.m_tilde, v.w) == cos2 - 1


def test_abel_nonzero_mean():
    assert isinstance(decide_cc_abel(TrigPoly(1, [(1, 1, 0)]), sin1), NotPeriodic)
    assert isinstance(decide_cc_abel(sin1, TrigPoly(mpq(1, 5))), NotPeriodic)


def test_abel_constant_moment():
    v = decide_cc_abel(TrigPoly(0), cos1)
    assert isinstance(v, Holds)
    assert v.w == sin1


def test_verdict_json():
    assert decide_cc(cos1, sin1).to_json() == {"verdict": "fails", "tan_n": 1}
    assert decide_cc(cos1, cos2).to_json() == {
        "verdict": "holds",
        "w": {"a0": "0", "terms": [{"k": 1, "a": "1", "b": "0"}]},
        "l_tilde": ["0", "1"],
        "m_tilde": ["-1", "0", "2"],
    }
    assert NotPeriodic().to_json() == {"verdict": "not_periodic"}
