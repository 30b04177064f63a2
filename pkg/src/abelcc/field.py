"""Field generators of C(L, M) and the composition-condition decider.

For nonconstant Laurent polynomials ``L``, ``M`` the field ``C(L, M)`` is
generated by a single rational function ``B``.  It is read off from the gcd
``D(z, w)`` of the numerators of ``L(z) - L(w)`` and ``M(z) - M(w)``: the
roots of ``D`` in ``w`` are exactly the fiber ``{w : B(w) = B(z)}``, so any
nonconstant ratio of two ``w``-coefficients of ``D`` is a Mobius image of
``B`` and generates the same field.

``B`` is then classified.  If it takes the same value at 0 and infinity, a
Mobius change turns it into a Laurent polynomial, which after a realness
normalization is the image of a trigonometric polynomial ``w``.  Otherwise
``B`` is a Mobius image of ``-i (z**n - 1)/(z**n + 1)``, the image of
``tan(n t / 2)``, and no trigonometric-polynomial witness exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DegenerateInputError,
    DegreeLimitError,
    InputError,
    InternalInconsistency,
    NotPeriodicError,
)
from .laurent import INF, LaurentPoly, RatFunc, _as_ratfunc, mobius_inverse, mobius_through
from .poly import BiPoly, UniPoly, gcd_bi_in_w, normalize_bi, nullspace
from .scalar import I, ONE, ZERO, GaussRational, format_rational
from .trig import TrigPoly, antiderivative, compose_poly_trig, phi, phi_inv

DEFAULT_MAX_DEGREE = 64


@dataclass(frozen=True)
class FieldGenerator:
    B: RatFunc
    degree: int


@dataclass(frozen=True)
class TanField:
    """``mu1^{-1}(B) = -i (z**n - 1)/(z**n + 1)``."""

    n: int
    mu1: RatFunc


@dataclass(frozen=True)
class LaurentField:
    """``mu^{-1}(B) = W`` with ``W`` conjugate-reciprocal and nonconstant."""

    W: LaurentPoly
    mu: RatFunc


@dataclass(frozen=True)
class Holds:
    w: TrigPoly
    l_tilde: UniPoly
    m_tilde: UniPoly
    classification: LaurentField | None = field(default=None, compare=False)

    verdict = "holds"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "w": self.w.to_json(),
            "l_tilde": [format_rational(c.re) for c in _coeff_list(self.l_tilde)],
            "m_tilde": [format_rational(c.re) for c in _coeff_list(self.m_tilde)],
        }


@dataclass(frozen=True)
class Fails:
    n: int
    classification: TanField | None = field(default=None, compare=False)

    verdict = "fails"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "tan_n": self.n}


@dataclass(frozen=True)
class NotPeriodic:
    reason: str = ""

    verdict = "not_periodic"

    def to_json(self) -> dict:
        return {"verdict": self.verdict}


CCVerdict = Holds | Fails | NotPeriodic


def _coeff_list(p: UniPoly):
    return p.coeffs if p.coeffs else (ZERO,)


# --------------------------------------------------------------------------


def fiber_polynomial(L: LaurentPoly) -> BiPoly:
    """Numerator ``N(z) w**s - N(w) z**s`` of ``L(z) - L(w)``, where ``L = N / z**s``."""
    n, s = L.numerator()
    terms: dict = {}
    for i, c in enumerate(n.coeffs):
        if not c:
            continue
        terms[(i, s)] = terms.get((i, s), ZERO) + c
        terms[(s, i)] = terms.get((s, i), ZERO) - c
    return BiPoly.from_terms(terms)


def generator_from_gcd(D: BiPoly) -> RatFunc:
    """A generator of the field whose fiber polynomial is ``D``.

    Uses the lowest-index nonconstant coefficient of ``D`` made monic in ``w``;
    a gcd of ``w``-degree 1 means the full field and yields ``z``.
    """
    if D.degree_w < 1:
        raise InternalInconsistency("fiber gcd has no w-roots")
    if D.degree_w == 1:
        return RatFunc.x()
    top = D.lc
    for k in range(D.degree_w):
        r = RatFunc(D[k], top)
        if not r.is_constant():
            return r
    raise InternalInconsistency("fiber gcd has only constant coefficients")


def common_generator(L: LaurentPoly, M: LaurentPoly) -> FieldGenerator:
    """Generator ``B`` of ``C(L, M)``, verified by decomposing both inputs."""
    polys = [fiber_polynomial(X) for X in (L, M) if not X.is_constant()]
    if not polys:
        raise DegenerateInputError("both inputs are constant")
    if len(polys) == 1:
        D = normalize_bi(polys[0])
    else:
        D = gcd_bi_in_w(*polys)
    B = generator_from_gcd(D)
    if B.degree != D.degree_w:
        raise InternalInconsistency(
            f"generator degree {B.degree} differs from fiber degree {D.degree_w}")
    for X in (L, M):
        if decompose_through(X, B) is None:
            raise InternalInconsistency("input does not factor through the computed generator")
    return FieldGenerator(B, B.degree)


def decompose_through(L, B: RatFunc) -> RatFunc | None:
    """Rational ``A`` with ``A(B) = L``, or ``None`` if ``L`` is not in ``C(B)``.

    The coefficients of ``A = P/Q`` (degrees at most ``deg L / deg B``) span
    the kernel of the linear map ``(P, Q) -> den(L) P(B) - num(L) Q(B)``
    after clearing the denominators of ``B``.
    """
    B = _as_ratfunc(B)
    if B.is_constant():
        raise InputError("cannot decompose through a constant")
    target = _as_ratfunc(L)
    d = B.degree
    if target.degree % d:
        return None
    k = target.degree // d
    bn, bd = B.num, B.den
    npow = [UniPoly.constant(ONE)]
    dpow = [UniPoly.constant(ONE)]
    for _ in range(k):
        npow.append(npow[-1] * bn)
        dpow.append(dpow[-1] * bd)
    cols = []
    for j in range(k + 1):
        cols.append(target.den * (npow[j] * dpow[k - j]))
    for j in range(k + 1):
        cols.append(-(target.num * (npow[j] * dpow[k - j])))
    nrows = max(c.degree for c in cols) + 1
    matrix = [[c[r] for c in cols] for r in range(nrows)]
    kernel = nullspace(matrix, 2 * (k + 1))
    if not kernel:
        return None
    if len(kernel) > 1:
        raise InternalInconsistency("decomposition is not unique")
    v = kernel[0]
    A = RatFunc(UniPoly._raw(v[: k + 1]), UniPoly._raw(v[k + 1:]))
    if A.degree != k or A.compose(B) != target:
        raise InternalInconsistency("decomposition failed to re-verify")
    return A


# --------------------------------------------------------------------------


def tan_image(n: int) -> RatFunc:
    """``phi(tan(n t / 2)) = -i (z**n - 1) / (z**n + 1)``."""
    num = UniPoly.monomial(n, -I) + I
    den = UniPoly.monomial(n) + ONE
    return RatFunc(num, den)


def _real_normalize(W0: LaurentPoly) -> tuple[LaurentPoly, RatFunc]:
    """Affine ``nu`` making ``nu(W0)`` conjugate-reciprocal and canonical.

    ``W0*`` (conjugate coefficients of ``W0(1/z)``) generates the same field,
    so ``W0* = s W0 + t``; then ``nu(x) = p x + q`` with ``p = c + conj(c) s``
    and ``q = conj(p) t / 2`` satisfies ``conj(nu)(s x + t) = nu(x)``.  A final
    real affine change makes the constant term 0 and the top harmonic start
    with coefficient 1.
    """
    star = W0.conj_reciprocal()
    k = next(k for k, c in W0.items() if k != 0)
    s = star[k] / W0[k]
    t = star[0] - s * W0[0]
    if star != W0 * s + t:
        raise InternalInconsistency("conjugate generator is not an affine image")
    p = ONE + s
    if not p:
        p = I - I * s
    q = p.conj() * t / 2
    W = W0 * p + q
    if not W.is_real_type():
        raise InternalInconsistency("realness normalization failed")
    c0 = W[0]
    top = W[W.hi]
    a, b = 2 * top.re, -2 * top.im
    r = GaussRational(a if a else b)
    W = (W - c0) * r.inverse()
    nu = RatFunc.mobius(p / r, (q - c0) / r, ZERO, ONE)
    return W, nu


def classify(gen: FieldGenerator | RatFunc) -> TanField | LaurentField:
    B = gen.B if isinstance(gen, FieldGenerator) else _as_ratfunc(gen)
    if B.is_constant():
        raise InputError("cannot classify a constant generator")
    b0, binf = B.value_at_zero(), B.value_at_infinity()
    if b0 == binf:
        if b0 is INF:
            mu = RatFunc.x()
        else:
            mu = RatFunc.mobius(b0, ONE, ONE, ZERO)  # a + 1/x
        W0 = mobius_inverse(mu).compose(B).as_laurent()
        if W0 is None or W0.is_constant():
            raise InternalInconsistency("generator is not Mobius-equivalent to a Laurent polynomial")
        W, nu = _real_normalize(W0)
        mu = mu.compose(mobius_inverse(nu))
        if W.is_constant() or not W.is_real_type() or mobius_inverse(mu).compose(B) != W:
            raise InternalInconsistency("Laurent classification failed to re-verify")
        return LaurentField(W, mu)

    n = B.degree
    T = tan_image(n)
    z0 = GaussRational(2)
    try:
        mu1 = mobius_through((T.value_at_zero(), T.value_at_infinity(), T(z0)),
                             (b0, binf, B(z0)))
    except InputError as exc:
        raise InternalInconsistency(f"tan classification failed: {exc}") from exc
    if mobius_inverse(mu1).compose(B) != T:
        raise InternalInconsistency("tan classification failed to re-verify")
    return TanField(n, mu1)


# --------------------------------------------------------------------------


def _real_poly(A: RatFunc) -> UniPoly:
    if not A.is_polynomial():
        raise InternalInconsistency("outer component is not a polynomial")
    p = A.num * A.den.lc.inverse()
    if not p.is_real():
        raise InternalInconsistency("outer component has non-real coefficients")
    return p


def _check_degree(f: TrigPoly, max_degree: int) -> None:
    if f.degree > max_degree:
        raise DegreeLimitError(f"input degree {f.degree} exceeds the limit {max_degree}")


def decide_cc(l: TrigPoly, m: TrigPoly, max_degree: int = DEFAULT_MAX_DEGREE) -> Holds | Fails:
    """Decide whether ``l = l~(w)``, ``m = m~(w)`` for a trig polynomial ``w``.

    Returns :class:`Holds` with a witness verified by exact recomposition, or
    :class:`Fails` with the ``n`` such that ``R(l, m) = R(tan(n t / 2))``.
    """
    _check_degree(l, max_degree)
    _check_degree(m, max_degree)
    x = UniPoly.x()
    if l.is_constant() and m.is_constant():
        return Holds(TrigPoly.cos_k(1), UniPoly.constant(l.a0), UniPoly.constant(m.a0))
    if l.is_constant():
        return Holds(m, UniPoly.constant(l.a0), x)
    if m.is_constant():
        return Holds(l, x, UniPoly.constant(m.a0))

    L, M = phi(l), phi(m)
    cls = classify(common_generator(L, M))
    if isinstance(cls, TanField):
        return Fails(cls.n, cls)

    w = phi_inv(cls.W)
    Wr = cls.W.to_ratfunc()
    parts = []
    for X, target in ((L, l), (M, m)):
        A = decompose_through(X, Wr)
        if A is None:
            raise InternalInconsistency("input does not factor through the Laurent generator")
        p = _real_poly(A)
        if compose_poly_trig(p, w) != target:
            raise InternalInconsistency("witness failed to recompose")
        parts.append(p)
    return Holds(w, parts[0], parts[1], cls)


def decide_cc_abel(l_hat: TrigPoly, m_hat: TrigPoly,
                   max_degree: int = DEFAULT_MAX_DEGREE) -> CCVerdict:
    """Decide the composition condition for the coefficients of the Abel equation.

    The condition is stated for ``l = int_0^t l_hat`` and ``m = int_0^t m_hat``;
    a coefficient with nonzero mean gives a non-periodic moment.
    """
    try:
        l = antiderivative(l_hat)
        m = antiderivative(m_hat)
    except NotPeriodicError as exc:
        return NotPeriodic(str(exc))
    return decide_cc(l, m, max_degree)
