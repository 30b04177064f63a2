"""Dense univariate and bivariate polynomials over Q(i), exact linear algebra.

A :class:`BiPoly` is a polynomial in ``w`` whose coefficients are
:class:`UniPoly` objects in ``z``.  Its gcd is taken in Q(i)(z)[w] with a
primitive polynomial remainder sequence, so all intermediate objects stay in
Q(i)[z][w].
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import InputError, InternalInconsistency
from .scalar import ONE, ZERO, GaussRational, gauss

_Q0 = mpq(0)
_G = GaussRational._make


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _mul_coeffs(a: Sequence[GaussRational], b: Sequence[GaussRational]) -> list:
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    re = [_Q0] * n
    im = [_Q0] * n
    bs = [(y.re, y.im) for y in b]
    for i, x in enumerate(a):
        xr, xi = x.re, x.im
        if xi:
            if xr:
                for j, (yr, yi) in enumerate(bs):
                    re[i + j] += xr * yr - xi * yi
                    im[i + j] += xr * yi + xi * yr
            else:
                for j, (yr, yi) in enumerate(bs):
                    re[i + j] -= xi * yi
                    im[i + j] += xi * yr
        elif xr:
            for j, (yr, yi) in enumerate(bs):
                re[i + j] += xr * yr
                im[i + j] += xr * yi
    return [_G(r, m) for r, m in zip(re, im)]


class UniPoly:
    """Dense polynomial ``sum(c[k] * x**k)`` with Gaussian-rational coefficients.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([gauss(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs) -> "UniPoly":
        obj = object.__new__(cls)
        obj.coeffs = _trim(list(coeffs))
        return obj

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls._raw([gauss(c)])

    @classmethod
    def monomial(cls, k: int, c=ONE) -> "UniPoly":
        return cls._raw([ZERO] * k + [gauss(c)])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls._raw([ZERO, ONE])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> GaussRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_real(self) -> bool:
        return all(not c.im for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly.constant(other).coeffs
        except InputError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            return UniPoly._raw(_mul_coeffs(self.coeffs, other.coeffs))
        c = gauss(other)
        return UniPoly._raw([x * c for x in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        result = UniPoly.constant(ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        return self * c

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = self.lc.inverse()
        return UniPoly._raw([c * inv for c in self.coeffs])

    def conj(self) -> "UniPoly":
        return UniPoly._raw([c.conj() for c in self.coeffs])

    def reverse(self, n: int | None = None) -> "UniPoly":
        """Return ``x**n * self(1/x)``; ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal length shorter than degree")
        padded = list(self.coeffs) + [ZERO] * (n + 1 - len(self.coeffs))
        return UniPoly._raw(padded[::-1])

    def valuation(self) -> int:
        """Order of vanishing at 0 (``-1`` for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def shift_down(self, k: int) -> "UniPoly":
        return UniPoly._raw(self.coeffs[k:])

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        if isinstance(x, UniPoly):
            return self.compose(x)
        x = gauss(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly._raw([])
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __divmod__(self, other: "UniPoly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        dcoeffs = other.coeffs
        inv = other.lc.inverse()
        if len(rem) <= dd:
            return UniPoly._raw([]), self
        quo = [ZERO] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - dd] = q
            for j in range(dd):
                dj = dcoeffs[j]
                if dj:
                    rem[k - dd + j] = rem[k - dd + j] - q * dj
            rem[k] = ZERO
        return UniPoly._raw(quo), UniPoly._raw(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly | None":
        """Quotient when ``other`` divides ``self`` exactly, else ``None``."""
        q, r = divmod(self, other)
        return None if r else q

    def __repr__(self):
        return f"UniPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c) if c.is_real() else f"({c})"
            parts.append(cs if k == 0 else f"{cs}*x^{k}")
        return " + ".join(parts)


def gcd_uni(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q(i) by the Euclidean algorithm."""
    if not p and not q:
        raise InputError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def gcd_uni_many(polys: Iterable[UniPoly]) -> UniPoly:
    g = None
    for p in polys:
        if not p:
            continue
        g = p.monic() if g is None else gcd_uni(g, p)
        if g.degree == 0:
            break
    if g is None:
        raise InputError("gcd of zero polynomials is undefined")
    return g


# --------------------------------------------------------------------------
# bivariate polynomials: coefficients in z, main variable w


class BiPoly:
    """Polynomial in ``w`` with :class:`UniPoly` coefficients in ``z``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[UniPoly] = ()):
        out = []
        for c in coeffs:
            out.append(c if isinstance(c, UniPoly) else UniPoly.constant(c))
        self.coeffs = _trim(out)

    @classmethod
    def from_terms(cls, terms: dict) -> "BiPoly":
        """Build from ``{(i, j): c}`` meaning ``c * z**i * w**j``."""
        if not terms:
            return cls()
        degw = max(j for _, j in terms)
        degz = max(i for i, _ in terms)
        grid = [[ZERO] * (degz + 1) for _ in range(degw + 1)]
        for (i, j), c in terms.items():
            grid[j][i] = grid[j][i] + gauss(c)
        return cls(UniPoly._raw(row) for row in grid)

    @classmethod
    def from_uni_in_w(cls, p: UniPoly) -> "BiPoly":
        return cls(UniPoly._raw([c]) for c in p.coeffs)

    @classmethod
    def from_uni_in_z(cls, p: UniPoly) -> "BiPoly":
        return cls([p])

    @property
    def degree_w(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_z(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    @property
    def lc(self) -> UniPoly:
        return self.coeffs[-1] if self.coeffs else UniPoly()

    def __getitem__(self, k: int) -> UniPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return UniPoly()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return BiPoly(out)

    def __neg__(self):
        return BiPoly(-c for c in self.coeffs)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            if not self or not other:
                return BiPoly()
            out = [UniPoly()] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return BiPoly(out)
        # scalar or UniPoly in z
        return BiPoly(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def shift_w(self, k: int) -> "BiPoly":
        return BiPoly([UniPoly()] * k + list(self.coeffs))

    def content(self) -> UniPoly:
        """Monic gcd in Q(i)[z] of the ``w``-coefficients."""
        return gcd_uni_many(self.coeffs)

    def primitive_part(self) -> "BiPoly":
        if not self:
            return self
        c = self.content()
        if c.degree == 0:
            return self
        return BiPoly(divmod(x, c)[0] for x in self.coeffs)

    def eval_z(self, z0) -> UniPoly:
        """Specialize ``z = z0``, giving a polynomial in ``w``."""
        return UniPoly._raw([c(z0) for c in self.coeffs])

    def __call__(self, z0, w0):
        return self.eval_z(z0)(w0)

    def terms(self) -> dict:
        out = {}
        for j, c in enumerate(self.coeffs):
            for i, x in enumerate(c.coeffs):
                if x:
                    out[(i, j)] = x
        return out

    def __repr__(self):
        return f"BiPoly({self.terms()!r})"


def pseudo_remainder(a: BiPoly, b: BiPoly) -> BiPoly:
    """Remainder of ``lc(b)**e * a`` on division by ``b`` in Q(i)[z][w].

    The power ``e`` is the number of reduction steps actually taken; callers
    only use the result up to a factor in Q(i)[z].
    """
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    db = b.degree_w
    lcb = b.lc
    r = list(a.coeffs)
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        lcr = r[k]
        shift = k - db
        r = [c * lcb for c in r]
        for j, bc in enumerate(b.coeffs):
            if bc:
                r[shift + j] = r[shift + j] - lcr * bc
        r = list(_trim(r))
    return BiPoly(r)


def exact_div_bi(a: BiPoly, d: BiPoly) -> BiPoly | None:
    """Quotient of ``a`` by ``d`` in Q(i)[z][w], or ``None`` if not exact."""
    if not d:
        raise ZeroDivisionError("division by zero bivariate polynomial")
    dd = d.degree_w
    lcd = d.lc
    r = list(a.coeffs)
    if len(r) - 1 < dd:
        return BiPoly() if not r else None
    quo = [UniPoly()] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k]
        if not c:
            continue
        q = c.exact_div(lcd)
        if q is None:
            return None
        quo[k - dd] = q
        for j in range(dd):
            if d.coeffs[j]:
                r[k - dd + j] = r[k - dd + j] - q * d.coeffs[j]
        r[k] = UniPoly()
    if any(r[:dd]):
        return None
    return BiPoly(quo)


def normalize_bi(d: BiPoly) -> BiPoly:
    """Primitive in z, then scaled so the leading w-coefficient is monic in z."""
    if not d:
        return d
    d = d.primitive_part()
    inv = d.lc.lc.inverse()
    return d * inv


def gcd_bi_prs(p: BiPoly, q: BiPoly) -> BiPoly:
    """gcd in Q(i)(z)[w] by a primitive polynomial remainder sequence.

    Coefficient degrees in z grow quickly along the sequence, so this is only
    practical for small inputs; :func:`gcd_bi_in_w` is the production route.
    """
    if not p or not q:
        raise InputError("gcd needs two nonzero polynomials")
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree_w < b.degree_w:
        a, b = b, a
    while b.degree_w > 0:
        r = pseudo_remainder(a, b)
        if not r:
            return normalize_bi(b)
        a, b = b, r.primitive_part()
    return BiPoly([UniPoly.constant(ONE)])


def _evaluation_points():
    k = 1
    while True:
        yield GaussRational(k)
        yield GaussRational(-k)
        k += 1


def gcd_bi_in_w(p: BiPoly, q: BiPoly) -> BiPoly:
    """gcd of ``p`` and ``q`` in Q(i)(z)[w], normalized by :func:`normalize_bi`.

    Dense evaluation/interpolation in z: the monic gcd of the specializations
    at z = z0, scaled by gcd(lc p, lc q)(z0), is interpolated coefficientwise
    until it stabilizes, and the candidate is accepted only after exact
    trial division of both inputs.  A gcd of w-degree 0 is returned as 1.
    """
    if not p or not q:
        raise InputError("gcd_bi_in_w needs two nonzero polynomials")
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree_w == 0 or b.degree_w == 0:
        return BiPoly([UniPoly.constant(ONE)])
    lca, lcb = a.lc, b.lc
    gamma = gcd_uni(lca, lcb)
    bound = gamma.degree + min(a.degree_z, b.degree_z) + 1
    one = BiPoly([UniPoly.constant(ONE)])

    deg = None
    interp: list[UniPoly] = []
    newton = UniPoly.constant(ONE)
    npts = 0
    for z0 in _evaluation_points():
        if not lca(z0) or not lcb(z0):
            continue
        g = gcd_uni(a.eval_z(z0), b.eval_z(z0))
        if g.degree == 0:
            return one
        if deg is not None and g.degree > deg:
            continue  # unlucky point
        if deg is None or g.degree < deg:
            deg = g.degree
            interp = [UniPoly() for _ in range(deg + 1)]
            newton = UniPoly.constant(ONE)
            npts = 0
        values = [c * gamma(z0) for c in g.coeffs]
        stable = npts > 0
        nz = newton(z0)
        for k, v in enumerate(values):
            h = interp[k]
            diff = v - h(z0)
            if diff:
                stable = False
                interp[k] = h + newton * (diff / nz)
        newton = newton * UniPoly._raw([-z0, ONE])
        npts += 1
        if stable or npts > bound:
            cand = BiPoly(interp).primitive_part()
            if exact_div_bi(a, cand) is not None and exact_div_bi(b, cand) is not None:
                return normalize_bi(cand)
            if npts > 4 * bound + 32:
                raise InternalInconsistency("bivariate gcd interpolation did not converge")
    raise AssertionError("unreachable")


# --------------------------------------------------------------------------
# exact linear algebra


def _rref(rows: list[list[GaussRational]], ncols: int) -> list[int]:
    """In-place reduced row echelon form over the first ``ncols`` columns.

    Returns the pivot columns; rows beyond the rank are left as zeros in the
    eliminated part.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[col].inverse()
        prow = [x * inv if x else x for x in prow]
        rows[r] = prow
        nz = [j for j in range(col, len(prow)) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[col]
            if not f:
                continue
            for j in nz:
                row[j] = row[j] - f * prow[j]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list[GaussRational] | None:
    """Solve ``matrix @ x = rhs`` exactly over Q(i).

    Returns one solution (free variables set to zero) or ``None`` when the
    system is inconsistent.
    """
    nrows = len(matrix)
    if len(rhs) != nrows:
        raise InputError("right-hand side length does not match the matrix")
    ncols = len(matrix[0]) if nrows else 0
    if any(len(row) != ncols for row in matrix):
        raise InputError("ragged matrix")
    rows = [[gauss(x) for x in row] + [gauss(b)] for row, b in zip(matrix, rhs)]
    pivots = _rref(rows, ncols)
    for row in rows[len(pivots):]:
        if row[ncols]:
            return None
    x = [ZERO] * ncols
    for i, col in enumerate(pivots):
        x[col] = rows[i][ncols]
    return x


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[GaussRational]]:
    """Basis of the right kernel of ``matrix``."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows = [[gauss(x) for x in row] for row in matrix]
    pivots = _rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for i, col in enumerate(pivots):
            v[col] = -rows[i][free]
        basis.append(v)
    return basis


def mat_vec(matrix: Sequence[Sequence], x: Sequence) -> list[GaussRational]:
    out = []
    for row in matrix:
        acc = ZERO
        for a, b in zip(row, x):
            acc = acc + gauss(a) * gauss(b)
        out.append(acc)
    return out
