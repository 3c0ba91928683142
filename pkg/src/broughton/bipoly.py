"""Bivariate polynomials and the curve-arrangement constructions.

A :class:`BiPoly` is a polynomial in two variables x and y with rational
coefficients, stored as a tuple of :class:`UniPoly` coefficients indexed by
the power of y (no trailing zero entry).  That layout matches how the
arrangement polynomials are used: everything of interest here is shallow in
y and the eliminations all project onto the x-line.

The constructions:

    build_g(q)        g = q(x)*y - 1, the smooth fiber curve
    build_f(p, q)     f = p(x)*q(x)*y - (p(x) + 1), the shifted curve, so
                      that f*g + 1 factors through p(x)*(y*q(x) - 1)
    build_h(p, m, n, c)   h = (p(u)*v - 1)**m + c*v**n, the auxiliary
                      polynomial whose singular locus certifies that the
                      generic fiber of a candidate decomposition map stays
                      connected

Elimination is by Sylvester resultants computed fraction-free, so a
resultant of polynomials over Q[x] lands in Q[x] with no rounding anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .unipoly import (
    NEG_INF,
    ONE,
    UniPoly,
    ZERO,
    _bareiss_determinant,
    _scalar,
    exact_div,
    gcd,
    render_terms,
    sylvester_rows,
)


def _as_unipoly(value):
    if isinstance(value, UniPoly):
        return value
    s = _scalar(value)
    if s is None:
        return None
    return UniPoly((s,))


class BiPoly:
    """Polynomial in x and y, as y-power coefficients over Q[x]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = []
        for c in coeffs:
            u = _as_unipoly(c)
            if u is None:
                raise TypeError(f"coefficient {c!r} is not a polynomial in x")
            items.append(u)
        while items and not items[-1]:
            items.pop()
        self._coeffs = tuple(items)

    @property
    def coeffs(self) -> tuple:
        """UniPoly coefficients by y-power, no trailing zero."""
        return self._coeffs

    @property
    def degree_y(self):
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def degree_x(self):
        if not self._coeffs:
            return NEG_INF
        return max(c.degree for c in self._coeffs)

    @property
    def total_degree(self):
        if not self._coeffs:
            return NEG_INF
        return max(c.degree + j for j, c in enumerate(self._coeffs) if c)

    def coefficient(self, j: int) -> UniPoly:
        """Coefficient of y**j as a polynomial in x."""
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return ZERO

    def is_constant(self) -> bool:
        return self.degree_y <= 0 and self.degree_x <= 0

    # -- value protocol ----------------------------------------------------

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        coerced = _coerce_bi(other)
        if coerced is None:
            return NotImplemented
        return self._coeffs == coerced._coeffs

    def __hash__(self):
        if not self._coeffs:
            return hash(0)
        if len(self._coeffs) == 1:
            return hash(self._coeffs[0])
        return hash(self._coeffs)

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for j in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[j]
            for i in range(len(c.coeffs) - 1, -1, -1):
                value = c.coeffs[i]
                if not value:
                    continue
                powers = []
                if i:
                    powers.append(("x", i))
                if j:
                    powers.append(("y", j))
                terms.append((value, powers))
        return render_terms(terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_bi(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return BiPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            raise ValueError("polynomial powers need a nonnegative exponent")
        result = BiPoly((ONE,))
        square = self
        k = exponent
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    # -- calculus, evaluation, variable games --------------------------------

    def partial_x(self) -> "BiPoly":
        return BiPoly(tuple(c.derivative() for c in self._coeffs))

    def partial_y(self) -> "BiPoly":
        return BiPoly(tuple(j * c for j, c in enumerate(self._coeffs) if j))

    def eval_x(self, point) -> UniPoly:
        """Specialize x, leaving a univariate polynomial in y."""
        return UniPoly(tuple(c(point) for c in self._coeffs))

    def eval_y(self, point) -> UniPoly:
        """Specialize y, leaving a univariate polynomial in x."""
        t = _scalar(point)
        if t is None:
            raise TypeError(f"evaluation point {point!r} is not rational")
        acc = ZERO
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def __call__(self, x_point, y_point) -> Fraction:
        return self.eval_x(x_point)(y_point)

    def swap_vars(self) -> "BiPoly":
        """Exchange the two variables: returns b with b(x, y) = self(y, x)."""
        if not self._coeffs:
            return BiPoly()
        width = 1 + max(c.degree for c in self._coeffs if c)
        swapped = []
        for i in range(width):
            swapped.append(UniPoly(tuple(c.coefficient(i) for c in self._coeffs)))
        return BiPoly(swapped)


def _coerce_bi(value):
    if isinstance(value, BiPoly):
        return value
    u = _as_unipoly(value)
    if u is None:
        return None
    return BiPoly((u,))


BI_ZERO = BiPoly()
BI_ONE = BiPoly((ONE,))
X = BiPoly((UniPoly((0, 1)),))
Y = BiPoly((ZERO, ONE))


def build_g(q: UniPoly) -> BiPoly:
    """The curve g = q(x)*y - 1.  Needs nonconstant q."""
    if not isinstance(q, UniPoly) or q.is_constant():
        raise ValueError("build_g needs a nonconstant polynomial q")
    return BiPoly((UniPoly((-1,)), q))


def build_f(p: UniPoly, q: UniPoly) -> BiPoly:
    """The shifted curve f = p*q*y - (p + 1), both inputs nonconstant.

    Satisfies f = p*(q*y - 1) - 1, so f + 1 is the product of the vertical
    component p and the fiber curve g.
    """
    if not isinstance(p, UniPoly) or p.is_constant():
        raise ValueError("build_f needs a nonconstant polynomial p")
    if not isinstance(q, UniPoly) or q.is_constant():
        raise ValueError("build_f needs a nonconstant polynomial q")
    return BiPoly((-(p + 1), p * q))


def build_h(p: UniPoly, m: int, n: int, c: Fraction) -> BiPoly:
    """The auxiliary polynomial h = (p(x)*y - 1)**m + c*y**n.

    Exponents must be at least one and c nonzero; p may be any polynomial.
    """
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise ValueError("build_h needs integer exponents m >= 1 and n >= 1")
    scale = _scalar(c)
    if scale is None:
        raise TypeError(f"{c!r} is not a rational scalar")
    if not scale:
        raise ValueError("build_h needs a nonzero constant c")
    if not isinstance(p, UniPoly):
        raise TypeError("build_h needs a UniPoly first argument")
    base = BiPoly((UniPoly((-1,)), p))
    bump = BiPoly((ZERO,) * n + (UniPoly((scale,)),))
    return base ** m + bump


class SingularLocusCheck(NamedTuple):
    """Outcome of the finiteness test, with the two eliminants as witness."""

    finite: bool
    eliminants: tuple


def resultant_y(a: BiPoly, b: BiPoly) -> UniPoly:
    """Resultant eliminating y, as a polynomial in x.

    Sylvester determinant with the a-block on top, computed fraction-free
    over Q[x].  Vanishes identically exactly when a and b share a factor of
    positive y-degree, or when both leading y-coefficients vanish at every
    point (impossible over a field for nonzero inputs, but the pointwise
    specialization Res(a(t, y), b(t, y)) can drop when lead coefficients
    vanish at t, which is why the determinant is taken over Q[x] itself).
    Inputs must be nonzero and not both of y-degree zero.
    """
    if not a or not b:
        raise ValueError("resultant_y requires two nonzero polynomials")
    m = a.degree_y
    n = b.degree_y
    if m == 0 and n == 0:
        raise ValueError("resultant_y needs y to appear in at least one input")
    if m == 0:
        return a.coefficient(0) ** n
    if n == 0:
        return b.coefficient(0) ** m
    rows = sylvester_rows(a.coeffs, b.coeffs, ZERO)
    return _bareiss_determinant(rows, ZERO, ONE, exact_div)


def is_irreducible_y_linear(a: BiPoly) -> bool:
    """Irreducibility test for polynomials of y-degree exactly one.

    A(x)*y + B(x) is irreducible over the complex numbers exactly when A
    and B share no nonconstant factor: any factorization would have to put
    a common x-factor in front.
    """
    if a.degree_y != 1:
        raise ValueError("irreducibility test needs y-degree exactly one")
    lead = a.coefficient(1)
    rest = a.coefficient(0)
    if not rest:
        return lead.is_constant()
    return gcd(lead, rest).is_constant()


def _eliminant(a: BiPoly, b: BiPoly) -> UniPoly:
    """resultant_y with the all-y-free corner settled by convention.

    Two polynomials without y impose their conditions on x alone; the
    empty Sylvester determinant in y is one, leaving the x-resultant (taken
    on the swapped side) to decide finiteness.
    """
    if a.degree_y == 0 and b.degree_y == 0:
        return ONE
    return resultant_y(a, b)


def singular_locus_finite(h: BiPoly) -> SingularLocusCheck:
    """Decide whether the affine singular locus of h is finite.

    Computes the two eliminants r_x = Res_y(h_x, h_y) and
    r_y = Res_x(h_x, h_y).  Common zeros of the partials project into the
    zero sets of the eliminants, so if both are nonzero the singular locus
    sits inside a finite grid.  A zero eliminant leaves the question open
    (finite = False reports "not certified", not "infinite").
    """
    if h.is_constant():
        raise ValueError("singular locus needs a nonconstant polynomial")
    hx = h.partial_x()
    hy = h.partial_y()
    if not hx or not hy:
        return SingularLocusCheck(finite=False, eliminants=(ZERO, ZERO))
    r_x = _eliminant(hx, hy)
    r_y = _eliminant(hx.swap_vars(), hy.swap_vars())
    return SingularLocusCheck(finite=bool(r_x) and bool(r_y), eliminants=(r_x, r_y))
