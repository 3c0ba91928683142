"""Exact arithmetic for univariate polynomials with rational coefficients.

A polynomial is an immutable tuple of ``fractions.Fraction`` coefficients,
index ``i`` holding the coefficient of ``x**i``.  The stored tuple never has
a trailing zero, so the zero polynomial stores nothing and equality is plain
tuple equality.  Every operation is exact; no floats enter at any point.

The degree of the zero polynomial is the sentinel :data:`NEG_INF` rather
than an integer, so the degree laws

    deg(a*b) = deg(a) + deg(b)
    deg(a+b) <= max(deg(a), deg(b))

hold without a bogus integer standing in for "minus infinity".
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

#: Degree of the zero polynomial.  Compares below every integer.
NEG_INF = float("-inf")


def _scalar(value):
    """Coerce ``value`` to Fraction, or return None if it is not a scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return None


def _power_str(var: str, exp: int) -> str:
    return var if exp == 1 else f"{var}^{exp}"


def render_terms(terms) -> str:
    """Join (coefficient, variable powers) pairs into canonical text.

    ``terms`` is a sequence of ``(coeff, vars)`` with ``coeff`` a nonzero
    Fraction and ``vars`` a list of ``(name, exponent > 0)`` pairs, already
    in print order.  Signs are explicit, ``1`` coefficients are dropped in
    front of variables, and factors are joined with ``*`` so the result
    parses back under the expression grammar.
    """
    rendered = []
    for position, (coeff, powers) in enumerate(terms):
        pieces = [_power_str(var, exp) for var, exp in powers]
        magnitude = abs(coeff)
        if not pieces or magnitude != 1:
            pieces.insert(0, str(magnitude))
        body = "*".join(pieces)
        if position == 0:
            rendered.append(body if coeff > 0 else "-" + body)
        else:
            rendered.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(rendered)


class UniPoly:
    """Dense univariate polynomial over the rationals.

    Instances are immutable and hashable; arithmetic goes through the usual
    operators.  Scalars (``int`` or ``Fraction``) mix freely on either side:

    >>> p = UniPoly([-1, 0, 1])          # x^2 - 1
    >>> p * p == UniPoly([1, 0, -2, 0, 1])
    True
    >>> p(2)
    Fraction(3, 1)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = []
        for c in coeffs:
            s = _scalar(c)
            if s is None:
                raise TypeError(f"coefficient {c!r} is not a rational scalar")
            items.append(s)
        while items and not items[-1]:
            items.pop()
        self._coeffs = tuple(items)

    @classmethod
    def constant(cls, value) -> "UniPoly":
        s = _scalar(value)
        if s is None:
            raise TypeError(f"{value!r} is not a rational scalar")
        return cls((s,))

    @property
    def coeffs(self) -> tuple:
        """Coefficient tuple, low degree first, no trailing zero."""
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        """Leading coefficient; zero for the zero polynomial."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the stored degree)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    # -- value protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other):
        coerced = _coerce(other)
        if coerced is None:
            return NotImplemented
        return self._coeffs == coerced._coeffs

    def __hash__(self):
        # Constants hash like the number they equal, so p == 3 implies
        # hash(p) == hash(3) and mixed-type dict keys stay coherent.
        if not self._coeffs:
            return hash(0)
        if len(self._coeffs) == 1:
            return hash(self._coeffs[0])
        return hash(self._coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for exp in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[exp]
            if c:
                terms.append((c, [("x", exp)] if exp else []))
        return render_terms(terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = _scalar(other)
        if s is None:
            return NotImplemented
        if not s:
            raise ZeroDivisionError("division of a polynomial by scalar zero")
        return UniPoly(tuple(c / s for c in self._coeffs))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            raise ValueError("polynomial powers need a nonnegative exponent")
        result = ONE
        square = self
        k = exponent
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        db = len(other._coeffs) - 1
        rem = list(self._coeffs)
        if len(rem) <= db:
            return ZERO, self
        inv_lead = 1 / other._coeffs[-1]
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + db] * inv_lead
            if not c:
                continue
            quot[i] = c
            for j, bc in enumerate(other._coeffs):
                rem[i + j] -= c * bc
        return UniPoly(quot), UniPoly(rem[:db])

    def __floordiv__(self, other):
        result = divmod(self, other)
        if result is NotImplemented:
            return NotImplemented
        return result[0]

    def __mod__(self, other):
        result = divmod(self, other)
        if result is NotImplemented:
            return NotImplemented
        return result[1]

    # -- calculus and evaluation --------------------------------------------

    def derivative(self) -> "UniPoly":
        """Formal derivative."""
        return UniPoly(tuple(i * c for i, c in enumerate(self._coeffs) if i))

    def __call__(self, point) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        t = _scalar(point)
        if t is None:
            raise TypeError(f"evaluation point {point!r} is not rational")
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Substitute ``inner`` for the variable: returns self(inner)."""
        inner = _coerce(inner)
        if inner is None:
            raise TypeError("compose needs a polynomial or rational scalar")
        acc = ZERO
        for c in reversed(self._coeffs):
            acc = acc * inner + UniPoly.constant(c)
        return acc

    def monic(self) -> "UniPoly":
        """Scale to leading coefficient one.  The zero polynomial has no
        monic associate, so that input is rejected."""
        if not self._coeffs:
            raise ValueError("the zero polynomial has no monic associate")
        lead = self._coeffs[-1]
        if lead == 1:
            return self
        return UniPoly(tuple(c / lead for c in self._coeffs))


def _coerce(value):
    if isinstance(value, UniPoly):
        return value
    s = _scalar(value)
    if s is None:
        return None
    return UniPoly((s,))


ZERO = UniPoly()
ONE = UniPoly((1,))
X = UniPoly((0, 1))


def divrem(a: UniPoly, b: UniPoly):
    """Quotient and remainder with deg r < deg b.  b must be nonzero."""
    return divmod(a, b)


def exact_div(a: UniPoly, b: UniPoly) -> UniPoly:
    """Division known to be exact; raises if a remainder appears."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division: {a} by {b}")
    return q


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor by the Euclidean remainder sequence.

    Remainders are rescaled to monic at every step, which keeps coefficient
    growth tame without changing the ideal they generate.  The gcd of a
    nonzero polynomial and zero is the monic associate of the former; both
    arguments zero is rejected since no monic generator exists.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        r = a % b
        a, b = b, (r.monic() if r else r)
    return a.monic()


def _bareiss_determinant(rows, zero, one, div):
    """Fraction-free determinant (Bareiss) over an integral domain.

    ``rows`` is a square matrix as lists; ``div`` performs the exact
    divisions the algorithm guarantees.  Row swaps handle zero pivots and
    only flip the sign.  Works unchanged for Fraction entries and for
    UniPoly entries.
    """
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = div(row_i[j] * pivot - head * m[k][j], prev)
            row_i[k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_rows(a_coeffs, b_coeffs, zero):
    """Sylvester matrix rows, a-block first, coefficients high to low."""
    m = len(a_coeffs) - 1
    n = len(b_coeffs) - 1
    dim = m + n
    rows = []
    high_a = list(reversed(a_coeffs))
    high_b = list(reversed(b_coeffs))
    for shift in range(n):
        row = [zero] * dim
        row[shift:shift + m + 1] = high_a
        rows.append(row)
    for shift in range(m):
        row = [zero] * dim
        row[shift:shift + n + 1] = high_b
        rows.append(row)
    return rows


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Resultant of two nonzero polynomials.

    Convention: determinant of the Sylvester matrix whose upper block holds
    the coefficients of ``a``.  Equivalently

        resultant(a, b) = lc(a)**deg(b) * product of b(alpha)

    over the roots ``alpha`` of ``a`` counted with multiplicity.  It
    vanishes exactly when the two polynomials share a nonconstant factor.
    """
    if not a or not b:
        raise ValueError("resultant requires two nonzero polynomials")
    m = len(a._coeffs) - 1
    n = len(b._coeffs) - 1
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return a._coeffs[0] ** n
    if n == 0:
        return b._coeffs[0] ** m
    rows = sylvester_rows(a._coeffs, b._coeffs, Fraction(0))
    return _bareiss_determinant(rows, Fraction(0), Fraction(1), lambda x, y: x / y)
