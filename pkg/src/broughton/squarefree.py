"""Squarefree structure of rational polynomials.

Everything the arrangement layer needs to know about a defining polynomial
``p`` reduces to its squarefree decomposition

    p = unit * f1**m1 * f2**m2 * ... * fk**mk

with monic, squarefree, pairwise coprime ``fi`` and strictly increasing
multiplicities ``mi``.  Yun's algorithm computes it with gcds alone; in
characteristic zero it recovers every multiplicity exactly.  The power
index d = gcd(m1, ..., mk) measures how far ``p`` is a perfect power: over
the complex numbers p = (unit root adjusted) base**d with d maximal, and d
is what drives both the multiple-fiber multiplicity and the orbifold group
of the associated pencil.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .unipoly import ONE, UniPoly, exact_div, gcd


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """Unit and (factor, multiplicity) parts, multiplicities increasing."""

    unit: Fraction
    parts: tuple

    def reconstruct(self) -> UniPoly:
        """Multiply the decomposition back out, exactly."""
        acc = UniPoly.constant(self.unit)
        for factor, multiplicity in self.parts:
            acc = acc * factor ** multiplicity
        return acc


@dataclass(frozen=True)
class PowerIndex:
    """Maximal d with input = unit * base**d, base monic with exponent-gcd 1."""

    d: int
    base: UniPoly
    unit: Fraction


def squarefree_decompose(a: UniPoly) -> SquarefreeDecomposition:
    """Yun's squarefree decomposition.

    Returns the unit (the leading coefficient) and the list of monic
    squarefree factors with their multiplicities, strictly increasing and
    with constant factors dropped.  A constant input has empty parts.

    >>> squarefree_decompose(UniPoly([0, 0, 2, 1])).parts
    ((UniPoly(x + 2), 1), (UniPoly(x), 2))
    """
    if not a:
        raise ValueError("squarefree decomposition needs a nonzero polynomial")
    unit = a.leading_coefficient
    if a.is_constant():
        return SquarefreeDecomposition(unit=unit, parts=())
    w0 = a.monic()
    g = gcd(w0, w0.derivative())
    w = exact_div(w0, g)
    z = exact_div(w0.derivative(), g) - w.derivative()
    parts = []
    multiplicity = 1
    while w.degree > 0:
        f = gcd(w, z) if z else w.monic()
        if f.degree > 0:
            parts.append((f, multiplicity))
        w = exact_div(w, f)
        z = exact_div(z, f) - w.derivative() if z else z
        multiplicity += 1
    return SquarefreeDecomposition(unit=unit, parts=tuple(parts))


def radical(a: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of ``a``."""
    if not a or a.is_constant():
        raise ValueError("radical needs a nonconstant polynomial")
    acc = ONE
    for factor, _ in squarefree_decompose(a).parts:
        acc = acc * factor
    return acc


def distinct_root_count(a: UniPoly) -> int:
    """Number of distinct complex roots of a nonzero polynomial.

    Equals the degree of the radical, since a squarefree polynomial over a
    characteristic-zero field has exactly ``degree`` distinct roots.
    """
    if not a:
        raise ValueError("the zero polynomial has every point as a root")
    if a.is_constant():
        return 0
    return sum(factor.degree for factor, _ in squarefree_decompose(a).parts)


def power_index(a: UniPoly) -> PowerIndex:
    """Largest d with a = unit * base**d for a monic polynomial base.

    Over the complex numbers the unit is itself always a d-th power, so d
    depends only on the gcd of the squarefree multiplicities.
    """
    if not a or a.is_constant():
        raise ValueError("power index needs a nonconstant polynomial")
    decomposition = squarefree_decompose(a)
    d = 0
    for _, multiplicity in decomposition.parts:
        d = math.gcd(d, multiplicity)
    base = ONE
    for factor, multiplicity in decomposition.parts:
        base = base * factor ** (multiplicity // d)
    return PowerIndex(d=d, base=base, unit=decomposition.unit)
