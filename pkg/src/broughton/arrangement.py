"""Topological invariants of the plane-curve arrangement attached to a
pair of one-variable polynomials.

The pair (p, q) defines two affine plane curves,

    C0 = { g = 0 }   with  g = q(x)*y - 1
    C1 = { f = 0 }   with  f = p(x)*q(x)*y - (p(x) + 1),

and M is the complement of their union in the affine plane.  The functions
here compute the invariants of M that are decided by elementary exact
computations on p and q alone:

  * the admissibility hypotheses (p and q share a root, p + 1 and q do
    not), under which C0 and C1 are disjoint smooth rational curves;
  * the Betti numbers b1 = 2 and b2 = s + t, with s and t the distinct
    root counts of q and p*q;
  * the multiple-fiber divisor of the pencil of f at its special value -1,
    whose component multiplicities all share the power index d of p;
  * the orbifold group of that pencil, cyclic of order d;
  * the positive-dimensional part of the first characteristic variety
    inside the character torus (C*)^2: one translated subtorus
    { exp(2*pi*i*j/d) } x C* for each j = 1, ..., d - 1, encoded exactly
    by the torsion character (j/d, 0) and the direction (0, 1).

Everything is exact; torsion characters are rational points of the
character torus and stay rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import build_f, build_g, is_irreducible_y_linear
from .squarefree import distinct_root_count, power_index, squarefree_decompose
from .unipoly import UniPoly, gcd


class HypothesesViolated(ValueError):
    """The admissibility hypotheses on (p, q) fail."""


@dataclass(frozen=True)
class Hypotheses:
    """Admissibility of the pair: both clauses and their conjunction."""

    common_root_pq: bool
    no_common_root_p1_q: bool
    satisfied: bool

    def __post_init__(self):
        if self.satisfied != (self.common_root_pq and self.no_common_root_p1_q):
            raise ValueError("satisfied must be the conjunction of the clauses")


@dataclass(frozen=True)
class BettiNumbers:
    b0: int
    b1: int
    b2: int
    s: int
    t: int


@dataclass(frozen=True)
class FiberDivisor:
    """Divisor of the special fiber of the pencil of f at value -1.

    Components are the squarefree factors of p with their multiplicities;
    the unit makes the reconstruction unit * prod(factor**multiplicity) = p
    exact.  divisor_multiplicity is the gcd of the multiplicities.
    """

    value: Fraction
    unit: Fraction
    components: tuple
    divisor_multiplicity: int


@dataclass(frozen=True)
class TorsionCharacter:
    """A torsion point (exp(2*pi*i*a0), exp(2*pi*i*a1)) of the torus."""

    a0: Fraction
    a1: Fraction

    def __post_init__(self):
        for a in (self.a0, self.a1):
            if not isinstance(a, Fraction) or not (0 <= a < 1):
                raise ValueError("torsion coordinates live in [0, 1)")


@dataclass(frozen=True)
class TranslatedTorus:
    """A torsion translate of a one-parameter subtorus of (C*)^2."""

    torsion: TorsionCharacter
    direction: tuple

    def __post_init__(self):
        n0, n1 = self.direction
        if (n0, n1) == (0, 0) or math.gcd(abs(n0), abs(n1)) != 1:
            raise ValueError("direction must be a primitive integer vector")


@dataclass(frozen=True)
class CharVarietyReport:
    hypotheses: Hypotheses
    betti: BettiNumbers
    divisor: FiberDivisor
    orbifold_order: int
    components: tuple
    resonance_trivial: bool
    irreducibility_flags: tuple

    def __post_init__(self):
        if len(self.components) != self.orbifold_order - 1:
            raise ValueError("component count must be orbifold order minus one")


def _require_nonconstant(value, name):
    if not isinstance(value, UniPoly) or value.is_constant():
        raise ValueError(f"{name} must be a nonconstant polynomial")


def check_hypotheses(p: UniPoly, q: UniPoly) -> Hypotheses:
    """Admissibility of the pair: p, q share a root; p + 1, q share none.

    Shared roots are read off gcd degrees, so no root is ever extracted.
    """
    _require_nonconstant(p, "p")
    _require_nonconstant(q, "q")
    common = gcd(p, q).degree >= 1
    clean_shift = gcd(p + 1, q).degree == 0
    return Hypotheses(
        common_root_pq=common,
        no_common_root_p1_q=clean_shift,
        satisfied=common and clean_shift,
    )


def _checked(p: UniPoly, q: UniPoly) -> Hypotheses:
    hypotheses = check_hypotheses(p, q)
    if not hypotheses.satisfied:
        raise HypothesesViolated(
            "the pair (p, q) is not admissible: need a common root of p and "
            "q and no common root of p + 1 and q"
        )
    return hypotheses


def betti(p: UniPoly, q: UniPoly) -> BettiNumbers:
    """Betti numbers of the complement M for an admissible pair.

    b1 counts the two curves; b2 = s + t where s is the number of distinct
    roots of q and t the number of distinct roots of p*q.
    """
    _checked(p, q)
    s = distinct_root_count(q)
    t = distinct_root_count(p * q)
    return BettiNumbers(b0=1, b1=2, b2=s + t, s=s, t=t)


def special_fiber_divisor(p: UniPoly) -> FiberDivisor:
    """Divisor of the fiber of the pencil of f over its special value -1.

    The fiber decomposes into the vertical lines carried by the squarefree
    factors of p, each with its multiplicity; the fiber curve itself is
    reduced and does not contribute to the divisor gcd beyond the lines.
    """
    _require_nonconstant(p, "p")
    decomposition = squarefree_decompose(p)
    d = 0
    for _, multiplicity in decomposition.parts:
        d = math.gcd(d, multiplicity)
    return FiberDivisor(
        value=Fraction(-1),
        unit=decomposition.unit,
        components=decomposition.parts,
        divisor_multiplicity=d,
    )


def orbifold_group(p: UniPoly) -> int:
    """Order of the cyclic orbifold group of the pencil of f.

    The only orbifold point is the special value -1 with multiplicity the
    power index d of p, so the group is Z/d.
    """
    _require_nonconstant(p, "p")
    return power_index(p).d


def characteristic_variety(p: UniPoly, q: UniPoly) -> CharVarietyReport:
    """Positive-dimensional components of the first characteristic variety.

    For an admissible pair they are exactly the translates

        W_j = { exp(2*pi*i*j/d) } x C*,   j = 1, ..., d - 1,

    of the second-coordinate subtorus, where d is the power index of p.
    Each is stored exactly: torsion character (j/d, 0), direction (0, 1).
    For d = 1 the list is empty.
    """
    hypotheses = _checked(p, q)
    betti_numbers = betti(p, q)
    divisor = special_fiber_divisor(p)
    d = power_index(p).d
    components = tuple(
        TranslatedTorus(
            torsion=TorsionCharacter(a0=Fraction(j, d), a1=Fraction(0)),
            direction=(0, 1),
        )
        for j in range(1, d)
    )
    flags = (
        is_irreducible_y_linear(build_f(p, q)),
        is_irreducible_y_linear(build_g(q)),
    )
    return CharVarietyReport(
        hypotheses=hypotheses,
        betti=betti_numbers,
        divisor=divisor,
        orbifold_order=d,
        components=components,
        resonance_trivial=True,
        irreducibility_flags=flags,
    )


def resonance(p: UniPoly, q: UniPoly) -> bool:
    """Triviality of the first resonance variety for an admissible pair.

    Always true here: the cup product on first cohomology is nontrivial for
    these complements, which kills every resonance component.
    """
    _checked(p, q)
    return True
