"""Independent brute-force implementations used as test oracles.

Nothing in this module imports the package under test.  Polynomials are
plain low-to-high coefficient lists of Fractions (univariate) or dicts
keyed by (x_power, y_power) (bivariate), and every algorithm is the naive
schoolbook one, so agreement with the package is meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction


# -- univariate: low-to-high coefficient lists -------------------------------

def l_trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def l_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return l_trim(out)


def l_neg(a):
    return [-c for c in a]


def l_mul(a, b):
    a, b = l_trim(a), l_trim(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return l_trim(out)


def l_pow(a, k):
    out = [Fraction(1)]
    for _ in range(k):
        out = l_mul(out, a)
    return out


def l_scale(a, s):
    return l_trim([Fraction(s) * c for c in a])


def l_eval(a, t):
    """Direct power-sum evaluation (no Horner)."""
    t = Fraction(t)
    return sum((c * t ** i for i, c in enumerate(a)), Fraction(0))


def l_from_roots(pairs, unit=1):
    """Expand unit * prod (x - root)**multiplicity."""
    out = [Fraction(unit)]
    for root, multiplicity in pairs:
        out = l_mul(out, l_pow([Fraction(-root), Fraction(1)], multiplicity))
    return out


def l_compose(outer, inner):
    """outer(inner) by Horner on coefficient lists."""
    acc = []
    for c in reversed(l_trim(outer)):
        acc = l_add(l_mul(acc, inner), [c])
    return acc


def trial_root_count(coeffs, candidates):
    """Distinct roots among the candidate points, by direct evaluation."""
    return sum(1 for a in sorted(set(candidates)) if l_eval(coeffs, a) == 0)


# -- bivariate: {(x_power, y_power): Fraction} --------------------------------

def b_trim(d):
    return {k: v for k, v in d.items() if v}


def b_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return b_trim(out)


def b_mul(a, b):
    out = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, Fraction(0)) + v1 * v2
    return b_trim(out)


def b_pow(a, k):
    out = {(0, 0): Fraction(1)}
    for _ in range(k):
        out = b_mul(out, a)
    return out


def b_scale(a, s):
    return b_trim({k: Fraction(s) * v for k, v in a.items()})


def b_eval(a, x0, y0):
    x0, y0 = Fraction(x0), Fraction(y0)
    return sum((v * x0 ** i * y0 ** j for (i, j), v in a.items()), Fraction(0))


def b_from_uni(coeffs, variable):
    """Lift a univariate coefficient list into x or y."""
    assert variable in ("x", "y")
    if variable == "x":
        return b_trim({(i, 0): Fraction(c) for i, c in enumerate(coeffs)})
    return b_trim({(0, j): Fraction(c) for j, c in enumerate(coeffs)})


# -- brute-force functional decomposition ------------------------------------

def brute_decompose(coeffs, e):
    """Solve the full coefficient system of p = H(Q) at inner degree e.

    Q is normalized monic with zero constant term.  Works top coefficient
    down: each equation either introduces exactly one new unknown (solved
    linearly) or is a consistency check.  Returns (h_coeffs, q_coeffs) both
    low-to-high, or None.  Complete for the normalization, so disagreement
    with any other decomposition routine is a bug on one side.
    """
    coeffs = l_trim(coeffs)
    n = len(coeffs) - 1
    assert n >= 4 and n % e == 0 and 2 <= e <= n // 2
    r = n // e
    lead = coeffs[-1]
    q = [Fraction(0)] * e + [Fraction(1)]
    h = [None] * (r + 1)
    h[r] = lead
    q_powers = None
    for k in range(1, n + 1):
        target = coeffs[n - k]
        if k <= e - 1:
            partial = l_pow(q, r)
            got = h[r] * partial[n - k]
            q[e - k] = (target - got) / (r * h[r])
            continue
        if q_powers is None:
            q_powers = [l_pow(q, i) for i in range(r + 1)]
        total = Fraction(0)
        for i in range(r + 1):
            if h[i] is None:
                continue
            power = q_powers[i]
            if n - k < len(power):
                total += h[i] * power[n - k]
        if k % e == 0 and h[r - k // e] is None:
            h[r - k // e] = target - total
        elif total != target:
            return None
    composed = l_compose(h, q)
    if l_trim(composed) != coeffs:
        return None
    return l_trim(h), q


# -- generators ----------------------------------------------------------------

def random_fraction(rng: random.Random, span: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_coeffs(rng: random.Random, degree: int, span: int = 6) -> list:
    """Random exact coefficients with the requested exact degree."""
    out = [random_fraction(rng, span) for _ in range(degree)]
    lead = Fraction(0)
    while not lead:
        lead = random_fraction(rng, span)
    out.append(lead)
    return out
