"""Report assembly and serialization for the command-line interface.

A report gathers every computed invariant of an admissible pair (p, q)
into one document.  JSON serialization is deterministic: fixed key order,
all rationals rendered as "numerator/denominator" strings in lowest terms,
and never a float, so identical inputs give byte-identical output.  Text
rendering prints the same facts with the torsion points spelled as roots
of unity.

Claims the computation relies on but cannot itself check are carried in
the notes, each marked "cited, not verified".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import CharVarietyReport, characteristic_variety
from .parser import print_canonical
from .unipoly import UniPoly, X

SCHEMA_VERSION = "1"

_NOTE_MAPS = (
    "maps: every positive-dimensional component is pulled back from the "
    "pencil of f; the candidate maps built from other monomials in f and g "
    "contribute none (cited, not verified)"
)
_NOTE_COHOMOLOGY = (
    "cohomology: on each listed component the local systems have first "
    "twisted cohomology of dimension >= 1, with equality outside finitely "
    "many local systems (cited, not verified)"
)
_NOTE_RESONANCE = (
    "resonance: the resonance varieties of the complement vanish while the "
    "cup product on first cohomology is nontrivial (cited, not verified)"
)
_NOTE_ISOLATED = (
    "scope: isolated (zero-dimensional) points of the characteristic "
    "variety are not computed here"
)
_NOTE_NO_COMPONENTS = (
    "no positive-dimensional components: p is not a proper power of a "
    "polynomial (power index d = 1)"
)


@dataclass(frozen=True)
class ReportDocument:
    """Everything the charvar command reports for one admissible pair."""

    schema_version: str
    inputs: tuple
    body: CharVarietyReport
    notes: tuple


def zahid_polynomials(p_exponent: int, q_factors: int):
    """The standard family: p = x**a and q = x*(x+2)*...*(x+b).

    For q_factors = 1 the second polynomial is plainly x.  Both parameters
    must be positive.
    """
    if not isinstance(p_exponent, int) or p_exponent < 1:
        raise ValueError("the exponent of p must be a positive integer")
    if not isinstance(q_factors, int) or q_factors < 1:
        raise ValueError("the factor count of q must be a positive integer")
    p = X ** p_exponent
    q = X
    for k in range(2, q_factors + 1):
        q = q * (X + k)
    return p, q


def build_report(p: UniPoly, q: UniPoly) -> ReportDocument:
    """Assemble the full document for an admissible pair."""
    body = characteristic_variety(p, q)
    notes = [_NOTE_MAPS, _NOTE_COHOMOLOGY, _NOTE_RESONANCE, _NOTE_ISOLATED]
    if body.orbifold_order == 1:
        notes.append(_NOTE_NO_COMPONENTS)
    return ReportDocument(
        schema_version=SCHEMA_VERSION,
        inputs=(("p", print_canonical(p)), ("q", print_canonical(q))),
        body=body,
        notes=tuple(notes),
    )


def _rat(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def report_mapping(document: ReportDocument) -> dict:
    """Flatten a document to JSON-ready primitives in a fixed key order."""
    body = document.body
    return {
        "schema_version": document.schema_version,
        "inputs": dict(document.inputs),
        "hypotheses": {
            "common_root_pq": body.hypotheses.common_root_pq,
            "no_common_root_p1_q": body.hypotheses.no_common_root_p1_q,
            "satisfied": body.hypotheses.satisfied,
        },
        "betti": {
            "b0": body.betti.b0,
            "b1": body.betti.b1,
            "b2": body.betti.b2,
            "s": body.betti.s,
            "t": body.betti.t,
        },
        "divisor": {
            "value": _rat(body.divisor.value),
            "unit": _rat(body.divisor.unit),
            "components": [
                {"factor": print_canonical(factor), "multiplicity": multiplicity}
                for factor, multiplicity in body.divisor.components
            ],
            "divisor_multiplicity": body.divisor.divisor_multiplicity,
        },
        "orbifold_order": body.orbifold_order,
        "components": [
            {
                "torsion": [_rat(torus.torsion.a0), _rat(torus.torsion.a1)],
                "direction": list(torus.direction),
            }
            for torus in body.components
        ],
        "resonance_trivial": body.resonance_trivial,
        "irreducibility": {
            "f": body.irreducibility_flags[0],
            "g": body.irreducibility_flags[1],
        },
        "notes": list(document.notes),
    }


def render_json(mapping: dict) -> str:
    """Deterministic JSON text: fixed insertion order, two-space indent."""
    return json.dumps(mapping, indent=2, ensure_ascii=True)


def render_text(document: ReportDocument) -> str:
    """Human-readable rendering of the same facts."""
    body = document.body
    inputs = dict(document.inputs)
    hyp = body.hypotheses
    lines = [
        f"inputs: p = {inputs['p']}, q = {inputs['q']}",
        "hypotheses: common root of p and q: "
        f"{_yes(hyp.common_root_pq)}; no common root of p+1 and q: "
        f"{_yes(hyp.no_common_root_p1_q)}; admissible: {_yes(hyp.satisfied)}",
        f"betti numbers: b0 = {body.betti.b0}, b1 = {body.betti.b1}, "
        f"b2 = {body.betti.b2} (s = {body.betti.s}, t = {body.betti.t})",
        f"special fiber at -1: {_divisor_text(body.divisor)} "
        f"(multiplicity gcd {body.divisor.divisor_multiplicity})",
        f"orbifold group: Z/{body.orbifold_order}",
        f"characteristic variety: {len(body.components)} positive-dimensional "
        "component(s)",
    ]
    for j, torus in enumerate(body.components, start=1):
        a0 = torus.torsion.a0
        lines.append(
            f"  W_{j} = {{exp(2πi·{a0.numerator}/{a0.denominator})}} × C*  "
            f"[torsion ({_rat(a0)}, {_rat(torus.torsion.a1)}), "
            f"direction {torus.direction}]"
        )
    lines.append(f"resonance trivial: {_yes(body.resonance_trivial)}")
    lines.append(
        f"irreducible: f: {_yes(body.irreducibility_flags[0])}, "
        f"g: {_yes(body.irreducibility_flags[1])}"
    )
    lines.append("notes:")
    for note in document.notes:
        lines.append(f"  - {note}")
    return "\n".join(lines)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _divisor_text(divisor) -> str:
    pieces = []
    if divisor.unit != 1:
        pieces.append(_rat(divisor.unit))
    for factor, multiplicity in divisor.components:
        text = print_canonical(factor)
        pieces.append(f"({text})^{multiplicity}" if multiplicity > 1 else f"({text})")
    return " * ".join(pieces)
