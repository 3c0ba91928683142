"""Report documents: determinism, serialization shape, and notes."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from broughton.report import (
    SCHEMA_VERSION,
    build_report,
    render_json,
    render_text,
    report_mapping,
    zahid_polynomials,
)
from broughton.unipoly import UniPoly, X

F = Fraction


class TestStandardFamily:
    def test_polynomial_forms(self):
        p, q = zahid_polynomials(5, 3)
        assert p == X ** 5
        assert q == X * (X + 2) * (X + 3)
        p, q = zahid_polynomials(1, 1)
        assert (p, q) == (X, X)

    def test_rejects_bad_parameters(self):
        for a, b in ((0, 1), (1, 0), (-2, 3), (2, -1)):
            with pytest.raises(ValueError):
                zahid_polynomials(a, b)
        with pytest.raises(ValueError):
            zahid_polynomials(2.0, 3)


class TestDocument:
    def test_schema_and_inputs(self):
        document = build_report(*zahid_polynomials(3, 2))
        assert document.schema_version == SCHEMA_VERSION == "1"
        assert document.inputs == (("p", "x^3"), ("q", "x^2 + 2*x"))

    def test_notes_carry_the_unverified_claims(self):
        document = build_report(*zahid_polynomials(3, 2))
        cited = [note for note in document.notes if "(cited, not verified)" in note]
        assert len(cited) == 3
        topics = {note.split(":", 1)[0] for note in document.notes}
        assert {"maps", "cohomology", "resonance", "scope"} <= topics
        assert all("no positive-dimensional" not in note for note in document.notes)

    def test_power_index_one_adds_a_note(self):
        document = build_report(X, X)
        assert any("power index d = 1" in note for note in document.notes)
        assert document.body.components == ()


class TestJson:
    def test_key_order_is_fixed(self):
        mapping = report_mapping(build_report(*zahid_polynomials(2, 1)))
        assert list(mapping) == [
            "schema_version",
            "inputs",
            "hypotheses",
            "betti",
            "divisor",
            "orbifold_order",
            "components",
            "resonance_trivial",
            "irreducibility",
            "notes",
        ]

    def test_values_for_square_times_line(self):
        mapping = report_mapping(build_report(*zahid_polynomials(2, 1)))
        assert mapping["inputs"] == {"p": "x^2", "q": "x"}
        assert mapping["hypotheses"]["satisfied"] is True
        assert mapping["betti"] == {"b0": 1, "b1": 2, "b2": 2, "s": 1, "t": 1}
        assert mapping["divisor"]["value"] == "-1/1"
        assert mapping["divisor"]["unit"] == "1/1"
        assert mapping["divisor"]["components"] == [
            {"factor": "x", "multiplicity": 2}
        ]
        assert mapping["divisor"]["divisor_multiplicity"] == 2
        assert mapping["orbifold_order"] == 2
        assert mapping["components"] == [
            {"torsion": ["1/2", "0/1"], "direction": [0, 1]}
        ]
        assert mapping["resonance_trivial"] is True
        assert mapping["irreducibility"] == {"f": True, "g": True}

    def test_rationals_are_strings_never_floats(self):
        mapping = report_mapping(build_report(*zahid_polynomials(4, 2)))

        def walk(node):
            if isinstance(node, dict):
                for value in node.values():
                    walk(value)
            elif isinstance(node, list):
                for value in node:
                    walk(value)
            else:
                assert not isinstance(node, float)

        walk(mapping)
        for component in mapping["components"]:
            for entry in component["torsion"]:
                numerator, denominator = entry.split("/")
                assert int(denominator) > 0
                assert F(int(numerator), int(denominator)) == F(entry)

    def test_byte_identical_across_runs(self):
        def render():
            return render_json(report_mapping(build_report(*zahid_polynomials(5, 3))))

        first, second = render(), render()
        assert first == second
        assert json.loads(first) == json.loads(second)
        assert first.isascii()

    def test_torsion_fractions_are_reduced(self):
        mapping = report_mapping(build_report(*zahid_polynomials(6, 1)))
        torsions = [c["torsion"][0] for c in mapping["components"]]
        assert torsions == ["1/6", "1/3", "1/2", "2/3", "5/6"]


class TestText:
    def test_lines_cover_every_fact(self):
        text = render_text(build_report(*zahid_polynomials(3, 2)))
        assert "inputs: p = x^3, q = x^2 + 2*x" in text
        assert "b2 = 4 (s = 2, t = 2)" in text
        assert "orbifold group: Z/3" in text
        assert "2 positive-dimensional component(s)" in text
        assert "W_1 = {exp(2πi·1/3)} × C*" in text
        assert "W_2 = {exp(2πi·2/3)} × C*" in text
        assert "[torsion (1/3, 0/1), direction (0, 1)]" in text
        assert "special fiber at -1: (x)^3 (multiplicity gcd 3)" in text
        assert "resonance trivial: yes" in text
        assert "irreducible: f: yes, g: yes" in text
        assert "  - maps:" in text

    def test_divisor_text_shows_unit_and_powers(self):
        document = build_report(F(1) * X ** 2, X)
        text = render_text(document)
        assert "(x)^2" in text
        scaled = build_report(X ** 2, F(3) * X)
        assert "special fiber at -1: (x)^2" in render_text(scaled)
