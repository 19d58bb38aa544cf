from fractions import Fraction

import pytest

from curvlab.io_format import (HEADER, ParseError, TensorDocument,
                               build_tensor, document_from_tensor,
                               parse_document, serialize_document)
from curvlab.harness import model_constant_sectional, random_tensor
from curvlab.spaces import InvariantViolation, make_space


GOOD = """\
curvlab-tensor/1
m = 2
s = 1
J = canonical
name = demo
symmetrize = false
bianchi = false
R[1,2,2,1] = -1
R[2,1,2,1] = 1        # comment after a value
R[1,2,1,2] = 1
R[2,1,1,2] = -1
"""


class TestParse:
    def test_parse_fields(self):
        doc = parse_document(GOOD)
        assert (doc.m, doc.s, doc.name) == (2, 1, "demo")
        assert doc.J is None and not doc.symmetrize
        assert doc.entries[0] == (1, 2, 1, 2, Fraction(1))

    def test_round_trip_canonical(self):
        doc = parse_document(GOOD)
        text = serialize_document(doc)
        assert serialize_document(parse_document(text)) == text

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_document("m = 2\ns = 1\n")

    def test_error_carries_line_number(self):
        bad = GOOD + "R[1,2,2,1] = 0.5\n"
        with pytest.raises(ParseError) as exc:
            parse_document(bad)
        assert exc.value.line == len(bad.splitlines())

    def test_unknown_key(self):
        with pytest.raises(ParseError) as exc:
            parse_document(f"{HEADER}\nm = 2\ns = 1\nbogus = 1\n")
        assert "bogus" in str(exc.value)

    def test_entry_indices_validated_on_build(self):
        doc = parse_document(f"{HEADER}\nm = 2\ns = 1\nR[9,1,1,2] = 1\n")
        with pytest.raises(Exception):
            build_tensor(doc)

    def test_custom_J_rows_required_complete(self):
        text = f"{HEADER}\nm = 1\ns = 0\nJ = custom\nJ[1] = 0 -1\n"
        with pytest.raises(ParseError):
            parse_document(text)

    def test_bad_J_names_invariant(self):
        text = (f"{HEADER}\nm = 1\ns = 0\nJ = custom\n"
                "J[1] = 1 0\nJ[2] = 0 1\n")
        doc = parse_document(text)
        with pytest.raises(InvariantViolation) as exc:
            build_tensor(doc)
        assert exc.value.invariant == "J.square"

    def test_zero_entries_dropped_and_duplicates_merged(self):
        text = (f"{HEADER}\nm = 1\ns = 0\n"
                "R[1,2,2,1] = 1/2\nR[1,2,2,1] = 1/2\nR[1,2,2,1] = -1\n"
                "R[2,1,2,1] = 0\n")
        doc = parse_document(text)
        assert doc.entries == ()


class TestBuild:
    def test_sparse_constant_model_matches_generator(self, sp21):
        R = model_constant_sectional(sp21, Fraction(5, 2))
        doc = document_from_tensor(R, name="c")
        R2 = build_tensor(doc)
        assert (R.components == R2.components).all()

    def test_one_based_indices(self):
        doc = parse_document(
            f"{HEADER}\nm = 1\ns = 0\n"
            "R[1,2,2,1] = 3\nR[2,1,2,1] = -3\nR[1,2,1,2] = -3\nR[2,1,1,2] = 3\n")
        R = build_tensor(doc)
        assert R.components[0, 1, 1, 0] == 3

    def test_symmetrize_flag_round_trip(self, sp21):
        doc = TensorDocument(m=2, s=1, symmetrize=True,
                             entries=((1, 2, 3, 4, Fraction(1)),))
        R = build_tensor(doc)
        assert R.components[1, 0, 2, 3] == -R.components[0, 1, 2, 3]

    def test_random_tensor_round_trip(self, sp31):
        R = random_tensor(sp31, 77)
        doc = document_from_tensor(R, name="rt", seed=77)
        text = serialize_document(doc)
        R2 = build_tensor(parse_document(text))
        assert (R.components == R2.components).all()

    def test_custom_J_space_round_trip(self):
        J = [[0, 1], [-1, 0]]
        sp = make_space(1, 0, J=J)
        R = model_constant_sectional(sp, 2)
        doc = document_from_tensor(R)
        text = serialize_document(doc)
        R2 = build_tensor(parse_document(text))
        assert (R2.space.J == sp.J).all()
        assert (R.components == R2.components).all()
