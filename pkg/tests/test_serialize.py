"""JSON round trips and the polynomial text grammar."""

import json
from fractions import Fraction

import pytest

from mindec.errors import FormatError, PolyParseError
from mindec.generator import random_matrix
from mindec.matrix import DenseMatrix
from mindec.poly import Polynomial, X
from mindec.scalar import MultiQuad
from mindec.serialize import (
    MatrixDocument,
    document_from_json,
    document_to_json,
    matrix_from_json,
    matrix_to_json,
    parse_poly_expression,
    poly_from_json,
    poly_to_json,
    poly_to_text,
    scalar_from_json,
    scalar_to_json,
)

SQRT2 = MultiQuad({2: 1})


class TestScalarJson:
    def test_rationals_travel_as_strings(self):
        assert scalar_to_json(Fraction(-5, 2)) == "-5/2"
        assert scalar_to_json(3) == "3"
        assert scalar_from_json("-5/2") == Fraction(-5, 2)

    def test_rational_multiquad_collapses_to_string(self):
        assert scalar_to_json(MultiQuad(Fraction(7, 3))) == "7/3"

    def test_surd_objects_round_trip(self):
        value = MultiQuad(Fraction(1, 2)) + SQRT2 * 3
        data = scalar_to_json(value)
        assert data == {"1": "1/2", "2": "3"}
        assert scalar_from_json(data) == value

    def test_imaginary_labels_are_negative_ints(self):
        value = MultiQuad({-1: Fraction(2)})
        data = scalar_to_json(value)
        assert data == {"-1": "2"}
        assert scalar_from_json(data) == value

    def test_bad_inputs(self):
        with pytest.raises(FormatError):
            scalar_from_json("seven")
        with pytest.raises(FormatError):
            scalar_from_json({"abc": "1"})
        with pytest.raises(FormatError):
            scalar_from_json({"2": 3})
        with pytest.raises(FormatError):
            scalar_from_json([1, 2])
        with pytest.raises(FormatError):
            scalar_to_json(1.5)


class TestMatrixJson:
    def test_rational_round_trip_is_stable(self):
        for k in range(15):
            M = random_matrix(f"ser-{k}", max_size=5).matrix
            data = matrix_to_json(M)
            back = matrix_from_json(data)
            assert back == M
            # serializing again must reproduce the same JSON text
            assert json.dumps(matrix_to_json(back), sort_keys=True) == json.dumps(
                data, sort_keys=True
            )

    def test_mixed_entries_promote_uniformly(self):
        M = DenseMatrix([[SQRT2, MultiQuad(1)], [MultiQuad(0), SQRT2 * -1]])
        data = matrix_to_json(M)
        # rational positions still serialize as plain strings
        assert data["entries"][0][1] == "1"
        assert data["entries"][0][0] == {"2": "1"}
        back = matrix_from_json(data)
        assert back == M
        assert all(isinstance(e, MultiQuad) for row in back.rows for e in row)

    def test_document_metadata_round_trip(self):
        doc = MatrixDocument(
            matrix=DenseMatrix([[1, 2], [0, 1]]),
            label="(X-1)^2",
            seed="demo",
            min_poly=(X - 1) ** 2,
        )
        data = document_to_json(doc)
        assert data["label"] == "(X-1)^2"
        assert data["seed"] == "demo"
        back = document_from_json(data)
        assert back.matrix == doc.matrix
        assert back.label == doc.label
        assert back.seed == doc.seed
        assert back.min_poly == doc.min_poly

    def test_bare_matrix_has_no_metadata_keys(self):
        data = document_to_json(MatrixDocument(matrix=DenseMatrix([[4]])))
        assert set(data) == {"n", "entries"}

    def test_malformed_documents(self):
        with pytest.raises(FormatError):
            document_from_json([1, 2])
        with pytest.raises(FormatError):
            document_from_json({"n": 2})
        with pytest.raises(FormatError):
            document_from_json({"entries": "nope"})
        with pytest.raises(FormatError):
            document_from_json({"entries": [["1", "2"], ["3"]]})
        with pytest.raises(FormatError):
            document_from_json({"n": 3, "entries": [["1", "0"], ["0", "1"]]})
        with pytest.raises(FormatError):
            document_from_json({"entries": [["1"]], "label": 7})


class TestPolyJson:
    def test_coefficient_lists_round_trip(self):
        p = Polynomial((Fraction(1, 3), 0, -2, 1))
        data = poly_to_json(p)
        assert data == ["1/3", "0", "-2", "1"]
        assert poly_from_json(data) == p

    def test_zero_is_the_empty_list(self):
        assert poly_to_json(Polynomial()) == []
        assert poly_from_json([]).is_zero

    def test_surd_coefficients_supported(self):
        p = Polynomial((SQRT2, MultiQuad(1)))
        assert poly_from_json(poly_to_json(p)) == p

    def test_non_list_rejected(self):
        with pytest.raises(FormatError):
            poly_from_json("X^2")


class TestPolyText:
    def test_rendering(self):
        assert poly_to_text(Polynomial()) == "0"
        assert poly_to_text(Polynomial((2, -1, Fraction(3, 2)))) == "2 - X + 3/2*X^2"
        assert poly_to_text(X ** 3 - X) == "-X + X^3"

    def test_render_parse_round_trip(self):
        import random

        rng = random.Random("poly-text")
        for _ in range(50):
            coeffs = [
                Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, 7))
            ]
            p = Polynomial(tuple(coeffs))
            assert parse_poly_expression(poly_to_text(p)) == p

    def test_surd_coefficients_have_no_text_form(self):
        with pytest.raises(FormatError):
            poly_to_text(Polynomial((SQRT2,)))


class TestPolyGrammar:
    def test_juxtaposition_multiplies(self):
        assert parse_poly_expression("(X^2-2)(X-1)^2") == (X ** 2 - 2) * (X - 1) ** 2
        assert parse_poly_expression("2X") == 2 * X
        assert parse_poly_expression("2(X+1)") == 2 * (X + 1)

    def test_explicit_star_and_powers(self):
        assert parse_poly_expression("3*X^2 - 1/2*X + 5") == 3 * X ** 2 - Fraction(1, 2) * X + 5
        # '^' binds tighter than juxtaposition: 2X^3 is 2*(X^3)
        assert parse_poly_expression("2X^3") == 2 * X ** 3

    def test_leading_sign_and_nesting(self):
        assert parse_poly_expression("-X + 1") == -X + 1
        assert parse_poly_expression("((X-1)^2 + 1)^2") == ((X - 1) ** 2 + 1) ** 2

    def test_fractions_are_exact(self):
        p = parse_poly_expression("1/3 + 1/3 + 1/3")
        assert p == Polynomial((1,))

    def test_whitespace_is_free(self):
        a = parse_poly_expression("( X ^ 2 - 2 ) ( X - 1 )")
        b = parse_poly_expression("(X^2-2)(X-1)")
        assert a == b

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "X +",
            "(X-1",
            "X-1)",
            "1/0",
            "X^",
            "X^y",
            "X$2",
            "X..",
        ],
    )
    def test_malformed_expressions(self, text):
        with pytest.raises(PolyParseError):
            parse_poly_expression(text)

    def test_error_messages_carry_positions(self):
        with pytest.raises(PolyParseError, match="position"):
            parse_poly_expression("X-1)")
        with pytest.raises(PolyParseError, match="at 2"):
            parse_poly_expression("X µ 1")
