"""Scalar layer: quadratic-surd field and number field residues."""

from fractions import Fraction

import pytest
from oracles import invert_a_plus_b_sqrt2, sign_a_plus_b_sqrt2

from mindec.errors import (
    DivisionByZero,
    MixedModuli,
    NonPositiveRadicand,
    NotTotallyReal,
)
from mindec.scalar import (
    MultiQuad,
    NumberField,
    mq_conjugate,
    mq_invert,
    mq_norm,
    mq_sign,
    mq_sqrt_rational,
    nf_invert,
    nf_trace,
    square_split,
)

SQRT2 = MultiQuad({2: 1})


class TestMultiQuadInvert:
    def test_one_plus_sqrt2_matches_cramer_oracle(self):
        # reference: solve the multiplication-matrix system for 1/(1+sqrt(2))
        c, d = invert_a_plus_b_sqrt2(Fraction(1), Fraction(1))
        assert (c, d) == (Fraction(-1), Fraction(1))
        inv = mq_invert(MultiQuad(1) + SQRT2)
        assert inv == MultiQuad({1: c, 2: d})

    def test_one_plus_sqrt2_product_is_one(self):
        u = MultiQuad(1) + SQRT2
        assert u * mq_invert(u) == MultiQuad(1)

    def test_three_term_inverse_round_trips(self):
        u = MultiQuad({1: Fraction(1, 2), 2: 1, 3: -2})
        assert u * mq_invert(u) == MultiQuad(1)

    def test_complex_surd_inverse(self):
        u = MultiQuad({1: 1, -1: 3})
        assert u * mq_invert(u) == MultiQuad(1)

    def test_zero_rejected(self):
        with pytest.raises(DivisionByZero):
            mq_invert(MultiQuad(0))


class TestMultiQuadSign:
    def test_seven_minus_five_sqrt2_matches_interval_oracle(self):
        expected = sign_a_plus_b_sqrt2(Fraction(7), Fraction(-5))
        assert expected == -1
        assert mq_sign(MultiQuad({1: 7, 2: -5})) == expected

    def test_tight_positive_combination(self):
        # 10 - 7 sqrt(2) is barely positive (sqrt(2) < 10/7)
        expected = sign_a_plus_b_sqrt2(Fraction(10), Fraction(-7))
        assert expected == 1
        assert mq_sign(MultiQuad({1: 10, 2: -7})) == expected

    def test_sign_of_complex_value_rejected(self):
        with pytest.raises(NotTotallyReal):
            mq_sign(MultiQuad({-1: 1}))

    @pytest.mark.parametrize(
        "coords, expected",
        [({1: 1, 2: 1, 3: -1}, 1), ({1: -1, 2: 1, 5: -1}, -1), ({6: 1, 10: -1}, -1)],
    )
    def test_multi_radical_signs(self, coords, expected):
        assert mq_sign(MultiQuad(coords)) == expected


class TestSquareSplit:
    @pytest.mark.parametrize(
        "n, s, d",
        [(4, 2, 1), (8, 2, 2), (12, 2, 3), (1, 1, 1), (-18, 3, -2), (7, 1, 7)],
    )
    def test_known_splits(self, n, s, d):
        assert square_split(n) == (s, d)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            square_split(0)


class TestSqrtRational:
    def test_non_positive_rejected(self):
        with pytest.raises(NonPositiveRadicand):
            mq_sqrt_rational(Fraction(-2))
        with pytest.raises(NonPositiveRadicand):
            mq_sqrt_rational(0)

    def test_square_of_result_recovers_input(self):
        for q in (Fraction(2), Fraction(8, 9), Fraction(49), Fraction(5, 4)):
            root = mq_sqrt_rational(q)
            assert root * root == MultiQuad(q)
            assert mq_sign(root) == 1


class TestNorm:
    def test_norm_of_complex_surd(self):
        assert mq_norm(MultiQuad({1: 1, -1: 1})) == mq_sqrt_rational(2)

    def test_norm_of_negative_rational(self):
        assert mq_norm(MultiQuad(-3)) == MultiQuad(3)


class TestNumberField:
    def test_invert_one_plus_generator_matches_cramer_oracle(self):
        # (1+Y)(c+dY) = (c+2d) + (c+d)Y in Q[Y]/(Y^2-2); solve for (1, 0)
        field = NumberField((-2, 0, 1))
        c, d = invert_a_plus_b_sqrt2(Fraction(1), Fraction(1))
        u = field.element((1, 1))
        assert nf_invert(u) == field.element((c, d))
        assert u * nf_invert(u) == field.one()

    def test_invert_in_cubic_field(self):
        field = NumberField((-2, 0, 0, 1))
        u = field.element((1, 1, 0))
        assert u * nf_invert(u) == field.one()

    def test_invert_zero_rejected(self):
        field = NumberField((-2, 0, 1))
        with pytest.raises(DivisionByZero):
            nf_invert(field.zero())

    def test_mixed_moduli_rejected(self):
        a = NumberField((-2, 0, 1)).gen()
        b = NumberField((1, 0, 1)).gen()
        with pytest.raises(MixedModuli):
            a + b

    def test_trace_against_power_sums(self):
        # traces in Q[Y]/(Y^3-2): roots are cbrt(2) times cube roots of
        # unity, so tr(Y) = 0, tr(Y^2) = 0, tr(Y^3) = 6
        field = NumberField((-2, 0, 0, 1))
        y = field.gen()
        assert nf_trace(y) == 0
        assert nf_trace(y * y) == 0
        assert nf_trace(y * y * y) == 6

    def test_trace_is_rational_valued(self):
        field = NumberField((-1, -1, 1))
        value = nf_trace(field.element((Fraction(1, 3), Fraction(5, 2))))
        assert isinstance(value, Fraction)
        # tr(a + bY) = 2a + b * tr(Y); tr(Y) = 1 for Y^2 - Y - 1
        assert value == 2 * Fraction(1, 3) + Fraction(5, 2)

    def test_reduction_wraps_high_powers(self):
        field = NumberField((-2, 0, 1))
        assert field.element((0, 0, 1)) == field.embed(2)


class TestConjugation:
    def test_fixes_reals_and_flips_imaginaries(self):
        value = MultiQuad({2: Fraction(1, 3), -5: 4, 1: -2})
        conj = mq_conjugate(value)
        assert conj == MultiQuad({2: Fraction(1, 3), -5: -4, 1: -2})

    def test_product_with_conjugate_is_square_modulus(self):
        u = MultiQuad({1: 1, -1: 2})
        prod = u * mq_conjugate(u)
        assert prod.is_rational and prod.as_fraction() == 5
