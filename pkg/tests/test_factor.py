"""Rational factorization driver, including recombination stress cases."""

import random
from fractions import Fraction

import pytest

from mindec.errors import DegreeCapExceeded, ZeroPolynomial
from mindec.factor import FactoredMinPoly, factor_rational
from mindec.poly import Polynomial, X


def poly_from_roots(roots):
    p = Polynomial((1,))
    for r in roots:
        p = p * (X - Polynomial((Fraction(r),)))
    return p


class TestBasicFactorizations:
    def test_distinct_integer_roots(self):
        factored = factor_rational(poly_from_roots([4, 9]))
        assert factored.factors == (
            (X - Polynomial((9,)), 1),
            (X - Polynomial((4,)), 1),
        )

    def test_rational_roots_with_content(self):
        # 24X^4 - 50X^3 + 35X^2 - 10X + 1 = 24(X-1)(X-1/2)(X-1/3)(X-1/4)
        p = Polynomial((1, -10, 35, -50, 24))
        factors = [f for f, _ in factor_rational(p).factors]
        expected_roots = {Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)}
        assert {-f.coefficient(0) for f in factors} == expected_roots

    def test_repeated_factors_carry_multiplicity(self):
        p = (Polynomial((-2, 0, 1)) ** 2 * (X - Polynomial((1,)))).monic()
        factored = factor_rational(p)
        assert dict(factored.factors) == {
            Polynomial((-2, 0, 1)): 2,
            X - Polynomial((1,)): 1,
        }

    def test_zero_factor_isolated(self):
        p = X**3 * Polynomial((-2, 0, 1))
        factored = factor_rational(p)
        assert (X, 3) in factored.factors
        assert factored.factors[-1][0] == X  # zero factor sorts last

    def test_constant_polynomial_has_no_factors(self):
        assert factor_rational(Polynomial((5,))).factors == ()

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            factor_rational(Polynomial())


class TestHardSplits:
    def test_swinnerton_dyer_quartic_is_irreducible(self):
        # X^4 - 10X^2 + 1 (minimal polynomial of sqrt(2)+sqrt(3)) is
        # irreducible over Q but splits modulo every prime, so the
        # recombination stage must reject all proper subsets
        p = Polynomial((1, 0, -10, 0, 1))
        assert factor_rational(p).factors == ((p, 1),)

    def test_product_of_conjugate_quadratics(self):
        a = Polynomial((-2, -2, 1))  # X^2 - 2X - 2, roots 1 +- sqrt(3)
        b = Polynomial((-1, -2, 1))  # X^2 - 2X - 1, roots 1 +- sqrt(2)
        factored = factor_rational(a * b)
        assert dict(factored.factors) == {a: 1, b: 1}

    def test_dense_grid_of_roots(self):
        roots = [-3, -2, -1, 1, 2, 3]
        factored = factor_rational(poly_from_roots(roots))
        assert len(factored.factors) == 6
        assert all(mult == 1 for _, mult in factored.factors)
        assert {-f.coefficient(0) for f, _ in factored.factors} == {
            Fraction(r) for r in roots
        }

    def test_cyclotomic_like_split(self):
        # X^6 - 1 = (X-1)(X+1)(X^2+X+1)(X^2-X+1)
        p = X**6 - Polynomial((1,))
        factors = dict(factor_rational(p).factors)
        assert factors == {
            Polynomial((-1, 1)): 1,
            Polynomial((1, 1)): 1,
            Polynomial((1, 1, 1)): 1,
            Polynomial((1, -1, 1)): 1,
        }

    def test_random_reassembly(self):
        pool = [
            Polynomial((-1, 1)),
            Polynomial((2, 1)),
            Polynomial((1, 0, 1)),
            Polynomial((-2, 0, 1)),
            Polynomial((1, 1, 1)),
            Polynomial((-2, 0, 0, 1)),
        ]
        rng = random.Random("reassemble")
        for _ in range(30):
            chosen = rng.sample(pool, rng.randint(1, 4))
            mults = [rng.randint(1, 2) for _ in chosen]
            product = Polynomial((1,))
            for f, m in zip(chosen, mults):
                product = product * f**m
            factored = factor_rational(product)
            assert dict(factored.factors) == dict(zip(chosen, mults))
            rebuilt = Polynomial((1,))
            for f, m in factored.factors:
                rebuilt = rebuilt * f**m
            assert rebuilt == product.monic()


class TestDegreeCap:
    def test_cap_enforced(self):
        p = X**5 - Polynomial((1,))
        with pytest.raises(DegreeCapExceeded):
            factor_rational(p, cap=4)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("MINDEC_DEGREE_CAP", "3")
        with pytest.raises(DegreeCapExceeded):
            factor_rational(X**4 - Polynomial((1,)))

    def test_default_cap_admits_moderate_degrees(self):
        p = poly_from_roots(range(1, 9))
        assert len(factor_rational(p).factors) == 8


class TestFactoredMinPoly:
    def test_reassemble_and_properties(self):
        p = (Polynomial((-2, 0, 1)) * X**2).monic()
        factored = factor_rational(p)
        assert isinstance(factored, FactoredMinPoly)
        assert factored.zero_index is not None
        assert factored.factors[factored.zero_index][0] == X

    def test_no_zero_factor_when_nonsingular(self):
        factored = factor_rational(Polynomial((-2, 0, 1)))
        assert factored.zero_index is None
