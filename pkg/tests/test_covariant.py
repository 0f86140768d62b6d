"""Generic covariants, their rational traces, and concrete projectors."""

from fractions import Fraction

import pytest
from oracles import fraction_rank

import mindec.covariant as covariant_mod
from mindec.covariant import (
    build_covariant_system,
    materialize_projectors,
    split_covariants_over_extension,
    verify_system,
)
from mindec.errors import (
    DoesNotSplit,
    PartitionOfUnityFailure,
    SystemMatrixMismatch,
)
from mindec.factor import factor_rational
from mindec.matrix import DenseMatrix, companion, horner_eval
from mindec.poly import Polynomial, X
from mindec.scalar import MultiQuad, mq_conjugate


class TestSqrt2System:
    """Covariant data of the irreducible quadratic X^2 - 2, checked
    against hand-expanded Bezout cofactors."""

    def setup_method(self):
        self.system = build_covariant_system(factor_rational(Polynomial((-2, 0, 1))))
        self.gen = self.system.generics[0]
        self.ring = self.gen.ring
        self.y = self.ring.gen()
        self.one = self.ring.one()

    def test_complement_is_x_plus_y(self):
        assert self.gen.complement == Polynomial((self.y, self.one))

    def test_bezout_is_quarter_y(self):
        assert self.gen.bezout == Polynomial((self.y * Fraction(1, 4),))

    def test_bezout_identity_by_expansion(self):
        # (Y/4)(X+Y) + (-Y/4)(X-Y) = Y^2/2 = 1: expand both products and
        # compare coefficient lists instead of trusting ext_gcd
        quarter_y = self.y * Fraction(1, 4)
        x_plus_y = Polynomial((self.y, self.one))
        x_minus_y = Polynomial((-self.y, self.one))
        lhs = Polynomial((quarter_y,)) * x_plus_y + Polynomial((-quarter_y,)) * x_minus_y
        assert lhs == Polynomial((self.one,))

    def test_covariant_is_yx_plus_2_over_4(self):
        expected = Polynomial(
            (self.ring.embed(Fraction(1, 2)), self.y * Fraction(1, 4))
        )
        assert self.gen.covariant == expected

    def test_rational_traces(self):
        assert self.system.e_polys == (Polynomial((1,)),)
        assert self.system.s_polys == (X,)
        assert self.system.n_polys == (Polynomial(),)


class TestProjectors:
    def test_companion_mixed_system_ranks(self):
        # eigenprojector ranks checked by plain-Fraction elimination
        m = (Polynomial((-2, 0, 1)) * Polynomial((-1, 1))).monic()
        M = companion(m)
        system = build_covariant_system(factor_rational(m))
        projectors = materialize_projectors(system, M)
        assert len(projectors) == 2
        by_factor = dict(zip([f for f, _ in system.factored.factors], projectors))
        quad = by_factor[Polynomial((-2, 0, 1))]
        lin = by_factor[Polynomial((-1, 1))]
        assert fraction_rank([list(r) for r in quad.rows]) == 2
        assert fraction_rank([list(r) for r in lin.rows]) == 1
        for P in projectors:
            assert P @ P == P
        assert projectors[0] + projectors[1] == DenseMatrix.identity(3)
        assert (quad @ lin).is_zero

    def test_wrong_matrix_rejected(self):
        system = build_covariant_system(factor_rational(Polynomial((-2, 0, 1))))
        with pytest.raises(SystemMatrixMismatch):
            materialize_projectors(system, DenseMatrix.identity(2))

    def test_verify_system_random_block_matrix(self):
        m = (Polynomial((1, 0, 1)) * Polynomial((-3, 1)) ** 2).monic()
        M = companion(m)
        system = build_covariant_system(factor_rational(m))
        report = verify_system(system, M)
        assert report.passed, str(report)


class TestSplitCovariants:
    def test_sqrt2_split_frozen_values(self):
        # substitute Y = +-sqrt(2) into (YX+2)/4: the +sqrt(2) branch is
        # sqrt(2)/4 X + 1/2 and the branches sum to E = 1
        system = build_covariant_system(factor_rational(Polynomial((-2, 0, 1))))
        (lam_p, cov_p), (lam_m, cov_m) = split_covariants_over_extension(system, 0, 2)
        root = MultiQuad({2: 1})
        assert lam_p == root and lam_m == -root
        assert cov_p == Polynomial(
            (MultiQuad(Fraction(1, 2)), root * Fraction(1, 4))
        )
        assert cov_m == Polynomial(
            (MultiQuad(Fraction(1, 2)), -root * Fraction(1, 4))
        )
        assert cov_p + cov_m == Polynomial((MultiQuad(1),))

    def test_split_projectors_idempotent_at_matrix(self):
        m = Polynomial((-2, 0, 1))
        M = companion(m).map_entries(MultiQuad)
        system = build_covariant_system(factor_rational(m))
        for lam, cov in split_covariants_over_extension(system, 0, 2):
            P = horner_eval(cov, M)
            assert P @ P == P
            assert M @ P == P * lam  # projects onto the lam eigenspace

    def test_complex_split_conjugate_symmetry(self):
        system = build_covariant_system(factor_rational(Polynomial((1, 0, 1))))
        (lam_p, cov_p), (lam_m, cov_m) = split_covariants_over_extension(system, 0, -1)
        assert lam_m == mq_conjugate(lam_p)
        assert tuple(mq_conjugate(c) for c in cov_p.coeffs) == cov_m.coeffs

    def test_wrong_radicand_rejected(self):
        system = build_covariant_system(factor_rational(Polynomial((-2, 0, 1))))
        with pytest.raises(DoesNotSplit):
            split_covariants_over_extension(system, 0, 3)

    def test_linear_factor_rejected(self):
        system = build_covariant_system(factor_rational(Polynomial((-3, 1))))
        with pytest.raises(DoesNotSplit):
            split_covariants_over_extension(system, 0, 1)


class TestSabotage:
    def test_corrupted_trace_fails_partition_of_unity(self, monkeypatch):
        # wrong traces must be caught at build time by the sum check
        from mindec.poly import trace_coeffwise as honest

        def dishonest(p):
            out = honest(p)
            return out + Polynomial((1,))

        monkeypatch.setattr(covariant_mod, "trace_coeffwise", dishonest)
        with pytest.raises(PartitionOfUnityFailure):
            build_covariant_system(factor_rational(Polynomial((-2, 0, 1))))
