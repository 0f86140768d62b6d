"""Positive/norm-one/unipotent splits and exact singular value systems."""

from fractions import Fraction

import pytest
from oracles import frac_matmul

from mindec.errors import (
    FactorDegreeTooHigh,
    SingularMatrix,
    SingularValuesNotRational,
    ZeroMatrix,
)
from mindec.generator import random_gram_friendly, random_invertible_quadratic
from mindec.matrix import DenseMatrix, companion, minimal_polynomial, rank
from mindec.poly import Polynomial, X
from mindec.realclosed import (
    complete_mjc,
    svd,
    symmetric_spectral_check,
    verify_cmjc,
    verify_svd_system,
    verify_svd_uniqueness,
)
from mindec.scalar import MultiQuad, mq_sign


SQRT2 = MultiQuad({2: 1})


def mqm(M):
    return M.map_entries(MultiQuad)


class TestCompleteMjc:
    def test_surd_companion_frozen_values(self):
        # eigenvalues +-sqrt(2) share absolute value sqrt(2), so the
        # positive part is sqrt(2) I and the norm-one part is M/sqrt(2)
        M = companion(Polynomial((-2, 0, 1)))
        dsu = complete_mjc(M)
        assert dsu.delta == DenseMatrix.scaled_identity(2, SQRT2)
        assert dsu.sigma == mqm(M) * SQRT2.inverse()
        assert dsu.unipotent == mqm(DenseMatrix.identity(2))
        assert dsu.delta @ dsu.sigma @ dsu.unipotent == mqm(M)
        # norm-one by constant term: min poly of sigma is X^2 - 1... no:
        # sigma^2 = M^2/2 = I, so the quadratic has constant term -1
        # only for split spectra; here sigma^2 = I exactly
        assert dsu.sigma @ dsu.sigma == mqm(DenseMatrix.identity(2))

    def test_factor_parts_commute_pairwise(self):
        for k in range(12):
            M = random_invertible_quadratic(f"rc-{k}").matrix
            dsu = complete_mjc(M)
            assert dsu.delta @ dsu.sigma == dsu.sigma @ dsu.delta
            assert dsu.delta @ dsu.unipotent == dsu.unipotent @ dsu.delta
            assert dsu.sigma @ dsu.unipotent == dsu.unipotent @ dsu.sigma
            assert dsu.delta @ dsu.sigma @ dsu.unipotent == mqm(M)

    def test_delta_spectrum_positive(self):
        for k in range(12):
            M = random_invertible_quadratic(f"rcpos-{k}").matrix
            dsu = complete_mjc(M)
            assert all(mq_sign(v) == 1 for v in dsu.delta_spectrum)

    def test_norm_one_quadratics_have_unit_constant_term(self):
        for k in range(25):
            M = random_invertible_quadratic(f"rcq-{k}").matrix
            dsu = complete_mjc(M)
            for quad in dsu.sigma_quadratics:
                assert quad.degree == 2
                assert quad.coefficient(0) == MultiQuad(1)
            for v in dsu.sigma_linear:
                assert v * v == MultiQuad(1)

    def test_recomputation_is_identical(self):
        M = random_invertible_quadratic("rc-twice").matrix
        a, b = complete_mjc(M), complete_mjc(M)
        assert a.delta == b.delta
        assert a.sigma == b.sigma
        assert a.unipotent == b.unipotent
        assert a.radicands == b.radicands

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrix):
            complete_mjc(DenseMatrix([[1, 0], [0, 0]]))

    def test_cubic_factor_rejected(self):
        with pytest.raises(FactorDegreeTooHigh):
            complete_mjc(companion(Polynomial((-2, 0, 0, 1))))

    def test_verifier_accepts_and_detects(self):
        M = companion((Polynomial((1, 0, 1)) * (X - Polynomial((2,)))).monic())
        dsu = complete_mjc(M)
        report = verify_cmjc(M, dsu)
        assert report.passed, str(report)
        import dataclasses

        bad = dataclasses.replace(dsu, delta=dsu.delta * MultiQuad(2))
        assert not verify_cmjc(M, bad).passed


class TestSvd:
    def test_all_ones_against_gram_oracle(self):
        # reference: gram = [[2,2],[2,2]] has eigenvalues 4 and 0; the
        # rank-one projector is all-ones/2 and A P / sigma = all-ones/2
        A = DenseMatrix([[1, 1], [1, 1]])
        gram_rows = frac_matmul([[1, 1], [1, 1]], [[1, 1], [1, 1]])
        assert gram_rows == [[2, 2], [2, 2]]
        result = svd(A)
        assert [t.sigma for t in result.terms] == [MultiQuad(2)]
        half = Fraction(1, 2)
        assert result.terms[0].matrix == mqm(DenseMatrix([[half, half], [half, half]]))
        report = verify_svd_system(A, result)
        assert report.passed, str(report)

    def test_rank_deficient_and_nilpotent_inputs(self):
        for A in (
            DenseMatrix([[0, 1], [0, 0]]),
            DenseMatrix([[1, 1, 0], [0, 0, 0], [1, 1, 0]]),
        ):
            result = svd(A)
            assert result.reassemble(A.n) == mqm(A)
            assert len(result.terms) >= 1

    def test_random_gram_friendly_family(self):
        for k in range(20):
            A = random_gram_friendly(f"rsvd-{k}").matrix
            result = svd(A)
            n = A.n
            assert result.reassemble(n) == mqm(A)
            values = result.singular_values
            for i in range(len(values) - 1):
                assert mq_sign(values[i] - values[i + 1]) == 1
            gram = A.transpose() @ A
            assert sum(rank(t.matrix) for t in result.terms) == rank(gram)

    def test_zero_matrix_rejected(self):
        with pytest.raises(ZeroMatrix):
            svd(DenseMatrix.zeros(2))

    def test_irrational_singular_values_rejected(self):
        # gram of [[1,1],[0,1]] has minimal polynomial X^2 - 3X + 1,
        # irreducible over Q, so the squared singular values are not
        # rational and the contract refuses
        with pytest.raises(SingularValuesNotRational):
            svd(DenseMatrix([[1, 1], [0, 1]]))

    def test_transpose_terms_relate(self):
        A = DenseMatrix([[3, 0], [0, -2]])
        result = svd(A)
        for term in result.terms:
            B = term.matrix
            # each term is a partial isometry scaled decision: B B^T B = B
            assert B @ B.transpose() @ B == B


class TestSvdUniqueness:
    def test_canonical_passes(self):
        A = DenseMatrix([[3, 0], [0, -2]])
        assert verify_svd_uniqueness(A, svd(A)).passed

    def test_swap_fails_ordering(self):
        A = DenseMatrix([[3, 0], [0, -2]])
        result = svd(A)
        swapped = [
            (result.terms[1].sigma, result.terms[1].matrix),
            (result.terms[0].sigma, result.terms[0].matrix),
        ]
        report = verify_svd_uniqueness(A, swapped)
        assert not report.passed
        assert "ordering" in {c.name for c in report.failed_checks()}

    def test_rescaled_term_fails_partial_isometry(self):
        # scaling the matrix factor up and the value down preserves the
        # product but breaks B B^T B = B specifically
        A = DenseMatrix([[1, 1], [1, 1]])
        base = svd(A)
        tampered = [
            (
                base.terms[0].sigma * MultiQuad(Fraction(1, 2)),
                base.terms[0].matrix * MultiQuad(2),
            )
        ]
        report = verify_svd_uniqueness(A, tampered)
        assert not report.passed
        fired = {c.name for c in report.failed_checks()}
        assert "partial-isometry" in fired, fired
        assert "reassembly" not in fired

    def test_dropped_term_fails_reassembly(self):
        A = DenseMatrix([[3, 0], [0, -2]])
        base = svd(A)
        report = verify_svd_uniqueness(A, [(base.terms[0].sigma, base.terms[0].matrix)])
        assert not report.passed
        assert "reassembly" in {c.name for c in report.failed_checks()}


class TestSymmetricSpectral:
    def test_symmetric_matrix_passes(self):
        A = DenseMatrix([[2, 1], [1, 2]])
        report = symmetric_spectral_check(A)
        assert report.passed
        assert minimal_polynomial(A).degree == 2

    def test_rotation_is_normal(self):
        report = symmetric_spectral_check(DenseMatrix([[0, -1], [1, 0]]))
        assert report.passed
        assert len(report.checks) == 2

    def test_non_normal_skipped(self):
        report = symmetric_spectral_check(DenseMatrix([[1, 1], [0, 1]]))
        assert report.passed
        assert report.checks[0].witness == "skipped"
