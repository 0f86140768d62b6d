"""Additive and multiplicative decompositions and their verifiers."""

from dataclasses import replace
from fractions import Fraction

import pytest

from mindec.decompose import (
    FineDecomposition,
    fine_decompose,
    multiplicative_jc,
    sn_decompose,
    sn_newton_oracle,
    unbreakable_components,
    verify_fine,
    verify_mjc,
    verify_sn,
    verify_unbreakable,
)
from mindec.errors import SingularMatrix
from mindec.generator import block_diag, random_matrix
from mindec.matrix import (
    DenseMatrix,
    commute,
    companion,
    horner_eval,
    minimal_polynomial,
)
from mindec.poly import Polynomial, X, poly_gcd


class TestAdditiveSplit:
    def test_repeated_quadratic_companion_against_newton(self):
        # 4x4 block with minimal polynomial (X^2-2)^2: the two routes
        # (covariant traces vs Newton refinement) must agree bit for bit
        M = companion((Polynomial((-2, 0, 1)) ** 2).monic())
        sn = sn_decompose(M)
        assert minimal_polynomial(sn.semisimple) == Polynomial((-2, 0, 1))
        assert not sn.nilpotent.is_zero
        assert (sn.nilpotent @ sn.nilpotent).is_zero
        assert sn.semisimple == sn_newton_oracle(M)
        assert sn.semisimple + sn.nilpotent == M
        assert commute(sn.semisimple, sn.nilpotent)

    def test_newton_agreement_on_random_matrices(self):
        for k in range(25):
            M = random_matrix(f"newton-cross-{k}").matrix
            sn = sn_decompose(M)
            assert sn.semisimple == sn_newton_oracle(M)

    def test_witness_polynomials_evaluate_to_parts(self):
        M = companion(((X - Polynomial((1,))) ** 2 * (X + Polynomial((1,)))).monic())
        sn = sn_decompose(M)
        assert horner_eval(sn.s_poly, M) == sn.semisimple
        assert horner_eval(sn.n_poly, M) == sn.nilpotent

    def test_verify_sn_detects_shifted_semisimple(self):
        M = DenseMatrix([[1, 1], [0, 1]])
        sn = sn_decompose(M)
        bad = replace(
            sn,
            semisimple=sn.semisimple + DenseMatrix.identity(2),
            nilpotent=sn.nilpotent - DenseMatrix.identity(2),
        )
        report = verify_sn(M, bad)
        assert not report.passed


class TestFineSplit:
    def test_mixed_minimal_polynomial_payload_count(self):
        # (X^2-2)(X-1)^2: nonzero payloads are the quadratic semisimple
        # part, the eigenvalue-1 projector part, and one nilpotent
        m = (Polynomial((-2, 0, 1)) * (X - Polynomial((1,))) ** 2).monic()
        M = companion(m)
        fd = fine_decompose(M)
        assert verify_fine(M, fd).passed
        payloads = [c.semisimple for c in fd.components] + [
            c.nilpotent for c in fd.components
        ]
        assert sum(1 for p in payloads if not p.is_zero) == 3
        total = fd.total_semisimple() + fd.total_nilpotent()
        assert total == M

    def test_components_recombine_to_sn(self):
        for k in range(15):
            M = random_matrix(f"fine-sn-{k}").matrix
            fd = fine_decompose(M)
            sn = sn_decompose(M)
            assert fd.total_semisimple() == sn.semisimple
            assert fd.total_nilpotent() == sn.nilpotent

    def test_component_minimal_polynomials(self):
        m = (Polynomial((-2, 0, 1)) * (X - Polynomial((1,))) ** 2).monic()
        M = companion(m)
        for comp in fine_decompose(M).components:
            if comp.semisimple.is_zero:
                continue
            expected = (X * comp.factor).monic()
            assert minimal_polynomial(comp.semisimple) == expected

    def test_swapped_nilpotents_fire_annihilation_or_kernel_check(self):
        # corrupting a decomposition by exchanging nilpotent payloads
        # between distinct factors must be caught by the product or the
        # kernel-containment condition
        m = ((X - Polynomial((1,))) ** 2 * (X + Polynomial((1,))) ** 2).monic()
        M = companion(m)
        fd = fine_decompose(M)
        comps = list(fd.components)
        assert comps[0].nilpotent != comps[1].nilpotent
        swapped = FineDecomposition(
            (
                replace(comps[0], nilpotent=comps[1].nilpotent),
                replace(comps[1], nilpotent=comps[0].nilpotent),
            ),
            fd.zero_index,
        )
        report = verify_fine(M, swapped)
        assert not report.passed
        fired = {c.name for c in report.failed_checks()}
        assert fired & {"cross-annihilation", "kernel-containment"}, fired


class TestUnbreakable:
    def test_sum_skips_kernel_and_verifies(self):
        M = DenseMatrix([[1, 0, 0], [0, 2, 0], [0, 0, 0]])
        comps = unbreakable_components(M)
        report = verify_unbreakable(M, comps)
        assert report.passed, str(report)

    def test_verifier_rejects_merged_components(self):
        M = DenseMatrix([[1, 0], [0, -1]])
        report = verify_unbreakable(M, [M])
        assert not report.passed

    def test_random_components_pairwise_annihilate(self):
        for k in range(10):
            S = sn_decompose(random_matrix(f"unbreak-{k}").matrix).semisimple
            if S.is_zero:  # nilpotent draw: no components by contract
                continue
            comps = unbreakable_components(S)
            for i, A in enumerate(comps):
                for j, B in enumerate(comps):
                    if i != j:
                        assert (A @ B).is_zero


class TestMultiplicativeSplit:
    def test_companion_reassembly(self):
        m = ((X - Polynomial((1,))) ** 2 * (X - Polynomial((2,)))).monic()
        M = companion(m)
        jc = multiplicative_jc(M)
        assert jc.semisimple @ jc.unipotent == M
        assert jc.unipotent @ jc.semisimple == M
        U_minus_I = jc.unipotent - DenseMatrix.identity(3)
        assert horner_eval(X**3, U_minus_I).is_zero
        assert poly_gcd(
            minimal_polynomial(jc.semisimple),
            minimal_polynomial(jc.semisimple).derivative(),
        ).degree == 0
        assert verify_mjc(M, jc).passed

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrix):
            multiplicative_jc(DenseMatrix([[0, 1], [0, 0]]))

    def test_verifier_rejects_swapped_order(self):
        M = DenseMatrix([[2, 2], [0, 2]])
        jc = multiplicative_jc(M)
        bad = replace(jc, unipotent=jc.unipotent + DenseMatrix.identity(2))
        assert not verify_mjc(M, bad).passed


class TestBlockStructure:
    def test_block_diagonal_coprime_blocks_decompose_blockwise(self):
        C = companion(Polynomial((-2, 0, 1)))
        J = DenseMatrix([[3, 1], [0, 3]])
        M = block_diag([C, J])
        fd = fine_decompose(M)
        assert len(fd.components) == 2
        zero2 = DenseMatrix.zeros(2)
        by_factor = {c.factor: c for c in fd.components}
        quad = by_factor[Polynomial((-2, 0, 1))]
        assert quad.semisimple == block_diag([C, zero2])
        lin = by_factor[X - Polynomial((3,))]
        assert lin.semisimple == block_diag([zero2, DenseMatrix.scaled_identity(2, Fraction(3))])
        assert lin.nilpotent == block_diag([zero2, DenseMatrix([[0, 1], [0, 0]])])
