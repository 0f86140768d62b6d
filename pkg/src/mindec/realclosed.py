"""Polar-style decompositions over real multi-quadratic extensions.

For a nonsingular rational M whose minimal polynomial factors into
pieces of degree at most 2, the semisimple part S splits further as
S = Delta * Sigma with Delta totally positive semisimple and Sigma
semisimple of norm 1, giving M = Delta * Sigma * U with all three
factors commuting.  Per eigenvalue class:

* rational gamma: contributes |gamma| to Delta and sign(gamma) to
  Sigma on the class projector;
* complex pair (X^2 + pX + q, negative discriminant): the norm is
  sqrt(q), so the class adds sqrt(q) * E_i to Delta and S_i / sqrt(q)
  to Sigma, no root splitting needed;
* real pair (positive discriminant): the factor splits over Q(sqrt(d))
  and each root contributes |root|, sign(root) on its own covariant.

The exact SVD writes a nonzero rational A as sum(sigma_i * A_i) with
strictly decreasing positive sigma_i and an orthogonal system of
partial isometries A_i, provided every nonzero eigenvalue of the Gram
matrix A^T A is rational; sigma_i are the square roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from mindec.covariant import split_covariants_over_extension
from mindec.decompose import sn_decompose, system_of
from mindec.errors import (
    FactorDegreeTooHigh,
    SingularMatrix,
    SingularValuesNotRational,
    ZeroMatrix,
)
from mindec.matrix import (
    DenseMatrix,
    horner_eval,
    inverse,
    is_normal,
    is_symmetric,
    minimal_polynomial,
    rank,
)
from mindec.poly import Polynomial, poly_gcd
from mindec.report import VerificationReport
from mindec.scalar import MultiQuad, mq_sqrt_rational, square_split


def _mq(M: DenseMatrix) -> DenseMatrix:
    if not M.is_rational:
        return M
    return M.map_entries(MultiQuad)


@dataclass(frozen=True)
class DeltaSigmaU:
    delta: DenseMatrix
    sigma: DenseMatrix
    unipotent: DenseMatrix
    radicands: Tuple[int, ...]  # squarefree radicands adjoined to Q
    delta_spectrum: Tuple[MultiQuad, ...]  # distinct eigenvalues of delta
    sigma_linear: Tuple[MultiQuad, ...]  # distinct rational eigenvalues of sigma
    sigma_quadratics: Tuple[Polynomial, ...]  # norm-1 quadratic factors of sigma


def complete_mjc(M: DenseMatrix) -> DeltaSigmaU:
    """Split M into Delta * Sigma * U, all commuting.

    Preconditions: M nonsingular (SingularMatrix) and every factor of
    its minimal polynomial of degree <= 2 (FactorDegreeTooHigh).  The
    reassembly, commutation, and unipotence identities are verified
    before returning; Sigma is computed as S * Delta^-1 and checked
    against the per-class formula.
    """
    sn = sn_decompose(M)
    system = sn.system
    if system.factored.zero_index is not None:
        raise SingularMatrix("matrix is singular")
    for factor, _ in system.factored.factors:
        if factor.degree > 2:
            raise FactorDegreeTooHigh(
                f"factor of degree {factor.degree}; eigenvalues leave quadratic extensions"
            )
    n = M.n
    delta = DenseMatrix.zeros(n).map_entries(MultiQuad)
    sigma_formula = DenseMatrix.zeros(n).map_entries(MultiQuad)
    radicands = set()
    delta_eigen: List[MultiQuad] = []
    sigma_lin: List[MultiQuad] = []
    sigma_quad: List[Polynomial] = []
    for i, (factor, _) in enumerate(system.factored.factors):
        E_i = horner_eval(system.e_polys[i], M)
        if factor.degree == 1:
            gamma = -factor.coefficient(0)
            sgn = 1 if gamma > 0 else -1
            delta = delta + _mq(E_i * abs(gamma))
            sigma_formula = sigma_formula + _mq(E_i * sgn)
            _record(delta_eigen, MultiQuad(abs(gamma)))
            _record(sigma_lin, MultiQuad(sgn))
            continue
        p = factor.coefficient(1)
        q = factor.coefficient(0)
        disc = p * p - 4 * q
        if disc < 0:
            norm = mq_sqrt_rational(q)  # q = root * conjugate root > 0
            radicands.update(norm.radicands)
            S_i = horner_eval(system.s_polys[i], M)
            delta = delta + _mq(E_i) * norm
            sigma_formula = sigma_formula + _mq(S_i) * norm.inverse()
            _record(delta_eigen, norm)
            quad = Polynomial((MultiQuad(1), MultiQuad(p) * norm.inverse(), MultiQuad(1)))
            if quad not in sigma_quad:
                sigma_quad.append(quad)
        else:
            _, d = square_split(disc.numerator * disc.denominator)
            radicands.add(d)
            M_mq = _mq(M)
            for root, cov in split_covariants_over_extension(system, i, d):
                proj = horner_eval(cov, M_mq)
                sgn = root.sign()
                delta = delta + proj * (root * sgn)
                sigma_formula = sigma_formula + proj * sgn
                _record(delta_eigen, root * sgn)
                _record(sigma_lin, MultiQuad(sgn))
    S_mq = _mq(sn.semisimple)
    sigma = S_mq @ inverse(delta)
    if sigma != sigma_formula:
        raise RuntimeError("norm split disagrees with the per-class formula")
    U = DenseMatrix.identity(n) + inverse(sn.semisimple) @ sn.nilpotent
    U_mq = _mq(U)
    if delta @ sigma @ U_mq != _mq(M):
        raise RuntimeError("Delta Sigma U reassembly failed")
    for A, B in ((delta, sigma), (delta, U_mq), (sigma, U_mq)):
        if A @ B != B @ A:
            raise RuntimeError("Delta Sigma U factors do not commute")
    if not ((U - DenseMatrix.identity(n)) ** n).is_zero:
        raise RuntimeError("U is not unipotent")
    return DeltaSigmaU(
        delta=delta,
        sigma=sigma,
        unipotent=U_mq,
        radicands=tuple(sorted(radicands)),
        # class listings run from the largest absolute eigenvalue down,
        # ties broken with the positive sign first
        delta_spectrum=tuple(sorted(delta_eigen, reverse=True)),
        sigma_linear=tuple(sorted(sigma_lin, reverse=True)),
        sigma_quadratics=tuple(sigma_quad),
    )


def _record(values: List[MultiQuad], v: MultiQuad):
    if v not in values:
        values.append(v)


def verify_cmjc(M: DenseMatrix, dsu: DeltaSigmaU) -> VerificationReport:
    """Full identity report for a Delta Sigma U decomposition."""
    report = VerificationReport("complete multiplicative decomposition")
    n = M.n
    M_mq = _mq(M)
    delta, sigma, U = dsu.delta, dsu.sigma, dsu.unipotent
    report.add("reassembly", "M = Delta Sigma U", delta @ sigma @ U == M_mq)
    report.add(
        "commutation",
        "Delta, Sigma, U pairwise commute",
        all(
            A @ B == B @ A
            for A, B in ((delta, sigma), (delta, U), (sigma, U))
        ),
    )
    ident = DenseMatrix.identity(n)
    report.add("unipotence", "(U - I)^n = 0", ((U - ident) ** n).is_zero)
    expected_delta = Polynomial((MultiQuad(1),))
    for v in dsu.delta_spectrum:
        expected_delta = expected_delta * Polynomial((-v, MultiQuad(1)))
    report.add(
        "delta-spectrum",
        "minimal polynomial of Delta is the product of (X - v) over the "
        "distinct class norms v",
        minimal_polynomial(delta) == expected_delta,
    )
    report.add(
        "delta-positive",
        "every eigenvalue of Delta has sign +1",
        all(v.sign() == 1 for v in dsu.delta_spectrum),
    )
    expected_sigma = Polynomial((MultiQuad(1),))
    for v in dsu.sigma_linear:
        expected_sigma = expected_sigma * Polynomial((-v, MultiQuad(1)))
    for quad in dsu.sigma_quadratics:
        expected_sigma = expected_sigma * quad
    report.add(
        "sigma-spectrum",
        "minimal polynomial of Sigma is the product of its norm-1 factors",
        minimal_polynomial(sigma) == expected_sigma,
    )
    report.add(
        "sigma-norm-one",
        "rational eigenvalues of Sigma are +-1; quadratic factors have "
        "constant term 1",
        all(v * v == MultiQuad(1) for v in dsu.sigma_linear)
        and all(quad.coefficient(0) == MultiQuad(1) for quad in dsu.sigma_quadratics),
    )
    return report


# -- exact singular value decomposition -------------------------------


@dataclass(frozen=True)
class SVDTerm:
    sigma: MultiQuad
    matrix: DenseMatrix


@dataclass(frozen=True)
class SVDResult:
    terms: Tuple[SVDTerm, ...]
    radicands: Tuple[int, ...]

    @property
    def singular_values(self) -> Tuple[MultiQuad, ...]:
        return tuple(t.sigma for t in self.terms)

    def reassemble(self, n: int) -> DenseMatrix:
        acc = DenseMatrix.zeros(n).map_entries(MultiQuad)
        for t in self.terms:
            acc = acc + t.matrix * t.sigma
        return acc


def svd(A: DenseMatrix) -> SVDResult:
    """Exact singular value system of a nonzero square rational matrix.

    Requires every nonzero eigenvalue of A^T A to be rational
    (SingularValuesNotRational otherwise).  The A_i are A P_i / sigma_i
    for the Gram projectors P_i; the defining identities are verified
    before returning.
    """
    if A.is_zero:
        raise ZeroMatrix("the zero matrix has no singular value system")
    if not A.is_rational:
        raise ValueError("svd expects rational entries")
    gram = A.transpose() @ A
    system = system_of(gram)
    eigen: List[Tuple[Fraction, int]] = []
    for i, (factor, mult) in enumerate(system.factored.factors):
        if factor.degree > 1:
            raise SingularValuesNotRational(
                f"Gram matrix has irrational eigenvalues (factor {factor})"
            )
        if mult != 1:
            raise RuntimeError("Gram matrix of a rational matrix must be semisimple")
        value = -factor.coefficient(0)
        if value < 0:
            raise RuntimeError("Gram matrix must be positive semidefinite")
        if value > 0:
            eigen.append((value, i))
    eigen.sort(key=lambda t: -t[0])
    if not eigen:
        # A nonzero with A^T A = 0 cannot happen over the rationals
        raise RuntimeError("nonzero matrix with zero Gram spectrum")
    if rank(gram) != rank(A):
        raise RuntimeError("Gram kernel differs from the matrix kernel")
    A_mq = _mq(A)
    terms = []
    radicands = set()
    for value, i in eigen:
        sigma_i = mq_sqrt_rational(value)
        radicands.update(sigma_i.radicands)
        P_i = horner_eval(system.e_polys[i], gram)
        terms.append(SVDTerm(sigma=sigma_i, matrix=A_mq @ _mq(P_i) * sigma_i.inverse()))
    result = SVDResult(terms=tuple(terms), radicands=tuple(sorted(radicands)))
    report = verify_svd_system(A, result)
    if not report.passed:
        raise RuntimeError(f"singular value system failed verification:\n{report}")
    return result


def _as_terms(candidate) -> List[Tuple[MultiQuad, DenseMatrix]]:
    if isinstance(candidate, SVDResult):
        return [(t.sigma, t.matrix) for t in candidate.terms]
    out = []
    for sigma, matrix in candidate:
        if isinstance(sigma, (int, Fraction)):
            sigma = MultiQuad(sigma)
        out.append((sigma, _mq(matrix)))
    return out


def verify_svd_system(A: DenseMatrix, candidate) -> VerificationReport:
    """Check the singular value system axioms for a candidate."""
    report = VerificationReport("singular value system")
    terms = _as_terms(candidate)
    n = A.n
    A_mq = _mq(A)
    report.add("nonzero", "every A_i is nonzero", all(not B.is_zero for _, B in terms))
    order_ok = all(t.sign() == 1 for t, _ in terms) and all(
        (terms[i][0] - terms[i + 1][0]).sign() == 1 for i in range(len(terms) - 1)
    )
    report.add(
        "ordering", "singular values strictly decreasing and positive", order_ok
    )
    ortho_ok = True
    witness = ""
    for i, (_, Bi) in enumerate(terms):
        for j, (_, Bj) in enumerate(terms):
            if i == j:
                continue
            if not (Bi.transpose() @ Bj).is_zero or not (Bi @ Bj.transpose()).is_zero:
                ortho_ok = False
                witness = f"terms {i}, {j} not orthogonal"
    report.add(
        "orthogonality", "A_i^T A_j = 0 and A_i A_j^T = 0 for i != j", ortho_ok, witness
    )
    isometry_ok = all(B @ B.transpose() @ B == B for _, B in terms)
    report.add("partial-isometry", "A_i A_i^T A_i = A_i", isometry_ok)
    acc = DenseMatrix.zeros(n).map_entries(MultiQuad)
    for t, B in terms:
        acc = acc + B * t
    report.add("reassembly", "sum(sigma_i A_i) = A", acc == A_mq)
    report.add(
        "kernel-sanity",
        "Ker(A^T A) = Ker(A)",
        rank(A.transpose() @ A) == rank(A),
    )
    return report


def verify_svd_uniqueness(A: DenseMatrix, candidate) -> VerificationReport:
    """Axioms plus exact comparison against the canonical system.

    Any candidate satisfying the axioms must coincide with svd(A) term
    by term; the comparison is part of the report.
    """
    report = verify_svd_system(A, candidate)
    terms = _as_terms(candidate)
    canonical = svd(A)
    same = len(terms) == len(canonical.terms) and all(
        t == ct.sigma and B == ct.matrix
        for (t, B), ct in zip(terms, canonical.terms)
    )
    report.add(
        "canonical-equality",
        "candidate coincides with the recomputed system term by term",
        same,
    )
    return report


def symmetric_spectral_check(A: DenseMatrix) -> VerificationReport:
    """Spectral sanity for symmetric (or normal) rational matrices:
    squarefree minimal polynomial and symmetric class projectors.
    Other matrices get a report noting the checks were skipped."""
    report = VerificationReport("spectral projector check")
    if is_symmetric(A):
        shape = "symmetric"
    elif is_normal(A):
        shape = "normal"
    else:
        report.add(
            "normality",
            "matrix is neither symmetric nor normal; spectral checks skipped",
            True,
            "skipped",
        )
        return report
    mp = minimal_polynomial(A)
    sf = poly_gcd(mp, mp.derivative()).degree == 0
    report.add("squarefree", f"{shape} matrix has squarefree minimal polynomial", sf)
    if sf:
        system = system_of(A)
        projectors = [horner_eval(e, A) for e in system.e_polys]
        report.add(
            "projectors-symmetric",
            "every spectral projector is symmetric",
            all(is_symmetric(P) for P in projectors),
        )
    return report
