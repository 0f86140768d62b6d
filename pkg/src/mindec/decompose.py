"""Semisimple + nilpotent decompositions of rational matrices.

The additive decomposition M = S + N is assembled from the covariant
system of the minimal polynomial: S is the image of the rational
witness polynomial sum(S_i) at M, so S and N are themselves rational
polynomials in M.  A Newton iteration on the squarefree part of the
minimal polynomial provides an independent oracle for S; the two must
agree exactly.

The fine decomposition refines S + N into one (S_i, N_i) pair per
irreducible factor, with the zero eigenvalue class (factor X) carrying
S_i = 0 and ordered last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mindec.covariant import CovariantSystem, build_covariant_system
from mindec.errors import (
    FieldMismatch,
    NotSemisimple,
    SingularMatrix,
    ZeroMatrix,
)
from mindec.factor import factor_rational
from mindec.matrix import (
    DenseMatrix,
    commute,
    horner_eval,
    inverse,
    kernel_basis,
    mat_vec,
    minimal_polynomial,
    rank,
)
from mindec.poly import Polynomial, X, poly_gcd, squarefree_part
from mindec.report import VerificationReport


@dataclass(frozen=True)
class SNDecomposition:
    matrix: DenseMatrix
    semisimple: DenseMatrix
    nilpotent: DenseMatrix
    s_poly: Polynomial  # S = s_poly(M), degree < deg of the minimal polynomial
    n_poly: Polynomial  # N = n_poly(M) = M - S
    system: CovariantSystem


@dataclass(frozen=True)
class FineComponent:
    factor: Polynomial
    multiplicity: int
    semisimple: DenseMatrix
    nilpotent: DenseMatrix


@dataclass(frozen=True)
class FineDecomposition:
    components: Tuple[FineComponent, ...]
    zero_index: Optional[int]

    def total_semisimple(self) -> DenseMatrix:
        acc = self.components[0].semisimple
        for c in self.components[1:]:
            acc = acc + c.semisimple
        return acc

    def total_nilpotent(self) -> DenseMatrix:
        acc = self.components[0].nilpotent
        for c in self.components[1:]:
            acc = acc + c.nilpotent
        return acc


@dataclass(frozen=True)
class MultiplicativeJC:
    semisimple: DenseMatrix
    unipotent: DenseMatrix


def _require_rational(M: DenseMatrix):
    if not M.is_rational:
        raise FieldMismatch("expected a matrix with rational entries")


def system_of(M: DenseMatrix) -> CovariantSystem:
    """Covariant system of the minimal polynomial of M."""
    _require_rational(M)
    return build_covariant_system(factor_rational(minimal_polynomial(M)))


def sn_decompose(M: DenseMatrix) -> SNDecomposition:
    """Additive decomposition M = S + N.

    Total on square rational matrices; the zero matrix yields S = N = 0
    through the single factor X of its minimal polynomial.
    """
    system = system_of(M)
    s_poly = Polynomial()
    for s in system.s_polys:
        s_poly = s_poly + s
    s_poly = s_poly % system.min_poly if s_poly.degree >= system.min_poly.degree else s_poly
    S = horner_eval(s_poly, M)
    N = M - S
    return SNDecomposition(
        matrix=M,
        semisimple=S,
        nilpotent=N,
        s_poly=s_poly,
        n_poly=X - s_poly,
        system=system,
    )


def sn_newton_oracle(M: DenseMatrix, max_rounds: int = 40) -> DenseMatrix:
    """Independent construction of the semisimple part.

    Newton iteration Z <- Z - g(Z) * g'(Z)^-1 on the squarefree part g
    of the minimal polynomial, starting at M.  Quadratic convergence in
    the nilpotency order; the limit is the unique semisimple S with
    M - S nilpotent, commuting with M.  Shares no code with the
    covariant construction beyond basic polynomial arithmetic.
    """
    _require_rational(M)
    g, _ = squarefree_part(minimal_polynomial(M))
    dg = g.derivative()
    Z = M
    for _ in range(max_rounds):
        value = horner_eval(g, Z)
        if value.is_zero:
            return Z
        Z = Z - value @ inverse(horner_eval(dg, Z))
    raise RuntimeError("Newton iteration did not stabilize")


def verify_sn(M: DenseMatrix, sn: SNDecomposition) -> VerificationReport:
    """Identity report for an additive decomposition, including exact
    agreement with the independent Newton construction."""
    report = VerificationReport("additive decomposition")
    report.add("reassembly", "S + N = M", sn.semisimple + sn.nilpotent == M)
    report.add("commutation", "SN = NS", commute(sn.semisimple, sn.nilpotent))
    mp = minimal_polynomial(sn.semisimple)
    report.add(
        "semisimple",
        "minimal polynomial of S is squarefree",
        poly_gcd(mp, mp.derivative()).degree == 0,
    )
    report.add("nilpotent", "N^n = 0", (sn.nilpotent ** M.n).is_zero)
    report.add(
        "newton-agreement",
        "S equals the Newton iteration limit bit for bit",
        sn.semisimple == sn_newton_oracle(M),
    )
    return report


def fine_decompose(M: DenseMatrix) -> FineDecomposition:
    """One (S_i, N_i) pair per irreducible factor of the minimal
    polynomial, the zero eigenvalue class last with S_i = 0."""
    system = system_of(M)
    return _fine_from_system(system, M)


def _fine_from_system(system: CovariantSystem, M: DenseMatrix) -> FineDecomposition:
    components = []
    for i, (factor, mult) in enumerate(system.factored.factors):
        S_i = horner_eval(system.s_polys[i], M)
        N_i = horner_eval(system.n_polys[i], M)
        components.append(
            FineComponent(
                factor=factor, multiplicity=mult, semisimple=S_i, nilpotent=N_i
            )
        )
    return FineDecomposition(
        components=tuple(components), zero_index=system.factored.zero_index
    )


def verify_fine(M: DenseMatrix, fd: FineDecomposition) -> VerificationReport:
    """Check the defining conditions of a fine decomposition of M.

    The checks are chosen so that any swap or corruption of the
    nilpotent parts between components is detected:

    * the components sum back to M;
    * cross products between different components vanish;
    * each nonzero-class nilpotent kills the kernel of M^e, where e is
      the multiplicity of the factor X (e = 0 for nonsingular M);
    * the kernel of the summed semisimple part is exactly Ker(M^e);
    * with two or more factors, each nonzero S_i has minimal
      polynomial X * m_i.
    """
    report = VerificationReport("fine decomposition")
    n = M.n
    comps = fd.components
    total_s = fd.total_semisimple()
    total_n = fd.total_nilpotent()
    report.add(
        "component-sums",
        "sum(S_i) + sum(N_i) = M",
        total_s + total_n == M,
    )
    cross_ok = True
    witness = ""
    for h, ch in enumerate(comps):
        for l, cl in enumerate(comps):
            if h == l:
                continue
            if not (ch.nilpotent @ cl.semisimple).is_zero:
                cross_ok = False
                witness = f"N_{h} * S_{l} != 0"
            if h < l and not (ch.semisimple @ cl.semisimple).is_zero:
                cross_ok = False
                witness = f"S_{h} * S_{l} != 0"
            if h < l and not (ch.nilpotent @ cl.nilpotent).is_zero:
                cross_ok = False
                witness = f"N_{h} * N_{l} != 0"
    report.add(
        "cross-annihilation",
        "N_h S_l = 0, S_h S_l = 0, N_h N_l = 0 for h != l",
        cross_ok,
        witness,
    )
    e = comps[fd.zero_index].multiplicity if fd.zero_index is not None else 0
    Me = M**e
    ker = kernel_basis(Me) if e else []
    containment_ok = True
    witness = ""
    for h, ch in enumerate(comps):
        if h == fd.zero_index:
            continue
        for v in ker:
            if any(mat_vec(ch.nilpotent, v)):
                containment_ok = False
                witness = f"Ker(M^{e}) not inside Ker(N_{h})"
    report.add(
        "kernel-containment",
        "Ker(M^e) contained in Ker(N_h) for every nonzero class h",
        containment_ok,
        witness,
    )
    ker_s_dim = n - rank(total_s)
    ker_m_dim = n - rank(Me)
    equality_ok = ker_s_dim == ker_m_dim and all(
        not any(mat_vec(total_s, v)) for v in ker
    )
    report.add(
        "kernel-equality",
        "Ker(sum S_i) = Ker(M^e)",
        equality_ok,
    )
    if len(comps) >= 2:
        minpoly_ok = True
        witness = ""
        for i, c in enumerate(comps):
            if c.semisimple.is_zero:
                continue
            expected = (X * c.factor).monic()
            if minimal_polynomial(c.semisimple) != expected:
                minpoly_ok = False
                witness = f"minimal polynomial of S_{i} is not X * m_{i}"
        report.add(
            "component-min-poly",
            "minimal polynomial of each nonzero S_i is X * m_i (r >= 2)",
            minpoly_ok,
            witness,
        )
    return report


def unbreakable_components(S: DenseMatrix) -> List[DenseMatrix]:
    """Decompose a nonzero semisimple matrix into its unbreakable
    semisimple summands, one per nonzero eigenvalue class.

    These are the S_i of the fine decomposition; none of them can be
    written as a sum of two nonzero commuting semisimple matrices with
    the same one-factor structure.  Raises NotSemisimple when the
    minimal polynomial is not squarefree and ZeroMatrix for S = 0.
    """
    _require_rational(S)
    if S.is_zero:
        raise ZeroMatrix("the zero matrix has no unbreakable components")
    factored = factor_rational(minimal_polynomial(S))
    if not factored.is_squarefree:
        raise NotSemisimple("matrix is not semisimple")
    system = build_covariant_system(factored)
    out = []
    for i in range(system.r):
        if i == factored.zero_index:
            continue
        out.append(horner_eval(system.s_polys[i], S))
    return out


def multiplicative_jc(M: DenseMatrix) -> MultiplicativeJC:
    """Multiplicative decomposition M = S * U = U * S.

    S is the semisimple part, U = I + S^-1 N is unipotent; M must be
    nonsingular (SingularMatrix otherwise).
    """
    sn = sn_decompose(M)
    if sn.system.factored.zero_index is not None:
        raise SingularMatrix("matrix is singular; no multiplicative decomposition")
    S = sn.semisimple
    U = DenseMatrix.identity(M.n) + inverse(S) @ sn.nilpotent
    if S @ U != M or U @ S != M:
        raise RuntimeError("multiplicative reassembly failed")
    return MultiplicativeJC(semisimple=S, unipotent=U)


def verify_unbreakable(M: DenseMatrix, components: Sequence[DenseMatrix]) -> VerificationReport:
    """Check an unbreakable-component list against its semisimple source."""
    report = VerificationReport("unbreakable components")
    acc = DenseMatrix.zeros(M.n)
    for c in components:
        acc = acc + c
    report.add("reassembly", "components sum to M", acc == M)
    report.add(
        "pairwise-products",
        "U_h U_l = 0 for h != l",
        all(
            (components[h] @ components[l]).is_zero
            for h in range(len(components))
            for l in range(len(components))
            if h != l
        ),
    )
    single_ok = True
    witness = ""
    for i, c in enumerate(components):
        factored = factor_rational(minimal_polynomial(c))
        nonzero = [f for f, _ in factored.factors if f != X]
        if len(nonzero) != 1:
            single_ok = False
            witness = f"component {i} mixes {len(nonzero)} eigenvalue classes"
    report.add(
        "single-class",
        "each component's nonzero spectrum is one conjugacy class",
        single_ok,
        witness,
    )
    return report


def verify_mjc(M: DenseMatrix, jc: MultiplicativeJC) -> VerificationReport:
    """Identity report for a multiplicative decomposition M = S U."""
    report = VerificationReport("multiplicative decomposition")
    report.add(
        "reassembly", "S U = U S = M", jc.semisimple @ jc.unipotent == M
        and jc.unipotent @ jc.semisimple == M
    )
    mp = minimal_polynomial(jc.semisimple)
    report.add(
        "semisimple",
        "minimal polynomial of S is squarefree",
        poly_gcd(mp, mp.derivative()).degree == 0,
    )
    report.add(
        "unipotent",
        "(U - I)^n = 0",
        ((jc.unipotent - DenseMatrix.identity(M.n)) ** M.n).is_zero,
    )
    return report


def verify_frobenius_system(
    matrices: Sequence[DenseMatrix], coeffs: Sequence
) -> VerificationReport:
    """Check a claimed Frobenius covariant system with its coefficients.

    Conditions: every matrix nonzero, A_i A_j = delta_ij A_i, the
    coefficients pairwise distinct and nonzero, and the rank criterion:
    the ranks of the A_i sum to strictly less than n exactly when 0 is
    an eigenvalue of sum(coeff_i * A_i).
    """
    report = VerificationReport("Frobenius system")
    if len(matrices) != len(coeffs) or not matrices:
        report.add("shape", "one coefficient per matrix, at least one", False)
        return report
    n = matrices[0].n
    report.add(
        "nonzero-matrices",
        "A_i != 0 for all i",
        all(not A.is_zero for A in matrices),
    )
    prod_ok = True
    witness = ""
    for i, A in enumerate(matrices):
        for j, B in enumerate(matrices):
            expect = A if i == j else DenseMatrix.zeros(n)
            if A @ B != expect:
                prod_ok = False
                witness = f"A_{i} A_{j} wrong"
    report.add("products", "A_i A_j = delta_ij A_i", prod_ok, witness)
    distinct = all(bool(c) for c in coeffs) and all(
        coeffs[i] != coeffs[j]
        for i in range(len(coeffs))
        for j in range(i + 1, len(coeffs))
    )
    report.add("coefficients", "coefficients pairwise distinct and nonzero", distinct)
    assembled = DenseMatrix.zeros(n)
    for c, A in zip(coeffs, matrices):
        assembled = assembled + A * c
    rank_sum = sum(rank(A) for A in matrices)
    singular = rank(assembled) < n
    report.add(
        "rank-criterion",
        "sum(rank A_i) < n iff 0 is an eigenvalue of sum(coeff_i A_i)",
        (rank_sum < n) == singular,
    )
    return report
