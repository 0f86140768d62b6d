"""Polynomial functions of a matrix through its covariant system.

The value of f at M is assembled per irreducible factor from the
generic covariants: with Phi_k the k-th Hasse derivative of f and C_i
the generic covariant of factor m_i (multiplicity mu_i),

    f(M) = sum_i Tr( sum_{k < mu_i} Phi_k(Y) (X - Y)^k C_i(X) ) at M.

The k = 0 slice is the semisimple part of f(M) and simultaneously the
image of the semisimple part of M under f; the k >= 1 slices are the
nilpotent part.  Dropping the k >= 1 slices (legitimate exactly when
the minimal polynomial is squarefree) is the classical interpolation
formula on eigenvalues.

Factors whose generic roots map to conjugate values under f merge in
the image; the equivalence classes are computed from the minimal
polynomial of the multiplication-by-f(Y) operator on each R_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from mindec.covariant import CovariantSystem
from mindec.decompose import FineComponent, FineDecomposition, sn_decompose, system_of
from mindec.errors import NotSemisimple, SingularMatrix
from mindec.factor import FactoredMinPoly
from mindec.matrix import DenseMatrix, horner_eval, minimal_polynomial
from mindec.poly import Polynomial, X, hasse_derivative, trace_coeffwise
from mindec.report import VerificationReport


@dataclass(frozen=True)
class EquivalenceClass:
    """Factors of the source minimal polynomial whose roots become
    conjugates of each other in the image."""

    image: Polynomial  # minimal polynomial of f(Y), irreducible over Q
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class MatFunResult:
    value: DenseMatrix
    semisimple_part: DenseMatrix
    nilpotent_part: DenseMatrix
    sem_poly: Polynomial
    nil_poly: Polynomial
    classes: Tuple[EquivalenceClass, ...]


def _factor_slices(system: CovariantSystem, f: Polynomial):
    """Per-factor rational witness polynomials (semisimple slice,
    nilpotent slice) of f through the covariants."""
    sems = []
    nils = []
    for gen in system.generics:
        y = gen.ring.gen()
        prod = f(y) * gen.covariant
        sems.append(trace_coeffwise(prod) if not prod.is_zero else Polynomial())
        if gen.multiplicity > 1:
            x_minus_y = Polynomial((-y, gen.ring.one()))
            acc = Polynomial()
            step = x_minus_y
            for k in range(1, gen.multiplicity):
                phi = hasse_derivative(f, k)
                acc = acc + phi(y) * step * gen.covariant
                step = step * x_minus_y
            nils.append(trace_coeffwise(acc) if not acc.is_zero else Polynomial())
        else:
            nils.append(Polynomial())
    return sems, nils


def schwerdtfeger_eval(f: Polynomial, M: DenseMatrix) -> MatFunResult:
    """Evaluate a rational polynomial at M covariant by covariant.

    Returns the value together with its split into semisimple and
    nilpotent parts and the factor equivalence classes of the image.
    The value equals plain Horner evaluation; the parts equal the
    additive decomposition of the value.
    """
    system = system_of(M)
    m = system.min_poly
    sems, nils = _factor_slices(system, f)
    sem_poly = Polynomial()
    for p in sems:
        sem_poly = sem_poly + p
    nil_poly = Polynomial()
    for p in nils:
        nil_poly = nil_poly + p
    sem_poly = sem_poly % m
    nil_poly = nil_poly % m
    sem = horner_eval(sem_poly, M)
    nil = horner_eval(nil_poly, M)
    return MatFunResult(
        value=sem + nil,
        semisimple_part=sem,
        nilpotent_part=nil,
        sem_poly=sem_poly,
        nil_poly=nil_poly,
        classes=tuple(f_equivalence_classes(f, system.factored)),
    )


def sylvester_eval(f: Polynomial, M: DenseMatrix) -> DenseMatrix:
    """Eigenvalue interpolation for a matrix with squarefree minimal
    polynomial: the k = 0 covariant slice alone.

    Raises NotSemisimple when nilpotent corrections would be needed.
    """
    system = system_of(M)
    if not system.factored.is_squarefree:
        raise NotSemisimple("matrix has a repeated factor; interpolation insufficient")
    sems, _ = _factor_slices(system, f)
    total = Polynomial()
    for p in sems:
        total = total + p
    return horner_eval(total % system.min_poly, M)


def _image_min_poly(f: Polynomial, factor: Polynomial) -> Polynomial:
    """Minimal polynomial over Q of f(Y) in Q[Y]/(factor): the minimal
    polynomial of the multiplication-by-f(Y) operator."""
    from mindec.scalar import NumberField

    ring = NumberField(factor.coeffs)
    d = ring.degree
    fy = f(ring.gen())
    cols = []
    for j in range(d):
        yj = ring.element([0] * j + [1])
        prod = fy * yj
        coeffs = list(prod.coeffs) + [Fraction(0)] * (d - len(prod.coeffs))
        cols.append(coeffs)
    op = DenseMatrix([[cols[j][i] for j in range(d)] for i in range(d)])
    return minimal_polynomial(op)


def f_equivalence_classes(
    f: Polynomial, factored: FactoredMinPoly
) -> List[EquivalenceClass]:
    """Group factors by the minimal polynomial of the image of their
    generic root; classes are ordered like factorizations (degree,
    then coefficients, the X class last)."""
    images = {}
    for i, (factor, _) in enumerate(factored.factors):
        q = _image_min_poly(f, factor)
        images.setdefault(q.coeffs, []).append((i, q))
    classes = [
        EquivalenceClass(image=entries[0][1], indices=tuple(i for i, _ in entries))
        for entries in images.values()
    ]
    classes.sort(key=lambda c: (c.image == X, c.image.degree, c.image.coeffs))
    return classes


def fine_of_image(f: Polynomial, M: DenseMatrix) -> FineDecomposition:
    """Fine decomposition of f(M) assembled classwise from the source
    covariants, without decomposing f(M) itself.

    Component multiplicities are the nilpotency orders of the class
    nilpotents, which match the factor multiplicities in the minimal
    polynomial of f(M).
    """
    system = system_of(M)
    m = system.min_poly
    sems, nils = _factor_slices(system, f)
    classes = f_equivalence_classes(f, system.factored)
    components = []
    zero_index = None
    for pos, cls in enumerate(classes):
        s_poly = Polynomial()
        n_poly = Polynomial()
        for i in cls.indices:
            s_poly = s_poly + sems[i]
            n_poly = n_poly + nils[i]
        S_c = horner_eval(s_poly % m, M)
        N_c = horner_eval(n_poly % m, M)
        mult = 1
        power = N_c
        while not power.is_zero:
            mult += 1
            if mult > M.n:
                raise RuntimeError("class nilpotent is not nilpotent")
            power = power @ N_c
        if cls.image == X:
            zero_index = pos
        components.append(
            FineComponent(
                factor=cls.image,
                multiplicity=mult,
                semisimple=S_c,
                nilpotent=N_c,
            )
        )
    return FineDecomposition(components=tuple(components), zero_index=zero_index)


def verify_matfun(f: Polynomial, M: DenseMatrix, result: MatFunResult) -> VerificationReport:
    """Cross-check a covariant evaluation against plain Horner evaluation
    and the additive decomposition of the image."""
    report = VerificationReport("matrix function")
    direct = horner_eval(f, M)
    report.add("value", "covariant evaluation equals Horner evaluation", result.value == direct)
    report.add(
        "parts-sum", "semisimple + nilpotent parts = value",
        result.semisimple_part + result.nilpotent_part == result.value,
    )
    sn_image = sn_decompose(direct)
    report.add(
        "parts-exact",
        "the parts are the additive decomposition of the value",
        result.semisimple_part == sn_image.semisimple
        and result.nilpotent_part == sn_image.nilpotent,
    )
    sn_source = sn_decompose(M)
    report.add(
        "functoriality",
        "semisimple part of f(M) equals f(semisimple part of M)",
        result.semisimple_part == horner_eval(f, sn_source.semisimple),
    )
    return report


def covariant_power(M: DenseMatrix, h: int) -> DenseMatrix:
    """Integer powers of a semisimple matrix through its covariants:
    sum of Tr(Y^h C_i) at M.  Negative h needs a nonsingular M."""
    system = system_of(M)
    if not system.factored.is_squarefree:
        raise NotSemisimple("powers through covariants need a semisimple matrix")
    if h < 0 and system.factored.zero_index is not None:
        raise SingularMatrix("negative power of a singular matrix")
    total = Polynomial()
    for gen in system.generics:
        y = gen.ring.gen()
        total = total + trace_coeffwise(y**h * gen.covariant)
    return horner_eval(total % system.min_poly, M)
