"""Dense square matrices over an exact field.

Entries are Fractions, MultiQuad scalars, or number field elements;
integer input entries are normalized to Fraction.  Everything is exact:
elimination pivots on the first nonzero entry of each column, so all
results are deterministic.

Purely rational matrices are routed through the packed kernels in
:mod:`mindec._kernel`; other entry fields use the generic code paths.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from mindec import _kernel
from mindec.errors import FieldMismatch, SingularMatrix
from mindec.poly import Polynomial, poly_lcm
from mindec.scalar import MultiQuad, NumberFieldElement, one_like


def _norm_entry(e):
    return Fraction(e) if isinstance(e, int) else e


class DenseMatrix:
    __slots__ = ("n", "rows", "_rat")

    def __init__(self, rows: Sequence[Sequence]):
        rs = tuple(tuple(_norm_entry(e) for e in row) for row in rows)
        n = len(rs)
        if n == 0 or any(len(r) != n for r in rs):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.rows = rs
        self._rat = all(type(e) is Fraction for r in rs for e in r)

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, n: int) -> "DenseMatrix":
        return cls([[Fraction(0)] * n for _ in range(n)])

    @classmethod
    def scaled_identity(cls, n: int, c) -> "DenseMatrix":
        return cls([[c if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @property
    def is_rational(self) -> bool:
        return self._rat

    @property
    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def map_entries(self, fn: Callable) -> "DenseMatrix":
        return DenseMatrix([[fn(e) for e in row] for row in self.rows])

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(list(zip(*self.rows)))

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def __add__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return DenseMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return DenseMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return self.map_entries(lambda e: -e)

    def __mul__(self, scalar):
        if isinstance(scalar, DenseMatrix):
            return NotImplemented
        return self.map_entries(lambda e: e * scalar)

    def __rmul__(self, scalar):
        if isinstance(scalar, DenseMatrix):
            return NotImplemented
        return self.map_entries(lambda e: scalar * e)

    def __matmul__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("order mismatch")
        n = self.n
        if self._rat and other._rat:
            an, ad = _pack_rows(self.rows)
            bn, bd = _pack_rows(other.rows)
            cn, cd = _kernel.mat_mul(an, ad, bn, bd, n, n, n)
            return _unpack_matrix(cn, cd, n)
        brows = other.rows
        out = []
        for ra in self.rows:
            row = []
            for j in range(n):
                acc = ra[0] * brows[0][j]
                for t in range(1, n):
                    a = ra[t]
                    if a:
                        acc = acc + a * brows[t][j]
                row.append(acc)
            out.append(row)
        return DenseMatrix(out)

    def __pow__(self, k: int) -> "DenseMatrix":
        if k < 0:
            return inverse(self) ** (-k)
        result = DenseMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            if k > 1:
                base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        return all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __repr__(self):
        return f"DenseMatrix({[[str(e) for e in row] for row in self.rows]})"


def _pack_rows(rows):
    nums = []
    dens = []
    for row in rows:
        for e in row:
            nums.append(e.numerator)
            dens.append(e.denominator)
    return nums, dens


def _unpack_matrix(nums, dens, n) -> DenseMatrix:
    it = iter(zip(nums, dens))
    return DenseMatrix([[Fraction(*next(it)) for _ in range(n)] for _ in range(n)])


def _generic_rref(rows: List[list]) -> Tuple[List[list], List[int]]:
    # Gauss-Jordan over any field, first-nonzero pivoting.
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = -1
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        pval = prow[col]
        if pval != one_like(pval):
            inv = one_like(pval) / pval
            rows[rank] = prow = [e * inv for e in prow]
        for r in range(nrows):
            if r == rank:
                continue
            f = rows[r][col]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rows, pivots


def rref_rows(rows: Sequence[Sequence]) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form of a rectangular array of field
    elements; returns (rows, pivot_columns)."""
    rows = [[_norm_entry(e) for e in r] for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if all(type(e) is Fraction for r in rows for e in r):
        nums = [e.numerator for r in rows for e in r]
        dens = [e.denominator for r in rows for e in r]
        rn, rd, pivots = _kernel.rref(nums, dens, nrows, ncols)
        it = iter(zip(rn, rd))
        return [[Fraction(*next(it)) for _ in range(ncols)] for _ in range(nrows)], pivots
    return _generic_rref(rows)


def rank(M: DenseMatrix) -> int:
    return len(rref_rows(M.rows)[1])


def inverse(M: DenseMatrix) -> DenseMatrix:
    """Exact inverse via elimination on [M | I]."""
    n = M.n
    one = one_like(M.rows[0][0])
    aug = [
        list(row) + [one if i == j else one * 0 for j in range(n)]
        for i, row in enumerate(M.rows)
    ]
    red, pivots = rref_rows(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix has no inverse")
    return DenseMatrix([row[n:] for row in red[:n]])


def kernel_basis(M: DenseMatrix) -> List[Tuple]:
    """Basis of the right null space, one vector per free column of the
    reduced echelon form, in column order."""
    n = M.n
    red, pivots = rref_rows(M.rows)
    pivot_set = set(pivots)
    zero = M.rows[0][0] * 0
    one = one_like(M.rows[0][0])
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [zero] * n
        vec[free] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][free]
        basis.append(tuple(vec))
    return basis


def mat_vec(M: DenseMatrix, vec: Sequence) -> list:
    out = []
    for row in M.rows:
        acc = row[0] * vec[0]
        for a, v in zip(row[1:], vec[1:]):
            if a:
                acc = acc + a * v
        out.append(acc)
    return out


def _entry_kind(M: DenseMatrix):
    if M._rat:
        return "rational", None
    field = None
    has_mq = False
    for row in M.rows:
        for e in row:
            if isinstance(e, MultiQuad):
                has_mq = True
            elif isinstance(e, NumberFieldElement):
                field = e.field
    if has_mq and field is not None:
        raise FieldMismatch("matrix mixes MultiQuad and number field entries")
    return ("multiquad", None) if has_mq else ("numberfield", field)


def horner_eval(f: Polynomial, M: DenseMatrix) -> DenseMatrix:
    """Evaluate a polynomial at a matrix by Horner's rule.

    The coefficient field must embed into the entry field of M:
    rationals embed everywhere, MultiQuad coefficients need MultiQuad
    entries, number field coefficients need entries over the same
    modulus.
    """
    kind, field = _entry_kind(M)
    for c in f.coeffs:
        if isinstance(c, Fraction):
            continue
        if isinstance(c, MultiQuad):
            if kind != "multiquad":
                raise FieldMismatch("MultiQuad coefficients at a non-MultiQuad matrix")
        elif isinstance(c, NumberFieldElement):
            if kind != "numberfield" or (
                field is not None and c.field.modulus != field.modulus
            ):
                raise FieldMismatch("number field coefficients do not match the matrix")
        else:
            raise FieldMismatch(f"unsupported coefficient {type(c).__name__}")
    n = M.n
    if f.is_zero:
        return DenseMatrix.zeros(n)
    acc = DenseMatrix.scaled_identity(n, f.coeffs[-1])
    for c in reversed(f.coeffs[:-1]):
        acc = acc @ M
        if c:
            acc = acc + DenseMatrix.scaled_identity(n, c)
    return acc


def minimal_polynomial(M: DenseMatrix) -> Polynomial:
    """Monic minimal polynomial, by per-vector Krylov annihilators.

    For each standard basis vector the least linear dependence among
    v, Mv, M^2 v, ... is found by ordered elimination that carries the
    combination coefficients; the lcm of the per-vector annihilators is
    the minimal polynomial.  Stops early once the accumulated lcm
    annihilates M.
    """
    n = M.n
    one = one_like(M.rows[0][0])
    zero = one * 0
    mp = Polynomial((one,))
    for j in range(n):
        if mp.degree >= 1 and horner_eval(mp, M).is_zero:
            break
        vec = [zero] * n
        vec[j] = one
        reduced = []  # (pivot_col, vector, tracker) with pivot scaled to 1
        tracker = [one]
        cur = vec
        for _ in range(n + 1):
            w = list(cur)
            t = list(tracker)
            for pc, pv, pt in reduced:
                fac = w[pc]
                if fac:
                    for i in range(n):
                        if pv[i]:
                            w[i] = w[i] - fac * pv[i]
                    for i in range(len(pt)):
                        if pt[i]:
                            while len(t) <= i:
                                t.append(zero)
                            t[i] = t[i] - fac * pt[i]
            if not any(w):
                ann = Polynomial(t)
                mp = poly_lcm(mp, ann)
                break
            pc = next(i for i in range(n) if w[i])
            inv = one / w[pc]
            w = [e * inv for e in w]
            t = [e * inv for e in t]
            reduced.append((pc, w, t))
            cur = mat_vec(M, cur)
            tracker = [zero] + tracker
        if mp.degree == n:
            break
    return mp


def companion(p: Polynomial) -> DenseMatrix:
    """Companion matrix of a monic rational polynomial of degree >= 1."""
    if p.degree < 1 or p.lc != 1 or not p.is_rational:
        raise ValueError("companion needs a monic rational polynomial of degree >= 1")
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -p.coefficient(i)
    return DenseMatrix(rows)


def is_symmetric(M: DenseMatrix) -> bool:
    return all(
        M.rows[i][j] == M.rows[j][i] for i in range(M.n) for j in range(i + 1, M.n)
    )


def is_normal(M: DenseMatrix) -> bool:
    t = M.transpose()
    return M @ t == t @ M


def commute(A: DenseMatrix, B: DenseMatrix) -> bool:
    return A @ B == B @ A
