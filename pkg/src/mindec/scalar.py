"""Exact scalars: rationals, multi-quadratic reals, number field elements.

Three coefficient domains are used throughout the library:

* plain rationals, which are :class:`fractions.Fraction` (the stdlib
  type already guarantees the normalized p/q invariants we rely on);

* :class:`MultiQuad`, elements of Q adjoined finitely many square
  roots, stored as coordinates on the basis of square roots of
  squarefree integers.  The basis label 1 is the rational part;
  negative labels are allowed (the values are then complex), but sign
  queries demand a totally real element;

* :class:`NumberFieldElement`, residues modulo one fixed irreducible
  monic polynomial, used for computing with a generic root of an
  irreducible factor without naming any particular root.

Multiplication of basis square roots follows the principal-branch
convention sqrt(a)*sqrt(b) = sqrt(-1)^[a<0]+[b<0] * sqrt(|ab|), e.g.
sqrt(-2)*sqrt(-3) = -sqrt(6).
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Dict, Mapping, Sequence, Tuple, Union

from mindec import _kernel
from mindec.errors import (
    MixedModuli,
    NonPositiveRadicand,
    NotInvertible,
    NotTotallyReal,
    PolyParseError,
)

RationalLike = Union[int, Fraction]


def rational_from_string(text: str) -> Fraction:
    """Parse "p" or "p/q".  Stricter than the Fraction constructor: no
    decimals, exponents, or embedded whitespace."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise PolyParseError(f"not a rational: {text!r}")
    return Fraction(s)


def rational_to_string(q: RationalLike) -> str:
    q = Fraction(q)
    return str(q)  # "p/q", or "p" when the denominator is 1


def square_split(n: int) -> Tuple[int, int]:
    """Write n = s^2 * d with d squarefree (d carries the sign of n)."""
    if n == 0:
        raise ValueError("square_split(0)")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s = 1
    d = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e & 1:
                d *= p
        p += 1 if p == 2 else 2
    return s, sign * d * n


def _label_mul(a: int, b: int) -> Tuple[int, int]:
    # sqrt(a)*sqrt(b) = coef * sqrt(label) for squarefree labels a, b
    if a == 1:
        return 1, b
    if b == 1:
        return 1, a
    aa, ab = abs(a), abs(b)
    g = gcd(aa, ab)
    lbl = (aa // g) * (ab // g)
    if a < 0 and b < 0:
        return -g, lbl
    if a < 0 or b < 0:
        return g, -lbl
    return g, lbl


@total_ordering
class MultiQuad:
    """Element of a multi-quadratic extension of Q.

    Coordinates map squarefree integer labels to rational coefficients;
    the element is sum(coeff * sqrt(label)).  Labels are normalized at
    construction (a coordinate on 12 becomes 2*sqrt(3)) and zero
    coordinates are dropped, so equality is dict equality.
    """

    __slots__ = ("_coords",)

    def __init__(self, value: Union[RationalLike, Mapping[int, RationalLike]] = 0):
        coords: Dict[int, Fraction] = {}
        if isinstance(value, MultiQuad):
            coords = dict(value._coords)
        elif isinstance(value, (int, Fraction)):
            if value:
                coords[1] = Fraction(value)
        else:
            for label, coeff in value.items():
                if not isinstance(label, int) or label == 0:
                    raise ValueError(f"bad radicand label: {label!r}")
                c = Fraction(coeff)
                if not c:
                    continue
                s, d = square_split(label)
                coords[d] = coords.get(d, Fraction(0)) + c * s
                if not coords[d]:
                    del coords[d]
        self._coords = coords

    @classmethod
    def _raw(cls, coords: Dict[int, Fraction]) -> "MultiQuad":
        out = cls.__new__(cls)
        out._coords = coords
        return out

    @property
    def coordinates(self) -> Dict[int, Fraction]:
        return dict(self._coords)

    @property
    def radicands(self) -> Tuple[int, ...]:
        """Squarefree labels with nonzero coordinate, excluding 1."""
        return tuple(sorted(k for k in self._coords if k != 1))

    @property
    def rational_part(self) -> Fraction:
        return self._coords.get(1, Fraction(0))

    @property
    def is_rational(self) -> bool:
        return all(k == 1 for k in self._coords)

    @property
    def is_totally_real(self) -> bool:
        return all(k > 0 for k in self._coords)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.rational_part

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _mq_coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coords)
        for k, c in other._coords.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MultiQuad._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _mq_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _mq_coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return MultiQuad._raw({k: -c for k, c in self._coords.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiQuad._raw({})
            q = Fraction(other)
            return MultiQuad._raw({k: c * q for k, c in self._coords.items()})
        if not isinstance(other, MultiQuad):
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for la, ca in self._coords.items():
            for lb, cb in other._coords.items():
                coef, lbl = _label_mul(la, lb)
                s = out.get(lbl, Fraction(0)) + ca * cb * coef
                if s:
                    out[lbl] = s
                else:
                    out.pop(lbl, None)
        return MultiQuad._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise NotInvertible("division by zero")
            q = Fraction(other)
            return MultiQuad._raw({k: c / q for k, c in self._coords.items()})
        if not isinstance(other, MultiQuad):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _mq_coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = MultiQuad(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self._coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiQuad(other)
        if not isinstance(other, MultiQuad):
            return NotImplemented
        return self._coords == other._coords

    def __lt__(self, other):
        other = _mq_coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.rational_part)
        return hash(tuple(sorted(self._coords.items())))

    # -- field structure ----------------------------------------------

    def inverse(self) -> "MultiQuad":
        """Multiplicative inverse, by solving the linear system of the
        multiplication operator on the subfield spanned by the labels."""
        if not self._coords:
            raise NotInvertible("zero has no inverse")
        if self.is_rational:
            return MultiQuad(1 / self.rational_part)
        labels = set(self._coords)
        labels.add(1)
        while True:  # close the label set under products
            new = set()
            for a in labels:
                for b in labels:
                    lbl = _label_mul(a, b)[1]
                    if lbl not in labels:
                        new.add(lbl)
            if not new:
                break
            labels |= new
        basis = sorted(labels)
        index = {lbl: i for i, lbl in enumerate(basis)}
        n = len(basis)
        # augmented system [T | e_1]: column j of T is self * sqrt(basis[j])
        nums = [0] * (n * (n + 1))
        dens = [1] * (n * (n + 1))
        for j, bj in enumerate(basis):
            for l, c in self._coords.items():
                coef, lbl = _label_mul(l, bj)
                i = index[lbl]
                v = c * coef
                k = i * (n + 1) + j
                cur = Fraction(nums[k], dens[k]) + v
                nums[k], dens[k] = cur.numerator, cur.denominator
        one_row = index[1] * (n + 1) + n
        nums[one_row] = 1
        rn, rd, pivots = _kernel.rref(nums, dens, n, n + 1)
        if pivots != list(range(n)):
            raise NotInvertible(f"{self} is not invertible")
        out: Dict[int, Fraction] = {}
        for i, lbl in enumerate(basis):
            c = Fraction(rn[i * (n + 1) + n], rd[i * (n + 1) + n])
            if c:
                out[lbl] = c
        return MultiQuad._raw(out)

    def conjugate(self) -> "MultiQuad":
        """Complex conjugate: negates coordinates on negative labels."""
        return MultiQuad._raw(
            {k: (-c if k < 0 else c) for k, c in self._coords.items()}
        )

    def sign(self) -> int:
        """Exact sign (-1, 0, +1) of a totally real element.

        Zero is decided exactly; otherwise dyadic enclosures of the
        basis square roots are refined (halving the width each round)
        until the value interval excludes zero, which terminates
        because distinct squarefree square roots are linearly
        independent over Q.
        """
        if not self._coords:
            return 0
        for k in self._coords:
            if k < 0:
                raise NotTotallyReal(f"{self} involves sqrt({k})")
        if self.is_rational:
            r = self.rational_part
            return -1 if r < 0 else 1
        bits = 8
        while True:
            lo = Fraction(0)
            hi = Fraction(0)
            scale = 1 << bits
            for k, c in self._coords.items():
                if k == 1:
                    lo += c
                    hi += c
                    continue
                root = isqrt(k * scale * scale)
                rlo = Fraction(root, scale)
                rhi = Fraction(root + 1, scale)
                if c > 0:
                    lo += c * rlo
                    hi += c * rhi
                else:
                    lo += c * rhi
                    hi += c * rlo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __abs__(self) -> "MultiQuad":
        return -self if self.sign() < 0 else self

    def __repr__(self):
        return f"MultiQuad({self._coords!r})"

    def __str__(self):
        if not self._coords:
            return "0"
        parts = []
        for k in sorted(self._coords):
            c = self._coords[k]
            parts.append(str(c) if k == 1 else f"{c}*sqrt({k})")
        return " + ".join(parts)


def _mq_coerce(value):
    if isinstance(value, MultiQuad):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiQuad(value)
    return None


def mq_invert(x: MultiQuad) -> MultiQuad:
    return x.inverse()


def mq_sign(x: MultiQuad) -> int:
    return x.sign()


def mq_conjugate(x: MultiQuad) -> MultiQuad:
    return x.conjugate()


def mq_sqrt_rational(q: RationalLike) -> MultiQuad:
    """Exact positive square root of a positive rational.

    q = (s/b)^2 * d with d squarefree, so sqrt(q) = (s/b) * sqrt(d); the
    result is rational exactly when q is a square.
    """
    q = Fraction(q)
    if q <= 0:
        raise NonPositiveRadicand(f"sqrt of {q}")
    s, d = square_split(q.numerator * q.denominator)
    return MultiQuad({d: Fraction(s, q.denominator)})


def mq_norm(x: MultiQuad) -> MultiQuad:
    """Field norm down the complex embedding: the positive square root
    of x * conjugate(x), defined for x with (x * conj x) rational."""
    prod = x * x.conjugate()
    if not prod.is_rational:
        raise NotTotallyReal(f"norm of {x} is not the root of a rational")
    value = prod.as_fraction()
    if value == 0:
        return MultiQuad(0)
    return mq_sqrt_rational(value)


# -- number fields ----------------------------------------------------


class NumberField:
    """Q[Y]/(m) for one monic irreducible m over Q.

    Irreducibility is the caller's responsibility (factors of a
    factored minimal polynomial are irreducible by construction); the
    arithmetic here only requires m to be monic of degree >= 1.
    Power sums of the roots of m are computed once per field by
    Newton's identities and cached for trace computations.
    """

    __slots__ = ("modulus", "_mn", "_md", "_psums")

    def __init__(self, modulus: Sequence[RationalLike]):
        coeffs = tuple(Fraction(c) for c in modulus)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = coeffs
        self._mn = [c.numerator for c in coeffs]
        self._md = [c.denominator for c in coeffs]
        self._psums = None

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def power_sums(self) -> Tuple[Fraction, ...]:
        """p_0 .. p_(d-1) where p_k is the sum of k-th powers of the
        roots of the modulus (Newton's identities)."""
        if self._psums is None:
            d = self.degree
            e = [Fraction(0)] * (d + 1)  # elementary symmetric functions
            for i in range(1, d + 1):
                e[i] = (-1) ** i * self.modulus[d - i]
            p = [Fraction(d)]
            for k in range(1, d):
                acc = (-1) ** (k - 1) * k * e[k]
                for i in range(1, k):
                    acc += (-1) ** (i - 1) * e[i] * p[k - i]
                p.append(acc)
            self._psums = tuple(p)
        return self._psums

    def _reduce(self, nums, dens):
        if len(nums) >= len(self._mn):
            _, _, nums, dens = _kernel.poly_divmod(nums, dens, self._mn, self._md)
        return nums, dens

    def element(self, coeffs: Sequence[RationalLike]) -> "NumberFieldElement":
        nums = []
        dens = []
        for c in coeffs:
            f = Fraction(c)
            nums.append(f.numerator)
            dens.append(f.denominator)
        while nums and nums[-1] == 0:
            nums.pop()
            dens.pop()
        nums, dens = self._reduce(nums, dens)
        return NumberFieldElement(self, tuple(Fraction(n, d) for n, d in zip(nums, dens)))

    def embed(self, q: RationalLike) -> "NumberFieldElement":
        q = Fraction(q)
        return NumberFieldElement(self, (q,) if q else ())

    def gen(self) -> "NumberFieldElement":
        """The generic root Y of the modulus."""
        return self.element((0, 1))

    def zero(self) -> "NumberFieldElement":
        return NumberFieldElement(self, ())

    def one(self) -> "NumberFieldElement":
        return NumberFieldElement(self, (Fraction(1),))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({[str(c) for c in self.modulus]})"


class NumberFieldElement:
    """Residue in Q[Y]/(m), stored as a trimmed coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def residue(self):
        from mindec.poly import Polynomial

        return Polynomial(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _check(self, other) -> "NumberFieldElement":
        if isinstance(other, (int, Fraction)):
            return self.field.embed(other)
        if isinstance(other, NumberFieldElement):
            if other.field.modulus != self.field.modulus:
                raise MixedModuli("elements of different number fields")
            return other
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return NumberFieldElement(self.field, tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return NumberFieldElement(self.field, ())
        an = [c.numerator for c in self.coeffs]
        ad = [c.denominator for c in self.coeffs]
        bn = [c.numerator for c in other.coeffs]
        bd = [c.denominator for c in other.coeffs]
        cn, cd = _kernel.poly_mul(an, ad, bn, bd)
        cn, cd = self.field._reduce(cn, cd)
        return NumberFieldElement(
            self.field, tuple(Fraction(n, d) for n, d in zip(cn, cd))
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.embed(other)
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        if other.field.modulus != self.field.modulus:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational:
            return hash(self.as_fraction())
        return hash((self.field.modulus, self.coeffs))

    def inverse(self) -> "NumberFieldElement":
        """Extended Euclid against the modulus: s*x + t*m = 1."""
        if not self.coeffs:
            raise NotInvertible("zero has no inverse")
        from mindec.poly import Polynomial, ext_gcd

        g, s, _ = ext_gcd(Polynomial(self.coeffs), Polynomial(self.field.modulus))
        if g.degree != 0:
            # cannot happen over an irreducible modulus
            raise NotInvertible(f"{self} shares a factor with the modulus")
        return self.field.element(s.coeffs)

    def trace(self) -> Fraction:
        """Trace to Q: sum of the element over all embeddings, via the
        cached power sums of the modulus."""
        sums = self.field.power_sums
        acc = Fraction(0)
        for i, c in enumerate(self.coeffs):
            acc += c * sums[i]
        return acc

    def __repr__(self):
        return f"<{self} mod {[str(c) for c in self.field.modulus]}>"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            parts.append(str(c) if i == 0 else (f"{c}*Y" if i == 1 else f"{c}*Y^{i}"))
        return " + ".join(parts)


def nf_invert(x: NumberFieldElement) -> NumberFieldElement:
    return x.inverse()


def nf_trace(x: NumberFieldElement) -> Fraction:
    return x.trace()


def one_like(x):
    """Multiplicative identity of the field x belongs to."""
    if isinstance(x, (int, Fraction)):
        return Fraction(1)
    if isinstance(x, MultiQuad):
        return MultiQuad(1)
    if isinstance(x, NumberFieldElement):
        return x.field.one()
    raise TypeError(f"no known field for {type(x).__name__}")


def zero_like(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(0)
    return x * 0
