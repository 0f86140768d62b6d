"""Factorization of rational polynomials into monic irreducibles.

The route is classical Zassenhaus: Yun's squarefree decomposition over
Q, reduction of each squarefree part to a primitive integer polynomial
(made monic by the substitution X -> X/lc scaled back at the end),
factorization modulo a suitable odd prime, quadratic Hensel lifting to
a Mignotte-style coefficient bound, and recombination of modular
factor subsets by trial division.

Inputs are desk scale: the total degree is capped (default 16,
override with MINDEC_DEGREE_CAP) and recombination tries subsets of at
most 8 modular factors, which is exhaustive for 16 or fewer.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import List, Optional, Tuple

from mindec.errors import DegreeCapExceeded, ZeroPolynomial
from mindec.poly import Polynomial, X, squarefree_part

DEFAULT_DEGREE_CAP = 16
RECOMBINATION_WIDTH = 8


def _degree_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("MINDEC_DEGREE_CAP")
    return int(env) if env else DEFAULT_DEGREE_CAP


# -- arithmetic in GF(p)[X]: dense int lists, index = degree ----------


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gf_trim(out)


def _gf_sub(a, b, p):
    out = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _gf_trim(out)


def _gf_monic(a, p):
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _gf_divmod(a, b, p):
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], _gf_trim(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = (a[k + db] * inv) % p
        if c:
            q[k] = c
            for i, bi in enumerate(b):
                if bi:
                    a[k + i] = (a[k + i] - c * bi) % p
    return _gf_trim(q), _gf_trim(a[:db])


def _gf_gcd(a, b, p):
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p) if a else []

def _gf_ext_gcd(a, b, p):
    # returns (g, s, t) with s*a + t*b = g, g monic
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    inv = pow(r0[-1], p - 2, p)
    scale = lambda v: [(c * inv) % p for c in v]
    return _gf_monic(r0, p), scale(s0), scale(t0)


def _gf_pow_mod(base, e, mod, p):
    result = [1]
    base = _gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
    return result


def _gf_deriv(a, p):
    return _gf_trim([(i * c) % p for i, c in enumerate(a)][1:])


def _distinct_degree(f, p):
    # f monic squarefree; returns [(product_of_factors, degree)]
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_pow_mod(h, p, f, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = _gf_divmod(f, g, p)[0]
            h = _gf_divmod(h, f, p)[1] if len(f) > 1 else []
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    # Cantor-Zassenhaus splitting for odd p; f a product of degree-d
    # irreducibles
    n = len(f) - 1
    if n == d:
        return [f]
    exponent = (p**d - 1) // 2
    while True:
        a = _gf_trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = _gf_gcd(a, f, p)
        if 1 < len(g) < len(f):
            left, right = g, _gf_divmod(f, g, p)[0]
        else:
            b = _gf_pow_mod(a, exponent, f, p)
            g = _gf_gcd(_gf_sub(b, [1], p), f, p)
            if not 1 < len(g) < len(f):
                continue
            left, right = g, _gf_divmod(f, g, p)[0]
        return _equal_degree(left, d, p, rng) + _equal_degree(right, d, p, rng)


def _factor_mod_p(f, p):
    """Full factorization of a monic squarefree f in GF(p)[X]."""
    rng = random.Random(f"cz:{p}:{f}")
    out = []
    for product, d in _distinct_degree(f, p):
        out.extend(_equal_degree(product, d, p, rng))
    out.sort(key=lambda a: (len(a), a))
    return out


# -- lifting in Z/m[X] ------------------------------------------------


def _zp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    return _gf_trim(out)


def _zp_sub(a, b, m):
    out = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % m
    return _gf_trim(out)


def _zp_divmod_monic(a, b, m):
    # division by a monic polynomial needs no inverses
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], _gf_trim(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db] % m
        if c:
            q[k] = c
            for i, bi in enumerate(b):
                if bi:
                    a[k + i] = (a[k + i] - c * bi) % m
    return _gf_trim(q), _gf_trim(a[:db])


def _zp_add(a, b, m):
    la, lb = len(a), len(b)
    if la < lb:
        a = list(a) + [0] * (lb - la)
        b = list(b)
    else:
        a = list(a)
        b = list(b) + [0] * (la - lb)
    return _gf_trim([(x + y) % m for x, y in zip(a, b)])


def _hensel_pair(f, g, h, s, t, p, target):
    """Lift f = g*h from mod p to mod target = p^(2^k).

    f, g, h monic; s*g + t*h = 1 mod p.  Quadratic steps; the Bezout
    pair is lifted alongside so every step starts from a valid pair.
    """
    m = p
    while m < target:
        m2 = m * m
        e = _zp_sub([c % m2 for c in f], _zp_mul(g, h, m2), m2)
        q, r = _zp_divmod_monic(_zp_mul(t, e, m2), g, m2)
        g1 = _zp_add(g, r, m2)
        h1 = _zp_add(h, _zp_add(_zp_mul(s, e, m2), _zp_mul(q, h, m2), m2), m2)
        if m2 >= target:
            return g1, h1
        b = _zp_sub(_zp_add(_zp_mul(s, g1, m2), _zp_mul(t, h1, m2), m2), [1], m2)
        c, d = _zp_divmod_monic(_zp_mul(t, b, m2), g1, m2)
        t = _zp_sub(t, d, m2)
        s = _zp_sub(_zp_sub(s, _zp_mul(s, b, m2), m2), _zp_mul(c, h1, m2), m2)
        g, h = g1, h1
        m = m2
    return [c % target for c in g], [c % target for c in h]


def _hensel_tree(f, modular, p, target):
    """Lift a list of coprime monic mod-p factors of monic f to mod
    target, recursing on balanced halves."""
    if len(modular) == 1:
        return [[c % target for c in f]]
    half = len(modular) // 2
    left, right = modular[:half], modular[half:]
    g0 = [1]
    for fac in left:
        g0 = _gf_mul(g0, fac, p)
    h0 = [1]
    for fac in right:
        h0 = _gf_mul(h0, fac, p)
    _, s, t = _gf_ext_gcd(g0, h0, p)
    g, h = _hensel_pair(f, g0, h0, s, t, p, target)
    return _hensel_tree(g, left, p, target) + _hensel_tree(h, right, p, target)


def _centered(c, m):
    c %= m
    return c - m if c > m // 2 else c


# -- the integer-level driver -----------------------------------------


def _int_poly(p: Polynomial) -> List[int]:
    """Scale a rational polynomial to a primitive integer coefficient
    list with positive leading coefficient."""
    denom = 1
    for c in p.coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in p.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _factor_squarefree(w: List[int]) -> List[Polynomial]:
    """Monic rational irreducible factors of a primitive squarefree
    integer polynomial with positive leading coefficient."""
    n = len(w) - 1
    if n == 1:
        return [Polynomial([Fraction(w[0], w[1]), Fraction(1)])]
    lead = w[-1]
    # monicize: F(X) = lead^(n-1) * w(X/lead) is monic with integer
    # coefficients and the same splitting behaviour
    F = [w[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    p = 3
    while True:
        fp = [c % p for c in F]
        if len(_gf_trim(list(fp))) == n + 1:
            d = _gf_deriv(fp, p)
            if d and len(_gf_gcd(list(fp), d, p)) == 1:
                break
        p = _next_prime(p)
    modular = _factor_mod_p([c % p for c in F], p)
    if len(modular) == 1:
        return [_descale(F, lead)]
    norm2 = isqrt(sum(c * c for c in F)) + 1
    bound = 2 * (norm2 << n) + 1
    target = p
    while target < bound:
        target *= target
    lifted = _hensel_tree(F, modular, p, target)
    found: List[List[int]] = []
    remaining = list(F)
    pool = lifted
    width = 1
    while 2 * width <= len(pool) and width <= RECOMBINATION_WIDTH:
        hit = False
        for subset in combinations(range(len(pool)), width):
            prod = [1]
            for i in subset:
                prod = _zp_mul(prod, pool[i], target)
            cand = [_centered(c, target) for c in prod]
            q, ok = _exact_div(remaining, cand)
            if ok:
                found.append(cand)
                remaining = q
                pool = [fac for i, fac in enumerate(pool) if i not in subset]
                hit = True
                break
        if not hit:
            width += 1
    if len(remaining) > 1:
        found.append(remaining)
    return sorted(
        (_descale(h, lead) for h in found),
        key=lambda q: (q.degree, q.coeffs),
    )


def _exact_div(a: List[int], b: List[int]):
    """Divide integer polynomials; b monic.  Returns (quotient, bool)."""
    if len(b) > len(a):
        return a, False
    rem = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db]
        if c:
            q[k] = c
            for i, bi in enumerate(b):
                if bi:
                    rem[k + i] -= c * bi
    if any(rem[:db]):
        return a, False
    return q, True


def _descale(H: List[int], lead: int) -> Polynomial:
    # undo the monicization substitution: factor of F gives
    # H(lead * X) / lead^deg as a monic factor of the original
    d = len(H) - 1
    return Polynomial([Fraction(H[i] * lead**i, lead**d) for i in range(d + 1)])


def _next_prime(p: int) -> int:
    q = p + 2
    while True:
        if all(q % r for r in range(3, isqrt(q) + 1, 2)):
            return q
        q += 2


# -- public surface ---------------------------------------------------


@dataclass(frozen=True)
class FactoredMinPoly:
    """Monic polynomial split into irreducible factors with
    multiplicities, the factor X (zero eigenvalue class) ordered last."""

    factors: Tuple[Tuple[Polynomial, int], ...]

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def degree(self) -> int:
        return sum(f.degree * mult for f, mult in self.factors)

    @property
    def zero_index(self) -> Optional[int]:
        for i, (f, _) in enumerate(self.factors):
            if f == X:
                return i
        return None

    @property
    def is_squarefree(self) -> bool:
        return all(mult == 1 for _, mult in self.factors)

    def product(self) -> Polynomial:
        out = Polynomial((Fraction(1),))
        for f, mult in self.factors:
            out = out * f**mult
        return out

    def radical(self) -> Polynomial:
        out = Polynomial((Fraction(1),))
        for f, _ in self.factors:
            out = out * f
        return out


def _canonical_order(pairs):
    return tuple(
        sorted(pairs, key=lambda fm: (fm[0] == X, fm[0].degree, fm[0].coeffs))
    )


def factor_rational(p: Polynomial, cap: Optional[int] = None) -> FactoredMinPoly:
    """Factor a rational polynomial into monic irreducibles.

    The content and leading coefficient are discarded: the result
    represents the monic polynomial p / lc(p).  Raises
    DegreeCapExceeded above the configured cap and ZeroPolynomial for
    the zero input.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if not p.is_rational:
        raise ValueError("factor_rational expects rational coefficients")
    cap = _degree_cap(cap)
    if p.degree > cap:
        raise DegreeCapExceeded(f"degree {p.degree} exceeds cap {cap}")
    if p.degree == 0:
        return FactoredMinPoly(())
    _, profile = squarefree_part(p)
    pairs: List[Tuple[Polynomial, int]] = []
    for part, mult in profile:
        if part.coefficient(0) == 0:
            part = part // X
            pairs.append((X, mult))
        if part.degree >= 1:
            for irr in _factor_squarefree(_int_poly(part)):
                pairs.append((irr, mult))
    return FactoredMinPoly(_canonical_order(pairs))
