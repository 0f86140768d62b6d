# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Exact rational kernels, compiled backend.

Same contract as ``_pykernel``: rationals are (numerator, denominator)
int pairs in lowest terms with positive denominators, carried in
parallel flat lists.  Numerators and denominators stay arbitrary
precision Python ints; compilation removes the interpreter loop
overhead, which is where the time goes at small matrix orders.
"""

from math import gcd

BACKEND = "c"


cdef inline tuple _add(an, ad, bn, bd):
    g = gcd(ad, bd)
    if g == 1:
        return an * bd + bn * ad, ad * bd
    t = an * (bd // g) + bn * (ad // g)
    g2 = gcd(t, g)
    return t // g2, (ad // g) * (bd // g2)


cdef inline tuple _mul(an, ad, bn, bd):
    if an == 0 or bn == 0:
        return 0, 1
    g1 = gcd(an, bd)
    g2 = gcd(bn, ad)
    return (an // g1) * (bn // g2), (ad // g2) * (bd // g1)


def poly_mul(list an, list ad, list bn, list bd):
    """Product of two dense rational polynomials."""
    cdef Py_ssize_t la = len(an), lb = len(bn)
    cdef Py_ssize_t i, j, k, out
    if la == 0 or lb == 0:
        return [], []
    out = la + lb - 1
    cdef list cn = [0] * out
    cdef list cd = [1] * out
    for i in range(la):
        ani = an[i]
        if ani == 0:
            continue
        adi = ad[i]
        for j in range(lb):
            bnj = bn[j]
            if bnj == 0:
                continue
            tn, td = _mul(ani, adi, bnj, bd[j])
            k = i + j
            cn[k], cd[k] = _add(cn[k], cd[k], tn, td)
    while cn and cn[len(cn) - 1] == 0:
        cn.pop()
        cd.pop()
    return cn, cd


def poly_divmod(list an, list ad, list bn, list bd):
    """Quotient and remainder of dense rational polynomials."""
    cdef Py_ssize_t la = len(an), lb = len(bn)
    cdef Py_ssize_t i, k, qlen, top
    if la < lb:
        return [], [], list(an), list(ad)
    cdef list rn = list(an)
    cdef list rd = list(ad)
    qlen = la - lb + 1
    cdef list qn = [0] * qlen
    cdef list qd = [1] * qlen
    ln = bn[lb - 1]
    ld = bd[lb - 1]
    for k in range(qlen - 1, -1, -1):
        top = k + lb - 1
        if rn[top] == 0:
            continue
        cn, cd = _mul(rn[top], rd[top], ld, ln)
        if cd < 0:
            cn, cd = -cn, -cd
        qn[k] = cn
        qd[k] = cd
        for i in range(lb):
            if bn[i] == 0:
                continue
            tn, td = _mul(cn, cd, bn[i], bd[i])
            rn[k + i], rd[k + i] = _add(rn[k + i], rd[k + i], -tn, td)
    while qn and qn[len(qn) - 1] == 0:
        qn.pop()
        qd.pop()
    del rn[lb - 1:]
    del rd[lb - 1:]
    while rn and rn[len(rn) - 1] == 0:
        rn.pop()
        rd.pop()
    return qn, qd, rn, rd


def mat_mul(list an, list ad, list bn, list bd,
            Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """Product of an n*k and a k*m rational matrix, both row-major."""
    cdef list cn = [0] * (n * m)
    cdef list cd = [1] * (n * m)
    cdef Py_ssize_t i, j, t, arow, brow, crow
    for i in range(n):
        arow = i * k
        crow = i * m
        for t in range(k):
            atn = an[arow + t]
            if atn == 0:
                continue
            atd = ad[arow + t]
            brow = t * m
            for j in range(m):
                btn = bn[brow + j]
                if btn == 0:
                    continue
                pn, pd = _mul(atn, atd, btn, bd[brow + j])
                cn[crow + j], cd[crow + j] = _add(cn[crow + j], cd[crow + j], pn, pd)
    return cn, cd


def rref(list an, list ad, Py_ssize_t rows, Py_ssize_t cols):
    """Reduced row echelon form; pivots on the first nonzero entry."""
    cdef list rn = list(an)
    cdef list rd = list(ad)
    cdef list pivots = []
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, j, pivot, base, off, a, b
    for col in range(cols):
        pivot = -1
        for r in range(rank, rows):
            if rn[r * cols + col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            a = pivot * cols
            b = rank * cols
            for j in range(cols):
                rn[a + j], rn[b + j] = rn[b + j], rn[a + j]
                rd[a + j], rd[b + j] = rd[b + j], rd[a + j]
        base = rank * cols
        pn = rn[base + col]
        pd = rd[base + col]
        if pn != pd:
            for j in range(col, cols):
                if rn[base + j] != 0:
                    tn, td = _mul(rn[base + j], rd[base + j], pd, pn)
                    if td < 0:
                        tn, td = -tn, -td
                    rn[base + j] = tn
                    rd[base + j] = td
        for r in range(rows):
            if r == rank:
                continue
            off = r * cols
            fn = rn[off + col]
            fd = rd[off + col]
            if fn == 0:
                continue
            for j in range(col, cols):
                if rn[base + j] == 0:
                    continue
                tn, td = _mul(fn, fd, rn[base + j], rd[base + j])
                rn[off + j], rd[off + j] = _add(rn[off + j], rd[off + j], -tn, td)
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    return rn, rd, pivots
