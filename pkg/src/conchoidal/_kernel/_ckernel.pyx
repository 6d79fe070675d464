# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernel``.

Same element layout and same function signatures.  Products whose inputs all
fit in 15 bits are computed in C ``long long`` arithmetic; anything larger
falls back to Python integers.
"""

from math import gcd

ZERO8 = (0, 0, 0, 0, 0, 0, 0, 0)

cdef long long SMALL = 32768


cdef inline bint _small8(tuple a, long long *out):
    cdef int j
    cdef long long v
    for j in range(8):
        o = a[j]
        try:
            v = o
        except OverflowError:
            return False
        if v >= SMALL or v <= -SMALL:
            return False
        out[j] = v
    return True


cpdef tuple normalize(tuple c, object d):
    g = gcd(gcd(gcd(c[0], c[1]), gcd(c[2], c[3])), gcd(gcd(c[4], c[5]), gcd(c[6], c[7])))
    if g == 0:
        return ZERO8, 1
    g = gcd(g, d)
    if g == 1:
        return c, d
    return tuple([x // g for x in c]), d // g


cpdef tuple add(tuple ac, object ad, tuple bc, object bd):
    cdef int j
    if ad == bd:
        return normalize(tuple([ac[j] + bc[j] for j in range(8)]), ad)
    return normalize(tuple([ac[j] * bd + bc[j] * ad for j in range(8)]), ad * bd)


cpdef tuple sub(tuple ac, object ad, tuple bc, object bd):
    cdef int j
    if ad == bd:
        return normalize(tuple([ac[j] - bc[j] for j in range(8)]), ad)
    return normalize(tuple([ac[j] * bd - bc[j] * ad for j in range(8)]), ad * bd)


cdef tuple _mul_small(long long *a, long long *b, long long *k, int ngen):
    cdef long long c0r, c0i, c1r, c1i, c2r, c2i, c3r, c3i, pr, pi
    c0r = a[0] * b[0] - a[1] * b[1]
    c0i = a[0] * b[1] + a[1] * b[0]
    if ngen == 0:
        return (c0r, c0i, 0, 0, 0, 0, 0, 0)
    pr = a[2] * b[2] - a[3] * b[3]
    pi = a[2] * b[3] + a[3] * b[2]
    c0r += k[0] * pr - k[1] * pi
    c0i += k[0] * pi + k[1] * pr
    c1r = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] - a[3] * b[1]
    c1i = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
    if ngen == 1:
        return (c0r, c0i, c1r, c1i, 0, 0, 0, 0)
    pr = a[4] * b[4] - a[5] * b[5]
    pi = a[4] * b[5] + a[5] * b[4]
    c0r += k[2] * pr - k[3] * pi
    c0i += k[2] * pi + k[3] * pr
    pr = a[6] * b[6] - a[7] * b[7]
    pi = a[6] * b[7] + a[7] * b[6]
    c0r += k[4] * pr - k[5] * pi
    c0i += k[4] * pi + k[5] * pr
    pr = a[4] * b[6] - a[5] * b[7] + a[6] * b[4] - a[7] * b[5]
    pi = a[4] * b[7] + a[5] * b[6] + a[6] * b[5] + a[7] * b[4]
    c1r += k[2] * pr - k[3] * pi
    c1i += k[2] * pi + k[3] * pr
    c2r = a[0] * b[4] - a[1] * b[5] + a[4] * b[0] - a[5] * b[1]
    c2i = a[0] * b[5] + a[1] * b[4] + a[4] * b[1] + a[5] * b[0]
    pr = a[2] * b[6] - a[3] * b[7] + a[6] * b[2] - a[7] * b[3]
    pi = a[2] * b[7] + a[3] * b[6] + a[6] * b[3] + a[7] * b[2]
    c2r += k[0] * pr - k[1] * pi
    c2i += k[0] * pi + k[1] * pr
    c3r = (a[0] * b[6] - a[1] * b[7] + a[6] * b[0] - a[7] * b[1]
           + a[2] * b[4] - a[3] * b[5] + a[4] * b[2] - a[5] * b[3])
    c3i = (a[0] * b[7] + a[1] * b[6] + a[6] * b[1] + a[7] * b[0]
           + a[2] * b[5] + a[3] * b[4] + a[4] * b[3] + a[5] * b[2])
    return (c0r, c0i, c1r, c1i, c2r, c2i, c3r, c3i)


cdef tuple _mul_big(tuple a, tuple b, tuple k, int ngen):
    a0r, a0i = a[0], a[1]
    b0r, b0i = b[0], b[1]
    c0r = a0r * b0r - a0i * b0i
    c0i = a0r * b0i + a0i * b0r
    if ngen == 0:
        return (c0r, c0i, 0, 0, 0, 0, 0, 0)
    a1r, a1i = a[2], a[3]
    b1r, b1i = b[2], b[3]
    e1r, e1i = k[0], k[1]
    pr = a1r * b1r - a1i * b1i
    pi = a1r * b1i + a1i * b1r
    c0r += e1r * pr - e1i * pi
    c0i += e1r * pi + e1i * pr
    c1r = a0r * b1r - a0i * b1i + a1r * b0r - a1i * b0i
    c1i = a0r * b1i + a0i * b1r + a1r * b0i + a1i * b0r
    if ngen == 1:
        return (c0r, c0i, c1r, c1i, 0, 0, 0, 0)
    a2r, a2i, a3r, a3i = a[4], a[5], a[6], a[7]
    b2r, b2i, b3r, b3i = b[4], b[5], b[6], b[7]
    e2r, e2i, e12r, e12i = k[2], k[3], k[4], k[5]
    pr = a2r * b2r - a2i * b2i
    pi = a2r * b2i + a2i * b2r
    c0r += e2r * pr - e2i * pi
    c0i += e2r * pi + e2i * pr
    pr = a3r * b3r - a3i * b3i
    pi = a3r * b3i + a3i * b3r
    c0r += e12r * pr - e12i * pi
    c0i += e12r * pi + e12i * pr
    pr = a2r * b3r - a2i * b3i + a3r * b2r - a3i * b2i
    pi = a2r * b3i + a2i * b3r + a3r * b2i + a3i * b2r
    c1r += e2r * pr - e2i * pi
    c1i += e2r * pi + e2i * pr
    c2r = a0r * b2r - a0i * b2i + a2r * b0r - a2i * b0i
    c2i = a0r * b2i + a0i * b2r + a2r * b0i + a2i * b0r
    pr = a1r * b3r - a1i * b3i + a3r * b1r - a3i * b1i
    pi = a1r * b3i + a1i * b3r + a3r * b1i + a3i * b1r
    c2r += e1r * pr - e1i * pi
    c2i += e1r * pi + e1i * pr
    c3r = (a0r * b3r - a0i * b3i + a3r * b0r - a3i * b0i
           + a1r * b2r - a1i * b2i + a2r * b1r - a2i * b1i)
    c3i = (a0r * b3i + a0i * b3r + a3r * b0i + a3i * b0r
           + a1r * b2i + a1i * b2r + a2r * b1i + a2i * b1r)
    return (c0r, c0i, c1r, c1i, c2r, c2i, c3r, c3i)


cdef tuple _mul_raw(tuple a, tuple b, tuple k, int ngen, bint ksmall, long long *kk):
    cdef long long sa[8]
    cdef long long sb[8]
    if ksmall and _small8(a, sa) and _small8(b, sb):
        return _mul_small(sa, sb, kk, ngen)
    return _mul_big(a, b, k, ngen)


cdef bint _small_k(tuple k, long long *kk):
    cdef int j
    cdef long long v
    for j in range(6):
        try:
            v = k[j]
        except OverflowError:
            return False
        if v >= SMALL or v <= -SMALL:
            return False
        kk[j] = v
    return True


cpdef tuple mul(tuple ac, object ad, tuple bc, object bd, tuple k, int ngen):
    cdef long long kk[6]
    cdef bint ks = _small_k(k, kk)
    return normalize(_mul_raw(ac, bc, k, ngen, ks, kk), ad * bd)


cdef tuple _sum_terms(list terms):
    cdef int j
    if len(terms) == 1:
        c, d = terms[0]
        return normalize(c, d)
    den = 1
    for _, d in terms:
        den = den * d // gcd(den, d)
    acc = [0] * 8
    for c, d in terms:
        f = den // d
        for j in range(8):
            if c[j]:
                acc[j] += c[j] * f
    return normalize(tuple(acc), den)


cpdef list poly_mul(list A, list B, tuple k, int ngen):
    """Convolution of two coefficient lists of ``(c, d)`` elements."""
    cdef long long kk[6]
    cdef bint ks
    cdef Py_ssize_t i, j, n
    if not A or not B:
        return []
    ks = _small_k(k, kk)
    n = len(A) + len(B) - 1
    buckets = [[] for _ in range(n)]
    for i in range(len(A)):
        ac, ad = A[i]
        if ad == 1 and not any(ac):
            continue
        for j in range(len(B)):
            bc, bd = B[j]
            if bd == 1 and not any(bc):
                continue
            buckets[i + j].append((_mul_raw(ac, bc, k, ngen, ks, kk), ad * bd))
    return [_sum_terms(t) if t else (ZERO8, 1) for t in buckets]
