"""Pure-Python arithmetic kernel for tower elements.

An element is stored as ``(c, d)``: ``c`` is a tuple of eight integers holding
the real and imaginary parts of the coordinates on the basis
``1, r1, r2, r1*r2`` (``r_k`` the adjoined square roots) and ``d`` is a
positive common denominator.  ``k`` carries the structure constants
``(e1.re, e1.im, e2.re, e2.im, e12.re, e12.im)`` where ``r1**2 = e1``,
``r2**2 = e2`` and ``e12 = e1*e2``; all are Gaussian integers.

The compiled kernel in ``_ckernel.pyx`` implements the same functions with the
same signatures.
"""

from math import gcd

ZERO8 = (0, 0, 0, 0, 0, 0, 0, 0)


def normalize(c, d):
    g = gcd(gcd(gcd(c[0], c[1]), gcd(c[2], c[3])), gcd(gcd(c[4], c[5]), gcd(c[6], c[7])))
    if g == 0:
        return ZERO8, 1
    g = gcd(g, d)
    if g == 1:
        return c, d
    return tuple(x // g for x in c), d // g


def add(ac, ad, bc, bd):
    if ad == bd:
        c = (ac[0] + bc[0], ac[1] + bc[1], ac[2] + bc[2], ac[3] + bc[3],
             ac[4] + bc[4], ac[5] + bc[5], ac[6] + bc[6], ac[7] + bc[7])
        return normalize(c, ad)
    c = (ac[0] * bd + bc[0] * ad, ac[1] * bd + bc[1] * ad,
         ac[2] * bd + bc[2] * ad, ac[3] * bd + bc[3] * ad,
         ac[4] * bd + bc[4] * ad, ac[5] * bd + bc[5] * ad,
         ac[6] * bd + bc[6] * ad, ac[7] * bd + bc[7] * ad)
    return normalize(c, ad * bd)


def sub(ac, ad, bc, bd):
    if ad == bd:
        c = (ac[0] - bc[0], ac[1] - bc[1], ac[2] - bc[2], ac[3] - bc[3],
             ac[4] - bc[4], ac[5] - bc[5], ac[6] - bc[6], ac[7] - bc[7])
        return normalize(c, ad)
    c = (ac[0] * bd - bc[0] * ad, ac[1] * bd - bc[1] * ad,
         ac[2] * bd - bc[2] * ad, ac[3] * bd - bc[3] * ad,
         ac[4] * bd - bc[4] * ad, ac[5] * bd - bc[5] * ad,
         ac[6] * bd - bc[6] * ad, ac[7] * bd - bc[7] * ad)
    return normalize(c, ad * bd)


def _mul_raw(a, b, k, ngen):
    # unreduced numerators of the product
    a0r, a0i = a[0], a[1]
    b0r, b0i = b[0], b[1]
    c0r = a0r * b0r - a0i * b0i
    c0i = a0r * b0i + a0i * b0r
    if ngen == 0:
        return (c0r, c0i, 0, 0, 0, 0, 0, 0)
    a1r, a1i = a[2], a[3]
    b1r, b1i = b[2], b[3]
    e1r, e1i = k[0], k[1]
    # r1 * r1 -> e1
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
    # r2 * r2 -> e2
    pr = a2r * b2r - a2i * b2i
    pi = a2r * b2i + a2i * b2r
    c0r += e2r * pr - e2i * pi
    c0i += e2r * pi + e2i * pr
    # r1r2 * r1r2 -> e12
    pr = a3r * b3r - a3i * b3i
    pi = a3r * b3i + a3i * b3r
    c0r += e12r * pr - e12i * pi
    c0i += e12r * pi + e12i * pr
    # r2 * r1r2 -> e2 r1
    pr = a2r * b3r - a2i * b3i + a3r * b2r - a3i * b2i
    pi = a2r * b3i + a2i * b3r + a3r * b2i + a3i * b2r
    c1r += e2r * pr - e2i * pi
    c1i += e2r * pi + e2i * pr
    # r2 coordinate
    c2r = a0r * b2r - a0i * b2i + a2r * b0r - a2i * b0i
    c2i = a0r * b2i + a0i * b2r + a2r * b0i + a2i * b0r
    # r1 * r1r2 -> e1 r2
    pr = a1r * b3r - a1i * b3i + a3r * b1r - a3i * b1i
    pi = a1r * b3i + a1i * b3r + a3r * b1i + a3i * b1r
    c2r += e1r * pr - e1i * pi
    c2i += e1r * pi + e1i * pr
    # r1r2 coordinate
    c3r = (a0r * b3r - a0i * b3i + a3r * b0r - a3i * b0i
           + a1r * b2r - a1i * b2i + a2r * b1r - a2i * b1i)
    c3i = (a0r * b3i + a0i * b3r + a3r * b0i + a3i * b0r
           + a1r * b2i + a1i * b2r + a2r * b1i + a2i * b1r)
    return (c0r, c0i, c1r, c1i, c2r, c2i, c3r, c3i)


def mul(ac, ad, bc, bd, k, ngen):
    return normalize(_mul_raw(ac, bc, k, ngen), ad * bd)


def _sum_terms(terms):
    # terms: list of (raw numerators, denominator)
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


def poly_mul(A, B, k, ngen):
    """Convolution of two coefficient lists of ``(c, d)`` elements."""
    if not A or not B:
        return []
    n = len(A) + len(B) - 1
    buckets = [[] for _ in range(n)]
    for i, (ac, ad) in enumerate(A):
        if ad == 1 and not any(ac):
            continue
        for j, (bc, bd) in enumerate(B):
            if bd == 1 and not any(bc):
                continue
            buckets[i + j].append((_mul_raw(ac, bc, k, ngen), ad * bd))
    return [_sum_terms(t) if t else (ZERO8, 1) for t in buckets]
