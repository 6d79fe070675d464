"""Fraction-free determinants and Sylvester resultants over an integral domain.

Entries only need ``+ - *``, ``is_zero()`` and an exact division supplied by
the caller, so the same routine serves field elements, univariate
polynomials and sparse multivariate polynomials.
"""


def bareiss_det(matrix, exquo, one):
    """Determinant by Bareiss elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return one - one
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            lead = ri[k]
            for j in range(k + 1, n):
                num = ri[j] * pivot - lead * rk[j]
                ri[j] = exquo(num, prev) if not num.is_zero() else num
            ri[k] = lead - lead
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(p, q, zero):
    """Sylvester matrix of coefficient lists (lowest degree first), ``p`` rows first."""
    m = len(p) - 1
    n = len(q) - 1
    size = m + n
    rows = []
    pd = list(reversed(p))
    qd = list(reversed(q))
    for i in range(n):
        rows.append([zero] * i + pd + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + qd + [zero] * (size - i - n - 1))
    return rows


def sylvester_resultant(p, q, exquo, zero, one):
    """Resultant of two polynomials given by nonempty coefficient lists."""
    if len(p) == 1 and len(q) == 1:
        return one
    return bareiss_det(sylvester_matrix(p, q, zero), exquo, one)
