# cython: language_level=3
"""Compiled twin of liedual._kernel_py.

Same algorithms on the same Python ints; Cython only removes the interpreter
overhead of the inner loops.  Keep in lockstep with _kernel_py: both backends
must return bit-identical results.
"""

from math import gcd


cdef _strip_row(list row, Py_ssize_t n):
    cdef Py_ssize_t t
    g = 0
    for t in range(n):
        g = gcd(g, row[t])
        if g == 1:
            return row
    if g > 1:
        for t in range(n):
            row[t] = row[t] // g
    return row


def rref_int(rows):
    """Reduced row echelon form of an integer matrix.

    Returns (mat, dens, pivots) where mat[i] is a list of ints, dens[i] > 0,
    and row i of the RREF equals mat[i] / dens[i].  Zero rows are dropped;
    pivots are the pivot column indices in ascending order.
    """
    cdef list mat = [list(row0) for row0 in rows]
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t n = len(mat[0]) if m else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, t
    cdef list row, piv
    for c in range(n):
        i = r
        while i < m and mat[i][c] == 0:
            i += 1
        if i == m:
            continue
        if i != r:
            mat[r], mat[i] = mat[i], mat[r]
        p = mat[r][c]
        for j in range(m):
            if j == r:
                continue
            q = mat[j][c]
            if q == 0:
                continue
            row = mat[j]
            piv = mat[r]
            for t in range(n):
                row[t] = p * row[t] - q * piv[t]
            _strip_row(row, n)
        pivots.append(c)
        r += 1
        if r == m:
            break
    cdef list out = []
    cdef list dens = []
    for i in range(r):
        row = mat[i]
        p = row[pivots[i]]
        if p < 0:
            for t in range(n):
                row[t] = -row[t]
            p = -p
        g = p
        for t in range(n):
            g = gcd(g, row[t])
            if g == 1:
                break
        if g > 1:
            for t in range(n):
                row[t] = row[t] // g
            p = p // g
        out.append(row)
        dens.append(p)
    return out, dens, pivots


def rank_int(rows):
    """Rank of an integer matrix (forward elimination only)."""
    cdef list mat = [list(row0) for row0 in rows]
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t n = len(mat[0]) if m else 0
    cdef Py_ssize_t r = 0, c, i, j, t
    cdef list row, piv
    for c in range(n):
        i = r
        while i < m and mat[i][c] == 0:
            i += 1
        if i == m:
            continue
        if i != r:
            mat[r], mat[i] = mat[i], mat[r]
        p = mat[r][c]
        for j in range(r + 1, m):
            q = mat[j][c]
            if q == 0:
                continue
            row = mat[j]
            piv = mat[r]
            for t in range(c, n):
                row[t] = p * row[t] - q * piv[t]
            _strip_row(row, n)
        r += 1
        if r == m:
            break
    return r


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss elimination)."""
    cdef list mat = [list(row0) for row0 in rows]
    cdef Py_ssize_t n = len(mat)
    if n == 0:
        return 1
    cdef int sign = 1
    cdef Py_ssize_t k, i, j
    cdef list row, piv
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            i = k + 1
            while i < n and mat[i][k] == 0:
                i += 1
            if i == n:
                return 0
            mat[k], mat[i] = mat[i], mat[k]
            sign = -sign
        pkk = mat[k][k]
        for i in range(k + 1, n):
            mik = mat[i][k]
            row = mat[i]
            piv = mat[k]
            for j in range(k + 1, n):
                row[j] = (pkk * row[j] - mik * piv[j]) // prev
            row[k] = 0
        prev = pkk
    if sign == 1:
        return mat[n - 1][n - 1]
    return -mat[n - 1][n - 1]
