"""Exact linear algebra over the rationals.

Matrices are tuples of tuples of Fraction, vectors are tuples of Fraction.
Row reduction is delegated to the integer kernel (liedual.kernel) after
clearing denominators row by row, so every result is exact and deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from liedual.kernel import det_int, rank_int, rref_int

Rational = Fraction
Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(entries) -> Vec:
    return tuple(frac(x) for x in entries)


def matrix(rows) -> Mat:
    return tuple(vector(r) for r in rows)


def zeros(m: int, n: int) -> Mat:
    return tuple((ZERO,) * n for _ in range(m))


def eye(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(a: Mat) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Fraction, a: Mat) -> Mat:
    return tuple(tuple(c * x for x in r) for r in a)


def mat_neg(a: Mat) -> Mat:
    return tuple(tuple(-x for x in r) for r in a)


def matmul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(ra, cb)) for cb in bt) for ra in a)


def matvec(a: Mat, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a)


def vecmat(v: Vec, a: Mat) -> Vec:
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]) if a else 0))


def dot(u: Vec, v: Vec) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), ZERO)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c: Fraction, v: Vec) -> Vec:
    return tuple(c * x for x in v)


def is_zero_vec(v: Vec) -> bool:
    return all(x == 0 for x in v)


def is_zero_mat(a: Mat) -> bool:
    return all(x == 0 for r in a for x in r)


def _to_int_rows(a) -> list[list[int]]:
    """Clear denominators row by row; preserves the row space exactly."""
    out = []
    for row in a:
        row = [frac(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def rref(a) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    rows = [r for r in a if not all(frac(x) == 0 for x in r)]
    if not rows:
        return (), ()
    mat_i, dens, pivots = rref_int(_to_int_rows(rows))
    out = tuple(tuple(Fraction(x, d) for x in row) for row, d in zip(mat_i, dens))
    return out, tuple(pivots)


def rank(a) -> int:
    rows = [r for r in a if not all(frac(x) == 0 for x in r)]
    if not rows:
        return 0
    return rank_int(_to_int_rows(rows))


def det(a: Mat) -> Fraction:
    n = len(a)
    if n == 0:
        return ONE
    scale = ONE
    int_rows = []
    for row in a:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        int_rows.append([int(x * d) for x in row])
    return Fraction(det_int(int_rows), 1) / scale


def nullspace(a: Mat, ncols: int | None = None) -> list[Vec]:
    """Canonical (RREF) basis of {v : a @ v = 0}."""
    if ncols is None:
        if not a:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(a[0])
    red, pivots = rref(a)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    if not basis:
        return []
    canon, _ = rref(basis)
    return list(canon)


def solve(a: Mat, b: Vec) -> Vec | None:
    """One exact solution of a @ x = b (free variables set to 0), or None."""
    m, n = shape(a)
    aug = [tuple(a[i]) + (frac(b[i]),) for i in range(m)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = red[i][n]
    # free variables are zero, but rows may still couple them; re-derive:
    # RREF guarantees row i reads x[p_i] + sum_f red[i][f] x_f = red[i][n],
    # so with x_f = 0 the assignment above is exact.
    return tuple(x)


def inverse(a: Mat) -> Mat | None:
    n = len(a)
    if n == 0:
        return ()
    aug = [tuple(a[i]) + tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)]
    red, pivots = rref(aug)
    if len(pivots) < n or any(p >= n for p in pivots[:n]):
        return None
    return tuple(r[n:] for r in red)


def charpoly(a: Mat) -> tuple[Fraction, ...]:
    """Coefficients of det(tI - a), ascending: (c0, c1, ..., 1).

    Faddeev-LeVerrier; exact over the rationals.
    """
    n = len(a)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = eye(n)
    for k in range(1, n + 1):
        am = matmul(a, m)
        tr = sum((am[i][i] for i in range(n)), ZERO)
        c = -tr / k
        coeffs[n - k] = c
        m = tuple(
            tuple(am[i][j] + (c if i == j else ZERO) for j in range(n)) for i in range(n)
        )
    return tuple(coeffs)


def row_stack(blocks) -> Mat:
    rows: list[Vec] = []
    for b in blocks:
        rows.extend(tuple(r) for r in b)
    return tuple(rows)


def basis_contains(basis_rows: Mat, v: Vec) -> bool:
    """Is v in the row span of basis_rows (given in any form)?"""
    if is_zero_vec(v):
        return True
    if not basis_rows:
        return False
    return rank(basis_rows) == rank(tuple(basis_rows) + (tuple(v),))
