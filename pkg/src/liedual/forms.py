"""Symmetric bilinear forms on a Lie algebra.

Solves the ad-invariance equations exactly, computes radicals, restrictions,
orthogonal complements and signatures, and hosts the deterministic exact
scans used to search form families for nondegenerate or corank-1 members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from liedual import linalg
from liedual.core import LieAlgebra, Subspace, ad_matrix, as_coords, bracket_basis
from liedual.errors import DimensionMismatch, ScanBudgetExceeded
from liedual.kernel import det_int, rank_int
from liedual.linalg import Mat, Vec, frac

SCAN_BUDGET = 500_000


@dataclass(frozen=True)
class SymBilinearForm:
    dim: int
    matrix: Mat

    def __post_init__(self):
        m = linalg.matrix(self.matrix)
        if len(m) != self.dim or any(len(r) != self.dim for r in m):
            raise DimensionMismatch("form matrix shape does not match dim")
        if m != linalg.transpose(m):
            raise DimensionMismatch("form matrix is not symmetric")
        object.__setattr__(self, "matrix", m)

    def apply(self, x, y) -> Fraction:
        xc, yc = as_coords(x), as_coords(y)
        if len(xc) != self.dim or len(yc) != self.dim:
            raise DimensionMismatch("vector length does not match form dimension")
        return linalg.dot(xc, linalg.matvec(self.matrix, yc))

    def is_nondegenerate(self) -> bool:
        return linalg.det(self.matrix) != 0


@dataclass(frozen=True)
class FormFamily:
    """Linear family of symmetric forms (a basis of a solution space)."""

    dim: int
    basis: tuple[SymBilinearForm, ...]

    def __post_init__(self):
        basis = tuple(self.basis)
        if any(b.dim != self.dim for b in basis):
            raise DimensionMismatch("family member has wrong dimension")
        if basis:
            rows = [_vectorize(b.matrix, self.dim) for b in basis]
            if linalg.rank(rows) != len(basis):
                raise DimensionMismatch("family basis is linearly dependent")
        object.__setattr__(self, "basis", basis)

    @property
    def size(self) -> int:
        return len(self.basis)

    def member(self, coeffs) -> SymBilinearForm:
        coeffs = [frac(c) for c in coeffs]
        if len(coeffs) != len(self.basis):
            raise DimensionMismatch("coefficient count does not match family size")
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for c, b in zip(coeffs, self.basis):
            if c == 0:
                continue
            for i in range(n):
                row = b.matrix[i]
                for j in range(n):
                    if row[j] != 0:
                        m[i][j] += c * row[j]
        return SymBilinearForm(n, tuple(tuple(r) for r in m))

    def contains(self, b: SymBilinearForm) -> bool:
        rows = [_vectorize(f.matrix, self.dim) for f in self.basis]
        return linalg.basis_contains(tuple(rows), _vectorize(b.matrix, self.dim))


def _sym_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def _vectorize(m: Mat, n: int) -> Vec:
    return tuple(m[i][j] for (i, j) in _sym_pairs(n))


def _unvectorize(v: Vec, n: int) -> Mat:
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in zip(_sym_pairs(n), v):
        m[i][j] = c
        m[j][i] = c
    return tuple(tuple(r) for r in m)


def is_ad_invariant(l: LieAlgebra, b: SymBilinearForm) -> bool:
    """Exhaustive check of B([w,x],y) + B(x,[w,y]) = 0 on basis triples."""
    m = b.matrix
    for w in range(l.dim):
        for x in range(l.dim):
            wx = bracket_basis(l, w, x)
            for y in range(x, l.dim):
                wy = bracket_basis(l, w, y)
                s = Fraction(0)
                for k, c in enumerate(wx):
                    if c != 0:
                        s += c * m[k][y]
                for k, c in enumerate(wy):
                    if c != 0:
                        s += c * m[x][k]
                if s != 0:
                    return False
    return True


def invariant_sym_forms(l: LieAlgebra) -> FormFamily:
    """Basis of the space of ad-invariant symmetric bilinear forms."""
    n = l.dim
    pairs = _sym_pairs(n)
    pos = {p: t for t, p in enumerate(pairs)}
    rows = []
    for w in range(n):
        for x, y in pairs:
            row = [Fraction(0)] * len(pairs)
            for k, c in enumerate(bracket_basis(l, w, x)):
                if c != 0:
                    row[pos[(min(k, y), max(k, y))]] += c
            for k, c in enumerate(bracket_basis(l, w, y)):
                if c != 0:
                    row[pos[(min(x, k), max(x, k))]] += c
            if any(c != 0 for c in row):
                rows.append(tuple(row))
    if not rows:
        sols = [linalg.vector(v) for v in linalg.eye(len(pairs))]
    else:
        sols = linalg.nullspace(tuple(rows), len(pairs))
    basis = tuple(SymBilinearForm(n, _unvectorize(s, n)) for s in sols)
    fam = FormFamily(n, basis)
    assert all(is_ad_invariant(l, b) for b in fam.basis)
    return fam


def killing_form(l: LieAlgebra) -> SymBilinearForm:
    ads = [ad_matrix(l, linalg.vector([1 if t == i else 0 for t in range(l.dim)])) for i in range(l.dim)]
    n = l.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            prod = linalg.matmul(ads[i], ads[j])
            tr = sum((prod[t][t] for t in range(n)), Fraction(0))
            m[i][j] = tr
            m[j][i] = tr
    return SymBilinearForm(n, tuple(tuple(r) for r in m))


def radical(b: SymBilinearForm) -> Subspace:
    if b.dim == 0:
        return Subspace.zero(0)
    return Subspace.span(linalg.nullspace(b.matrix, b.dim), b.dim)


def signature(b: SymBilinearForm) -> tuple[int, int, int]:
    """(positive, negative, zero) counts after exact congruence
    diagonalization.

    Pivoting: the nonzero diagonal entry of smallest index; when the whole
    active diagonal vanishes, the first nonzero off-diagonal entry (i, j) is
    made diagonal by the hyperbolic move row/col i += row/col j.
    """
    n = b.dim
    m = [list(row) for row in b.matrix]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            hot = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if m[i][j] != 0:
                        hot = (i, j)
                        break
                if hot:
                    break
            if hot is None:
                break
            i, j = hot
            for t in range(n):
                m[i][t] += m[j][t]
            for t in range(n):
                m[t][i] += m[t][j]
            piv = i
        if piv != k:
            m[piv], m[k] = m[k], m[piv]
            for t in range(n):
                m[t][piv], m[t][k] = m[t][k], m[t][piv]
        d = m[k][k]
        for i in range(k + 1, n):
            c = m[i][k]
            if c == 0:
                continue
            fkt = c / d
            for t in range(n):
                m[i][t] -= fkt * m[k][t]
            for t in range(n):
                m[t][i] -= fkt * m[t][k]
    p = sum(1 for i in range(n) if m[i][i] > 0)
    q = sum(1 for i in range(n) if m[i][i] < 0)
    return p, q, n - p - q


def is_positive_definite(b: SymBilinearForm) -> bool:
    return signature(b) == (b.dim, 0, 0)


def restrict(b: SymBilinearForm, s: Subspace) -> SymBilinearForm:
    """Gram matrix of b on the canonical basis of s."""
    if s.ambient_dim != b.dim:
        raise DimensionMismatch("subspace ambient dimension does not match form")
    k = s.dim
    g = tuple(
        tuple(b.apply(s.basis[a], s.basis[c]) for c in range(k)) for a in range(k)
    )
    return SymBilinearForm(k, g)


def orthogonal_complement(b: SymBilinearForm, s: Subspace) -> Subspace:
    """{x : b(x, v) = 0 for every v in s}."""
    if s.ambient_dim != b.dim:
        raise DimensionMismatch("subspace ambient dimension does not match form")
    if s.dim == 0:
        return Subspace.full(b.dim)
    rows = tuple(linalg.vecmat(v, b.matrix) for v in s.basis)
    return Subspace.span(linalg.nullspace(rows, b.dim), b.dim)


# ---------------------------------------------------------------------------
# Deterministic exact scans over a form family.
#
# det(sum c_i B_i) is a polynomial of total degree <= dim in the c_i, so it
# vanishes identically iff it vanishes on the integer simplex lattice
# {c in N^k : sum c_i <= dim}.  Witness candidates are tried in a fixed
# order (a few cheap heuristic points first, then the lattice), which makes
# every scan result reproducible.
# ---------------------------------------------------------------------------


def _int_basis(fam: FormFamily) -> tuple[list[list[list[int]]], int]:
    """Integer rescalings of the family basis matrices (common denominator)."""
    n = fam.dim
    den = 1
    for b in fam.basis:
        for row in b.matrix:
            for x in row:
                den = lcm(den, x.denominator)
    ints = [
        [[int(x * den) for x in row] for row in b.matrix] for b in fam.basis
    ]
    return ints, den


def _int_member(int_basis, coeffs, n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for c, b in zip(coeffs, int_basis):
        if c == 0:
            continue
        for i in range(n):
            bi = b[i]
            mi = m[i]
            for j in range(n):
                if bi[j] != 0:
                    mi[j] += c * bi[j]
    return m


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def simplex_points(k: int, deg: int):
    """Integer points of the simplex {c >= 0, sum c <= deg}, by total then lex."""
    for s in range(deg + 1):
        yield from _compositions(s, k)


def _heuristic_points(k: int):
    yield (1,) * k
    yield tuple(range(1, k + 1))
    yield tuple((3 * i) % 7 + 1 for i in range(k))
    state = 11
    for _ in range(16):
        pt = []
        for _ in range(k):
            state = (state * 1103515245 + 12345) % (1 << 31)
            pt.append(state % 9 + 1)
        yield tuple(pt)


def common_radical(fam: FormFamily) -> Subspace:
    """Vectors annihilated by every member of the family."""
    if not fam.basis:
        return Subspace.full(fam.dim)
    rows = linalg.row_stack([b.matrix for b in fam.basis])
    return Subspace.span(linalg.nullspace(rows, fam.dim), fam.dim)


def scan_nondegenerate(fam: FormFamily) -> tuple[int, ...] | None:
    """Integer coefficients of a nondegenerate member, or None with an exact
    certificate that every member of the family is degenerate."""
    n, k = fam.dim, fam.size
    if n == 0:
        return ()
    if k == 0:
        return None
    if common_radical(fam).dim > 0:
        return None
    int_basis, _ = _int_basis(fam)
    for pt in _heuristic_points(k):
        if det_int(_int_member(int_basis, pt, n)) != 0:
            return pt
    if comb(n + k, k) > SCAN_BUDGET:
        raise ScanBudgetExceeded(
            f"vanishing certificate needs {comb(n + k, k)} points (cap {SCAN_BUDGET})"
        )
    for pt in simplex_points(k, n):
        if det_int(_int_member(int_basis, pt, n)) != 0:
            return pt
    return None


def find_invariant_metric(l: LieAlgebra) -> SymBilinearForm | None:
    """A nondegenerate ad-invariant form if the exact family scan finds one."""
    fam = invariant_sym_forms(l)
    coeffs = scan_nondegenerate(fam)
    if coeffs is None:
        return None
    b = fam.member(coeffs)
    assert radical(b).dim == 0
    return b


def scan_corank_members(fam: FormFamily, corank: int) -> list[tuple[tuple[int, ...], SymBilinearForm]]:
    """Members of the family with the given corank, one exact witness per
    distinct radical subspace, found on the fixed scan set."""
    n, k = fam.dim, fam.size
    if k == 0 or n == 0:
        return []
    if comb(n + k, k) > SCAN_BUDGET:
        raise ScanBudgetExceeded(
            f"corank scan needs {comb(n + k, k)} points (cap {SCAN_BUDGET})"
        )
    int_basis, _ = _int_basis(fam)
    seen: dict[tuple, tuple[tuple[int, ...], SymBilinearForm]] = {}
    for pt in simplex_points(k, n):
        m = _int_member(int_basis, pt, n)
        if n - rank_int(m) != corank:
            continue
        member = fam.member(pt)
        rad = radical(member)
        key = rad.basis
        if key not in seen:
            seen[key] = (pt, member)
    return list(seen.values())
