"""Lie algebras over the rationals given by structure constants.

Antisymmetry is built into the storage: only brackets [e_i, e_j] with i < j
are kept.  All values are immutable and every operation is a pure function,
so instances can be shared freely.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from fractions import Fraction
from itertools import combinations

from liedual import linalg
from liedual.errors import (
    DimensionMismatch,
    JacobiViolation,
    NotAnIdeal,
    NotASubalgebra,
)
from liedual.linalg import Mat, Vec, frac

Rational = Fraction

BracketTable = dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]


@dataclass(frozen=True)
class Vector:
    """Element of a Lie algebra in basis coordinates (column)."""

    coords: Vec

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(frac(x) for x in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)


@dataclass(frozen=True)
class Covector:
    """Linear functional in dual-basis coordinates (row)."""

    coords: Vec

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(frac(x) for x in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __call__(self, v) -> Fraction:
        return linalg.dot(self.coords, as_coords(v))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)


def as_coords(v) -> Vec:
    if isinstance(v, (Vector, Covector)):
        return v.coords
    return linalg.vector(v)


@dataclass(frozen=True)
class LinearMap:
    source_dim: int
    target_dim: int
    matrix: Mat  # target_dim x source_dim

    def __post_init__(self):
        object.__setattr__(self, "matrix", linalg.matrix(self.matrix))
        if len(self.matrix) != self.target_dim or any(
            len(r) != self.source_dim for r in self.matrix
        ):
            raise DimensionMismatch("matrix shape does not match declared dimensions")

    def __call__(self, v) -> Vector:
        x = as_coords(v)
        if len(x) != self.source_dim:
            raise DimensionMismatch("vector length does not match source dimension")
        return Vector(linalg.matvec(self.matrix, x))

    def compose(self, other: "LinearMap") -> "LinearMap":
        if other.target_dim != self.source_dim:
            raise DimensionMismatch("composition shape mismatch")
        return LinearMap(
            other.source_dim, self.target_dim, linalg.matmul(self.matrix, other.matrix)
        )


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n, stored as a reduced-row-echelon basis so equality is
    plain field comparison."""

    ambient_dim: int
    basis: tuple[Vec, ...]

    @staticmethod
    def span(vectors, ambient_dim: int) -> "Subspace":
        rows = [as_coords(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch("spanning vector has wrong length")
        if not rows:
            return Subspace(ambient_dim, ())
        red, _ = linalg.rref(rows)
        return Subspace(ambient_dim, red)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, linalg.eye(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Mat:
        return self.basis

    def contains(self, v) -> bool:
        x = as_coords(v)
        if len(x) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return linalg.basis_contains(self.basis, x)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis:
            for j, x in enumerate(row):
                if x != 0:
                    out.append(j)
                    break
        return tuple(out)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        # x in both spans: x = a^T U = b^T V; solve [U^T | -V^T] null space.
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        u = linalg.transpose(self.basis)
        v = linalg.transpose(other.basis)
        joint = tuple(ru + tuple(-x for x in rv) for ru, rv in zip(u, v))
        sols = linalg.nullspace(joint, self.dim + other.dim)
        vecs = [linalg.vecmat(s[: self.dim], self.basis) for s in sols]
        return Subspace.span(vecs, self.ambient_dim)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.basis + other.basis, self.ambient_dim)


def complement_indices(s: Subspace) -> tuple[int, ...]:
    """Standard basis indices spanning the canonical complement of s."""
    piv = set(s.pivots())
    return tuple(i for i in range(s.ambient_dim) if i not in piv)


@dataclass(frozen=True)
class LieAlgebra:
    """dim, labels, and structure constants f_{ij}^k stored for i < j only."""

    dim: int
    basis_labels: tuple[str, ...]
    f: BracketTable = field(default_factory=dict)
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        labels = tuple(str(s) for s in self.basis_labels)
        if len(labels) != self.dim:
            raise DimensionMismatch("number of labels does not match dim")
        table: BracketTable = {}
        for (i, j), terms in sorted(self.f.items()):
            if not (0 <= i < j < self.dim):
                raise DimensionMismatch(f"bracket key ({i},{j}) out of range or not i<j")
            acc: dict[int, Fraction] = {}
            for k, c in terms:
                if not 0 <= k < self.dim:
                    raise DimensionMismatch(f"bracket target index {k} out of range")
                acc[k] = acc.get(k, Fraction(0)) + frac(c)
            clean = sorted((k, c) for k, c in acc.items() if c != 0)
            if clean:
                table[(i, j)] = tuple(clean)
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "f", table)
        if check:
            bad = check_jacobi(self)
            if bad:
                raise JacobiViolation(bad)

    def label(self, i: int) -> str:
        return self.basis_labels[i]


def bracket_basis(l: LieAlgebra, i: int, j: int) -> Vec:
    """[e_i, e_j] as a coordinate vector."""
    zero = (Fraction(0),) * l.dim
    if i == j:
        return zero
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    terms = l.f.get((i, j))
    if not terms:
        return zero
    out = [Fraction(0)] * l.dim
    for k, c in terms:
        out[k] = c if sign > 0 else -c
    return tuple(out)


def bracket(l: LieAlgebra, x, y) -> Vector:
    """[x, y] by bilinear expansion of the structure constants."""
    xc, yc = as_coords(x), as_coords(y)
    if len(xc) != l.dim or len(yc) != l.dim:
        raise DimensionMismatch("argument length does not match algebra dimension")
    out = [Fraction(0)] * l.dim
    for (i, j), terms in l.f.items():
        coef = xc[i] * yc[j] - xc[j] * yc[i]
        if coef == 0:
            continue
        for k, c in terms:
            out[k] += coef * c
    return Vector(tuple(out))


def ad_matrix(l: LieAlgebra, x) -> Mat:
    """Matrix of ad_x = [x, -] in the given basis (columns are [x, e_j])."""
    xc = as_coords(x)
    cols = [bracket(l, xc, unit(l.dim, j)).coords for j in range(l.dim)]
    return linalg.transpose(linalg.matrix(cols))


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def check_jacobi(l: LieAlgebra) -> list[tuple[int, int, int]]:
    """All basis triples i<j<k violating the Jacobi identity (empty if none)."""
    bad = []
    for i, j, k in combinations(range(l.dim), 3):
        acc = [Fraction(0)] * l.dim
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = bracket_basis(l, b, c)
            for m, cm in enumerate(inner):
                if cm == 0:
                    continue
                outer = bracket_basis(l, a, m)
                for t, ct in enumerate(outer):
                    if ct != 0:
                        acc[t] += cm * ct
        if any(v != 0 for v in acc):
            bad.append((i, j, k))
    return bad


def center(l: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j}, computed as an exact null space."""
    if l.dim == 0:
        return Subspace.zero(0)
    rows = []
    for j in range(l.dim):
        # row block: coefficient of e_k in [e_i, e_j], indexed (k; i)
        block = [[Fraction(0)] * l.dim for _ in range(l.dim)]
        for i in range(l.dim):
            for k, c in enumerate(bracket_basis(l, i, j)):
                if c != 0:
                    block[k][i] = c
        rows.extend(tuple(r) for r in block)
    sols = linalg.nullspace(tuple(rows), l.dim)
    return Subspace.span(sols, l.dim)


def derived_subalgebra(l: LieAlgebra) -> Subspace:
    """Span of all brackets [e_i, e_j]."""
    vecs = [bracket_basis(l, i, j) for (i, j) in l.f]
    return Subspace.span(vecs, l.dim)


def span_is_ideal(l: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != l.dim:
        raise DimensionMismatch("subspace ambient dimension does not match algebra")
    for i in range(l.dim):
        ei = unit(l.dim, i)
        for v in s.basis:
            if not s.contains(bracket(l, ei, v)):
                return False
    return True


def is_subalgebra(l: LieAlgebra, s: Subspace) -> bool:
    for a in range(s.dim):
        for b in range(a + 1, s.dim):
            if not s.contains(bracket(l, s.basis[a], s.basis[b])):
                return False
    return True


def direct_sum(l1: LieAlgebra, l2: LieAlgebra) -> LieAlgebra:
    """Block-diagonal structure constants; the factors commute."""
    n1 = l1.dim
    f: BracketTable = dict(l1.f)
    for (i, j), terms in l2.f.items():
        f[(i + n1, j + n1)] = tuple((k + n1, c) for k, c in terms)
    return LieAlgebra(n1 + l2.dim, l1.basis_labels + l2.basis_labels, f, check=False)


def quotient_by_ideal(l: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, LinearMap]:
    """Quotient algebra on the canonical complement basis plus the projection.

    The complement is spanned by the standard basis vectors whose indices are
    not pivots of the ideal's echelon form.
    """
    if not span_is_ideal(l, ideal):
        raise NotAnIdeal("[L, S] is not contained in S")
    piv = ideal.pivots()
    comp = complement_indices(ideal)
    q = len(comp)
    # projection: subtract the ideal components sitting at pivot positions,
    # then read off the complement coordinates.
    proj_rows = []
    for a, c in enumerate(comp):
        row = [Fraction(0)] * l.dim
        row[c] = Fraction(1)
        for t, p in enumerate(piv):
            row[p] -= ideal.basis[t][c]
        proj_rows.append(tuple(row))
    proj = LinearMap(l.dim, q, tuple(proj_rows))
    f: BracketTable = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = proj(bracket(l, unit(l.dim, comp[a]), unit(l.dim, comp[b])))
            terms = tuple((k, c) for k, c in enumerate(w.coords) if c != 0)
            if terms:
                f[(a, b)] = terms
    labels = tuple(l.basis_labels[c] for c in comp)
    quot = LieAlgebra(q, labels, f)
    return quot, proj


def subalgebra_on(l: LieAlgebra, s: Subspace) -> tuple[LieAlgebra, LinearMap]:
    """Lie algebra structure induced on a bracket-closed subspace, together
    with the embedding back into the ambient algebra."""
    if s.ambient_dim != l.dim:
        raise DimensionMismatch("subspace ambient dimension does not match algebra")
    k = s.dim
    cols = linalg.transpose(s.basis) if k else ()
    f: BracketTable = {}
    for a in range(k):
        for b in range(a + 1, k):
            w = bracket(l, s.basis[a], s.basis[b]).coords
            coeffs = linalg.solve(cols, w) if k else None
            if coeffs is None:
                raise NotASubalgebra(f"bracket of basis vectors {a},{b} leaves the subspace")
            terms = tuple((t, c) for t, c in enumerate(coeffs) if c != 0)
            if terms:
                f[(a, b)] = terms
    labels = []
    for a in range(k):
        row = s.basis[a]
        hot = [i for i, x in enumerate(row) if x != 0]
        if len(hot) == 1 and row[hot[0]] == 1:
            labels.append(l.basis_labels[hot[0]])
        else:
            labels.append(f"u{a}")
    embed = LinearMap(k, l.dim, linalg.transpose(s.basis) if k else tuple(() for _ in range(l.dim)))
    return LieAlgebra(k, tuple(labels), f), embed


def change_basis(l: LieAlgebra, cols: Mat, labels=None) -> LieAlgebra:
    """Transport the structure constants to the basis given by the columns of
    an invertible matrix (new basis vectors expressed in the old one)."""
    inv = linalg.inverse(cols)
    if inv is None:
        raise DimensionMismatch("change of basis matrix is singular")
    n = l.dim
    f: BracketTable = {}
    colvecs = linalg.transpose(cols)
    for a in range(n):
        for b in range(a + 1, n):
            w = bracket(l, colvecs[a], colvecs[b]).coords
            new = linalg.matvec(inv, w)
            terms = tuple((k, c) for k, c in enumerate(new) if c != 0)
            if terms:
                f[(a, b)] = terms
    if labels is None:
        labels = tuple(f"b{a}" for a in range(n))
    return LieAlgebra(n, tuple(labels), f)


def is_abelian(l: LieAlgebra) -> bool:
    return not l.f
