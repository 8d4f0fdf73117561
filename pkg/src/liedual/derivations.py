"""Derivation algebras and skew-symmetric derivations.

Solves the Leibniz-rule linear system exactly, the refinement by
skew-symmetry with respect to an invariant form, and the block
decomposition of skew derivations of a reductive metric algebra
(inner part on the semisimple block, so(m) part on the abelian block).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from liedual import linalg
from liedual.core import LieAlgebra, LinearMap, Subspace, ad_matrix, bracket_basis, unit
from liedual.core import Vector
from liedual.errors import DecompositionFailed, DimensionMismatch, NotADerivation
from liedual.forms import SymBilinearForm, is_positive_definite, killing_form, restrict
from liedual.linalg import Mat, frac


@dataclass(frozen=True)
class Derivation:
    dim: int
    matrix: Mat

    def __post_init__(self):
        m = linalg.matrix(self.matrix)
        if len(m) != self.dim or any(len(r) != self.dim for r in m):
            raise DimensionMismatch("derivation matrix shape does not match dim")
        object.__setattr__(self, "matrix", m)

    def __call__(self, v) -> Vector:
        return Vector(linalg.matvec(self.matrix, linalg.vector(v)))


def is_derivation(l: LieAlgebra, m: Mat) -> bool:
    """Leibniz rule D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    n = l.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = linalg.matvec(m, bracket_basis(l, i, j))
            col_i = tuple(m[r][i] for r in range(n))
            col_j = tuple(m[r][j] for r in range(n))
            rhs = [Fraction(0)] * n
            for r in range(n):
                if col_i[r] != 0:
                    for k, c in enumerate(bracket_basis(l, r, j)):
                        if c != 0:
                            rhs[k] += col_i[r] * c
                if col_j[r] != 0:
                    for k, c in enumerate(bracket_basis(l, i, r)):
                        if c != 0:
                            rhs[k] += col_j[r] * c
            if tuple(lhs) != tuple(rhs):
                return False
    return True


def is_skew(b: SymBilinearForm, m: Mat) -> bool:
    """<Dx, y> = -<x, Dy>, i.e. D^T B + B D = 0."""
    lhs = linalg.mat_add(
        linalg.matmul(linalg.transpose(m), b.matrix), linalg.matmul(b.matrix, m)
    )
    return linalg.is_zero_mat(lhs)


def derivation(l: LieAlgebra, m) -> Derivation:
    m = linalg.matrix(m)
    if not is_derivation(l, m):
        raise NotADerivation("Leibniz rule fails on some basis pair")
    return Derivation(l.dim, m)


def _leibniz_rows(l: LieAlgebra) -> list:
    """Rows of the linear system whose kernel is Der(L); unknown order D[r][c]
    flattened as r*n + c."""
    n = l.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            fij = bracket_basis(l, i, j)
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for m_, c in enumerate(fij):
                    if c != 0:
                        row[k * n + m_] += c
                for r in range(n):
                    crj = bracket_basis(l, r, j)[k]
                    if crj != 0:
                        row[r * n + i] -= crj
                    cir = bracket_basis(l, i, r)[k]
                    if cir != 0:
                        row[r * n + j] -= cir
                if any(x != 0 for x in row):
                    rows.append(tuple(row))
    return rows


def _unflatten(v, n: int) -> Mat:
    return tuple(tuple(v[r * n + c] for c in range(n)) for r in range(n))


def derivation_space(l: LieAlgebra) -> list[Derivation]:
    """Basis of the space of derivations (solution of the Leibniz system)."""
    n = l.dim
    if n == 0:
        return []
    rows = _leibniz_rows(l)
    if not rows:
        sols = [linalg.vector(v) for v in linalg.eye(n * n)]
    else:
        sols = linalg.nullspace(tuple(rows), n * n)
    out = [Derivation(n, _unflatten(s, n)) for s in sols]
    assert all(is_derivation(l, d.matrix) for d in out)
    return out


def skew_derivation_space(l: LieAlgebra, b: SymBilinearForm) -> list[Derivation]:
    """Basis of derivations that are additionally skew-symmetric w.r.t. b."""
    n = l.dim
    if n == 0:
        return []
    if b.dim != n:
        raise DimensionMismatch("form dimension does not match algebra")
    rows = _leibniz_rows(l)
    # skew equations: sum_r D[r][p] b[r][q] + b[p][r] D[r][q] = 0 for p <= q
    for p in range(n):
        for q in range(p, n):
            row = [Fraction(0)] * (n * n)
            for r in range(n):
                if b.matrix[r][q] != 0:
                    row[r * n + p] += b.matrix[r][q]
                if b.matrix[p][r] != 0:
                    row[r * n + q] += b.matrix[p][r]
            if any(x != 0 for x in row):
                rows.append(tuple(row))
    if not rows:
        sols = [linalg.vector(v) for v in linalg.eye(n * n)]
    else:
        sols = linalg.nullspace(tuple(rows), n * n)
    out = [Derivation(n, _unflatten(s, n)) for s in sols]
    assert all(is_derivation(l, d.matrix) and is_skew(b, d.matrix) for d in out)
    return out


# ---------------------------------------------------------------------------
# Reductive models: a compact semisimple block (simple factors, each carrying
# a positive multiple of minus its Killing form) plus an abelian block with a
# euclidean inner product.  The block layout is construction metadata; it is
# not recognized from raw structure constants.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimpleFactor:
    name: str
    start: int
    dim: int
    killing_multiple: Fraction  # inner product on the factor = -multiple * killing

    def __post_init__(self):
        object.__setattr__(self, "killing_multiple", frac(self.killing_multiple))


@dataclass(frozen=True)
class ReductiveModel:
    algebra: LieAlgebra
    form: SymBilinearForm
    factors: tuple[SimpleFactor, ...]
    abelian_start: int
    abelian_dim: int

    def __post_init__(self):
        if self.form.dim != self.algebra.dim:
            raise DimensionMismatch("form does not match algebra")
        end = 0
        for f in self.factors:
            if f.start != end:
                raise DimensionMismatch("factor blocks are not contiguous")
            end += f.dim
        if self.abelian_start != end or end + self.abelian_dim != self.algebra.dim:
            raise DimensionMismatch("abelian block does not close the layout")

    @property
    def semisimple_dim(self) -> int:
        return self.abelian_start

    def factor_subspace(self, f: SimpleFactor) -> Subspace:
        n = self.algebra.dim
        return Subspace.span([unit(n, i) for i in range(f.start, f.start + f.dim)], n)

    def abelian_form(self) -> SymBilinearForm:
        a0 = self.abelian_start
        g = tuple(
            tuple(self.form.matrix[a0 + i][a0 + j] for j in range(self.abelian_dim))
            for i in range(self.abelian_dim)
        )
        return SymBilinearForm(self.abelian_dim, g)

    def validate(self) -> None:
        """Check the metadata against the structure constants and the form."""
        if not is_positive_definite(self.form):
            raise DimensionMismatch("model form is not positive definite")
        n = self.algebra.dim
        s = self.abelian_start
        # abelian block commutes with everything it should; factor blocks close
        for (i, j), _terms in self.algebra.f.items():
            blocks = [_block_of(self, i), _block_of(self, j)]
            if blocks[0] != blocks[1] or blocks[0] == "a":
                raise DimensionMismatch("structure constants cross block boundaries")
        for f in self.factors:
            sub = self.factor_subspace(f)
            from liedual.core import subalgebra_on

            factor_alg, _ = subalgebra_on(self.algebra, sub)
            kappa = killing_form(factor_alg)
            expect = linalg.mat_scale(-f.killing_multiple, kappa.matrix)
            got = restrict(self.form, sub).matrix
            if expect != got:
                raise DimensionMismatch(
                    f"form on factor {f.name} is not -{f.killing_multiple} * killing"
                )
        # blocks are mutually orthogonal
        for i in range(n):
            for j in range(n):
                if _block_of(self, i) != _block_of(self, j) and self.form.matrix[i][j] != 0:
                    raise DimensionMismatch("form has cross-block entries")


def _block_of(model: ReductiveModel, i: int):
    if i >= model.abelian_start:
        return "a"
    for t, f in enumerate(model.factors):
        if f.start <= i < f.start + f.dim:
            return t
    raise DimensionMismatch("index outside model layout")


def decompose_skew_derivation(
    model: ReductiveModel, d: Derivation
) -> tuple[Vector, Mat]:
    """Split a skew derivation of a reductive model as ad_X on the semisimple
    block plus a skew endomorphism T of the abelian block.

    Returns (X, T) with X in semisimple-block coordinates.  Raises
    DecompositionFailed when the input mixes blocks or the semisimple part is
    not inner (either would contradict the structure of such algebras and
    signals invalid input).
    """
    l = model.algebra
    n = l.dim
    if d.dim != n:
        raise DimensionMismatch("derivation dimension does not match model")
    if not is_derivation(l, d.matrix):
        raise NotADerivation("input is not a derivation")
    if not is_skew(model.form, d.matrix):
        raise DecompositionFailed("input is not skew-symmetric for the model form")
    s = model.abelian_start
    m = d.matrix
    for i in range(n):
        for j in range(n):
            if (i < s) != (j < s) and m[i][j] != 0:
                raise DecompositionFailed("derivation mixes the blocks")
    # semisimple part must be a combination of inner derivations
    if s:
        ads = [ad_matrix(l, unit(n, i)) for i in range(s)]
        rows = []
        targets = []
        for r in range(s):
            for c in range(s):
                rows.append(tuple(ads[i][r][c] for i in range(s)))
                targets.append(m[r][c])
        x = linalg.solve(tuple(rows), tuple(targets))
        if x is None:
            raise DecompositionFailed("semisimple block is not an inner derivation")
    else:
        x = ()
    t = tuple(tuple(m[s + i][s + j] for j in range(model.abelian_dim)) for i in range(model.abelian_dim))
    gram = model.abelian_form()
    if not is_skew(gram, t):
        raise DecompositionFailed("abelian block is not skew")
    return Vector(x), t


def reassemble_skew_derivation(model: ReductiveModel, x: Vector, t: Mat) -> Derivation:
    """Inverse of decompose_skew_derivation: ad_X on the semisimple block
    extended by T on the abelian block."""
    l = model.algebra
    n = l.dim
    s = model.abelian_start
    xfull = tuple(x.coords) + (Fraction(0),) * (n - s)
    ad = ad_matrix(l, xfull)
    m = [list(r) for r in ad]
    for i in range(model.abelian_dim):
        for j in range(model.abelian_dim):
            m[s + i][s + j] = frac(t[i][j])
    return Derivation(n, tuple(tuple(r) for r in m))
