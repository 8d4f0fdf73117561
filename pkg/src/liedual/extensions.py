"""The three extension constructions on a metric Lie algebra.

double_extend builds g0 + RD + RZ with bracket

    [X, Y] = [X, Y]_0 + <D0 X, Y>_0 Z,   [D, X] = D0 X,   [Z, -] = 0

and the extended invariant metric with <D,Z> = 1, <Z,Z> = <D,D> = 0 (the
representative with <D,D> = 0 is always stored).  central_extend and
extend_by_derivation are the two halves; cocycle_from_derivation and
derivation_from_cocycle translate between them through the metric.

Basis order in every extension: base vectors first, then Z, then D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from liedual import linalg
from liedual.core import BracketTable, LieAlgebra, bracket_basis, check_jacobi
from liedual.derivations import Derivation, ReductiveModel, is_derivation, is_skew
from liedual.errors import (
    DegenerateForm,
    DimensionMismatch,
    InvalidData,
    NotACocycle,
    NotADerivation,
)
from liedual.forms import SymBilinearForm, is_ad_invariant, signature
from liedual.linalg import Mat


@dataclass(frozen=True)
class Cocycle2:
    """Antisymmetric bilinear map; the cocycle identity is checked against a
    specific algebra by cocycle()/is_cocycle()."""

    dim: int
    matrix: Mat

    def __post_init__(self):
        m = linalg.matrix(self.matrix)
        if len(m) != self.dim or any(len(r) != self.dim for r in m):
            raise DimensionMismatch("cocycle matrix shape does not match dim")
        if m != linalg.mat_neg(linalg.transpose(m)):
            raise DimensionMismatch("cocycle matrix is not antisymmetric")
        object.__setattr__(self, "matrix", m)

    def apply(self, x, y) -> Fraction:
        return linalg.dot(linalg.vector(x), linalg.matvec(self.matrix, linalg.vector(y)))


def is_cocycle(l: LieAlgebra, m: Mat) -> bool:
    """alpha([x,y],z) + alpha([y,z],x) + alpha([z,x],y) = 0 on basis triples."""
    n = l.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = Fraction(0)
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    w = bracket_basis(l, a, b)
                    for t, ct in enumerate(w):
                        if ct != 0:
                            s += ct * m[t][c]
                if s != 0:
                    return False
    return True


def cocycle(l: LieAlgebra, m) -> Cocycle2:
    c = Cocycle2(l.dim, linalg.matrix(m))
    if not is_cocycle(l, c.matrix):
        raise NotACocycle("cocycle identity fails on some basis triple")
    return c


@dataclass(frozen=True)
class DoubleExtensionData:
    """A metric Lie algebra with a skew-symmetric derivation: the shared
    datum behind the bargmannian / carrollian / galilean triple."""

    base: LieAlgebra
    form: SymBilinearForm
    der: Derivation
    model: ReductiveModel | None = None


def validate_double_extension_data(data: DoubleExtensionData) -> None:
    n = data.base.dim
    if data.form.dim != n or data.der.dim != n:
        raise InvalidData("form/derivation dimensions do not match the base")
    if not is_ad_invariant(data.base, data.form):
        raise InvalidData("form is not ad-invariant")
    if linalg.det(data.form.matrix) == 0:
        raise InvalidData("form is degenerate")
    if not is_derivation(data.base, data.der.matrix):
        raise InvalidData("matrix is not a derivation")
    if not is_skew(data.form, data.der.matrix):
        raise InvalidData("derivation is not skew-symmetric for the form")


@dataclass(frozen=True)
class DoubleExtension:
    algebra: LieAlgebra
    form: SymBilinearForm
    z_index: int
    d_index: int
    data: DoubleExtensionData


def cocycle_from_derivation(b0: SymBilinearForm, d0: Derivation) -> Cocycle2:
    """alpha(x, y) = <D0 x, y>."""
    a = linalg.matmul(linalg.transpose(d0.matrix), b0.matrix)
    return Cocycle2(b0.dim, a)


def derivation_from_cocycle(l0: LieAlgebra, b0: SymBilinearForm, alpha: Cocycle2) -> Derivation:
    """The unique D0 with <D0 x, y> = alpha(x, y); requires b0 nondegenerate.

    The output is checked to be a skew derivation (automatic when alpha is a
    cocycle and b0 is ad-invariant)."""
    if b0.dim != l0.dim or alpha.dim != l0.dim:
        raise DimensionMismatch("dimensions do not match")
    inv = linalg.inverse(b0.matrix)
    if inv is None:
        raise DegenerateForm("form is degenerate; the derivation is not determined")
    if not is_cocycle(l0, alpha.matrix):
        raise NotACocycle("cocycle identity fails on some basis triple")
    d0 = linalg.matmul(inv, linalg.transpose(alpha.matrix))
    der = Derivation(l0.dim, d0)
    if not is_derivation(l0, der.matrix) or not is_skew(b0, der.matrix):
        raise InvalidData("induced map is not a skew derivation (form not invariant?)")
    return der


def central_extend(l0: LieAlgebra, alpha: Cocycle2) -> LieAlgebra:
    """One-dimensional central extension: [x,y] = [x,y]_0 + alpha(x,y) Z."""
    n = l0.dim
    if alpha.dim != n:
        raise DimensionMismatch("cocycle dimension does not match the algebra")
    if not is_cocycle(l0, alpha.matrix):
        raise NotACocycle("cocycle identity fails on some basis triple")
    f: BracketTable = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = list(l0.f.get((i, j), ()))
            if alpha.matrix[i][j] != 0:
                terms.append((n, alpha.matrix[i][j]))
            if terms:
                f[(i, j)] = tuple(terms)
    out = LieAlgebra(n + 1, l0.basis_labels + ("Z",), f)
    assert not check_jacobi(out)
    return out


def extend_by_derivation(l0: LieAlgebra, d0: Derivation) -> LieAlgebra:
    """Adjoin a generator D acting by [D, x] = D0 x; the base is an ideal."""
    n = l0.dim
    if d0.dim != n:
        raise DimensionMismatch("derivation dimension does not match the algebra")
    if not is_derivation(l0, d0.matrix):
        raise NotADerivation("Leibniz rule fails on some basis pair")
    f: BracketTable = dict(l0.f)
    for i in range(n):
        terms = tuple((k, -d0.matrix[k][i]) for k in range(n) if d0.matrix[k][i] != 0)
        if terms:
            f[(i, n)] = terms
    out = LieAlgebra(n + 1, l0.basis_labels + ("D",), f)
    assert not check_jacobi(out)
    return out


def double_extend(data: DoubleExtensionData) -> DoubleExtension:
    """One-dimensional double extension of a metric Lie algebra by a
    skew-symmetric derivation; lifts the signature (p, q) to (p+1, q+1)."""
    validate_double_extension_data(data)
    l0, b0, d0 = data.base, data.form, data.der
    n = l0.dim
    alpha = cocycle_from_derivation(b0, d0)
    zi, di = n, n + 1
    f: BracketTable = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = list(l0.f.get((i, j), ()))
            if alpha.matrix[i][j] != 0:
                terms.append((zi, alpha.matrix[i][j]))
            if terms:
                f[(i, j)] = tuple(terms)
    for i in range(n):
        terms = tuple((k, -d0.matrix[k][i]) for k in range(n) if d0.matrix[k][i] != 0)
        if terms:
            f[(i, di)] = terms
    algebra = LieAlgebra(n + 2, l0.basis_labels + ("Z", "D"), f)
    m = [[Fraction(0)] * (n + 2) for _ in range(n + 2)]
    for i in range(n):
        for j in range(n):
            m[i][j] = b0.matrix[i][j]
    m[zi][di] = Fraction(1)
    m[di][zi] = Fraction(1)
    form = SymBilinearForm(n + 2, tuple(tuple(r) for r in m))
    assert not check_jacobi(algebra)
    assert is_ad_invariant(algebra, form)
    p, q, r = signature(b0)
    assert r == 0 and signature(form) == (p + 1, q + 1, 0)
    return DoubleExtension(algebra, form, zi, di, data)
