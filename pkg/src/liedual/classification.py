"""Classification pipeline for the positive-definite case.

A double extension of a positive-definite metric algebra is determined up to
isomorphism by: the simple factor descriptors (dimension, Killing multiple),
the dimension of the kernel block of the derivation, and the characteristic
polynomial of the derivation on its nondegenerate block.  The polynomial is
the exact invariant; the skew-eigenvalues mu_i are a derived view (exact when
the polynomial splits rationally into perfect squares, numeric otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from liedual import linalg, polynomials
from liedual.core import LieAlgebra, Subspace, center, derived_subalgebra, subalgebra_on, unit
from liedual.derivations import Derivation, is_skew
from liedual.errors import (
    DegenerateForm,
    DimensionMismatch,
    MissingFactorData,
    NotReductive,
)
from liedual.extensions import (
    DoubleExtension,
    DoubleExtensionData,
    cocycle_from_derivation,
    double_extend,
)
from liedual.forms import SymBilinearForm, is_positive_definite, killing_form, restrict
from liedual.linalg import Mat, frac
from liedual.polynomials import Poly
from liedual.structures import GalileanStructure, verify_galilean
from liedual.core import BracketTable, Covector


@dataclass(frozen=True)
class ClassificationData:
    """Exact isomorphism invariants of a positive-definite double extension.

    Two data records describe the same class iff factors, a0_dim and
    char_poly all agree; omega is the witness matrix, not an invariant."""

    factors: tuple[tuple[int, Fraction], ...]  # (dim, killing multiple), sorted
    a0_dim: int
    a1_dim: int
    omega: Mat
    char_poly: Poly  # of D0 restricted to the a1 block, ascending coefficients

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple(sorted(((d, frac(m)) for d, m in self.factors), reverse=True))
        )
        if any(m <= 0 for _d, m in self.factors):
            raise DimensionMismatch("killing multiples must be positive")
        om = linalg.matrix(self.omega)
        if om != linalg.mat_neg(linalg.transpose(om)):
            raise DimensionMismatch("omega is not antisymmetric")
        if len(om) != self.a1_dim:
            raise DimensionMismatch("omega does not live on the a1 block")
        if self.a1_dim and linalg.det(om) == 0:
            raise DimensionMismatch("omega is degenerate on a1")
        object.__setattr__(self, "omega", om)
        cp = polynomials.poly(self.char_poly)
        if polynomials.degree(cp) != self.a1_dim:
            raise DimensionMismatch("char_poly degree does not match a1")
        if any(cp[i] != 0 for i in range(1, len(cp), 2)):
            raise DimensionMismatch("char_poly of a skew map must be even")
        if self.a1_dim and not polynomials.all_roots_positive_real(_squared_poly(cp)):
            raise DimensionMismatch("char_poly roots are not purely imaginary")
        object.__setattr__(self, "char_poly", cp)

    def same_class(self, other: "ClassificationData") -> bool:
        return (
            self.factors == other.factors
            and self.a0_dim == other.a0_dim
            and self.char_poly == other.char_poly
        )

    def mu_exact(self) -> list[Fraction] | None:
        """Skew-eigenvalues, descending with multiplicity, when the char
        polynomial factors over the rationals into perfect squares."""
        if self.a1_dim == 0:
            return []
        q = _squared_poly(self.char_poly)
        roots = polynomials.rational_roots(q)
        if sum(m for _r, m in roots) != polynomials.degree(q):
            return None
        mus: list[Fraction] = []
        for r, mult in roots:
            root = polynomials.sqrt_rational(r)
            if root is None or root <= 0:
                return None
            mus.extend([root] * mult)
        return sorted(mus, reverse=True)

    def mu_numeric(self, tol: float = 1e-9) -> list[float]:
        """Skew-eigenvalues to the requested tolerance (Sturm bisection)."""
        if self.a1_dim == 0:
            return []
        q = _squared_poly(self.char_poly)
        out: list[float] = []
        for mult, part in polynomials.squarefree_decomposition(q):
            for a, b in polynomials.isolate_positive_roots(part):
                lo, hi = a, b
                while hi > lo and sqrt(float(hi)) - sqrt(float(lo)) > tol:
                    lo, hi = polynomials.refine_root(part, lo, hi, (hi - lo) / 2)
                out.extend([sqrt((float(lo) + float(hi)) / 2)] * mult)
        return sorted(out, reverse=True)

    def record(self) -> str:
        """Canonical text record, suitable for hashing and diffing."""
        fs = ",".join(f"({d},{m})" for d, m in self.factors)
        cp = ",".join(str(c) for c in self.char_poly)
        return f"ss=[{fs}];a0={self.a0_dim};a1={self.a1_dim};charpoly=[{cp}]"


def _squared_poly(cp: Poly) -> Poly:
    """q with q(mu^2) = 0 for the skew-eigenvalues: char_poly = prod(t^2 +
    mu_i^2) becomes q(s) = prod(s - mu_i^2)."""
    n = polynomials.degree(cp) // 2
    return polynomials.poly(
        tuple(cp[2 * i] * (-1) ** (n + i) for i in range(n + 1))
    )


def reductive_decompose(l0: LieAlgebra, b0: SymBilinearForm) -> tuple[Subspace, Subspace]:
    """Orthogonal splitting semisimple + abelian of a positive-definite
    metric algebra: the derived subalgebra and the center."""
    if b0.dim != l0.dim:
        raise DimensionMismatch("form does not match algebra")
    if not is_positive_definite(b0):
        raise NotReductive("form is not positive definite")
    from liedual.forms import is_ad_invariant

    if not is_ad_invariant(l0, b0):
        raise NotReductive("form is not ad-invariant")
    ss = derived_subalgebra(l0)
    a = center(l0)
    if ss.dim + a.dim != l0.dim or ss.intersection(a).dim != 0:
        raise NotReductive("derived subalgebra and center do not split the algebra")
    for v in ss.basis:
        for w in a.basis:
            if b0.apply(v, w) != 0:
                raise NotReductive("derived subalgebra and center are not orthogonal")
    return ss, a


def split_kernel(gram: SymBilinearForm, d0: Mat) -> tuple[Subspace, Subspace, Mat]:
    """Split a euclidean abelian block along ker D0: returns (a0, a1, omega)
    with a1 the orthogonal complement of a0 and omega(u, v) = <D0 u, v>
    nondegenerate on a1."""
    m = gram.dim
    d0 = linalg.matrix(d0)
    if not is_skew(gram, d0):
        raise DimensionMismatch("D0 is not skew for the block form")
    a0 = Subspace.span(linalg.nullspace(d0, m), m) if m else Subspace.zero(0)
    if a0.dim == 0:
        a1 = Subspace.full(m) if m else Subspace.zero(0)
    else:
        rows = tuple(linalg.vecmat(v, gram.matrix) for v in a0.basis)
        a1 = Subspace.span(linalg.nullspace(rows, m), m)
    k = a1.dim
    omega = tuple(
        tuple(
            linalg.dot(linalg.matvec(d0, a1.basis[i]), linalg.matvec(gram.matrix, a1.basis[j]))
            for j in range(k)
        )
        for i in range(k)
    )
    if k and linalg.det(omega) == 0:
        raise DegenerateForm("omega is degenerate on the complement of ker D0")
    return a0, a1, omega


def canonical_data(x: DoubleExtension | DoubleExtensionData) -> ClassificationData:
    """Exact class invariants of a positive-definite double extension."""
    data = x.data if isinstance(x, DoubleExtension) else x
    base, b0, d0 = data.base, data.form, data.der
    ss, a = reductive_decompose(base, b0)
    factors: list[tuple[int, Fraction]] = []
    if ss.dim:
        model = data.model
        if model is None:
            raise MissingFactorData(
                "semisimple factors present but no construction metadata"
            )
        model.validate()
        covered = Subspace.span(
            [unit(base.dim, i) for i in range(model.semisimple_dim)], base.dim
        )
        if covered.basis != ss.basis:
            raise NotReductive("model factor blocks do not span the derived subalgebra")
        for f in model.factors:
            sub = model.factor_subspace(f)
            factor_alg, _ = subalgebra_on(base, sub)
            kappa = killing_form(factor_alg)
            expect = linalg.mat_scale(-f.killing_multiple, kappa.matrix)
            if expect != restrict(b0, sub).matrix:
                raise NotReductive("factor form is not the declared killing multiple")
            factors.append((f.dim, f.killing_multiple))
    # abelian block in its own coordinates
    m = a.dim
    acols = linalg.transpose(a.matrix()) if m else ()
    d0a_cols = []
    for i in range(m):
        w = linalg.matvec(d0.matrix, a.basis[i])
        coords = linalg.solve(acols, w)
        if coords is None:
            raise NotReductive("derivation does not preserve the center")
        d0a_cols.append(coords)
    d0a = linalg.transpose(linalg.matrix(d0a_cols)) if m else ()
    gram = restrict(b0, a)
    a0, a1, omega = split_kernel(gram, d0a)
    k = a1.dim
    a1cols = linalg.transpose(a1.matrix()) if k else ()
    d0a1_cols = []
    for i in range(k):
        w = linalg.matvec(d0a, a1.basis[i])
        coords = linalg.solve(a1cols, w)
        if coords is None:
            raise NotReductive("derivation does not preserve the a1 block")
        d0a1_cols.append(coords)
    d0a1 = linalg.transpose(linalg.matrix(d0a1_cols)) if k else ()
    cp = linalg.charpoly(d0a1)
    return ClassificationData(tuple(factors), a0.dim, k, omega, cp)


def nappi_witten(mu) -> DoubleExtension:
    """Double extension of the 2n-dimensional euclidean abelian algebra by
    the block-skew derivation with skew-eigenvalues mu (sorted descending,
    positive); [A_{2j-1}, A_{2j}] = mu_j Z and the form is lorentzian."""
    mus = [frac(x) for x in mu]
    if any(x <= 0 for x in mus):
        raise DimensionMismatch("mu entries must be positive")
    if mus != sorted(mus, reverse=True):
        raise DimensionMismatch("mu must be sorted descending")
    n = len(mus)
    dim = 2 * n
    base = LieAlgebra(dim, tuple(f"A{i + 1}" for i in range(dim)), {})
    w = [[Fraction(0)] * dim for _ in range(dim)]
    for j, m in enumerate(mus):
        w[2 * j][2 * j + 1] = m
        w[2 * j + 1][2 * j] = -m
    d0 = Derivation(dim, linalg.transpose(linalg.matrix(w)))
    data = DoubleExtensionData(base, SymBilinearForm(dim, linalg.eye(dim)), d0)
    return double_extend(data)


def heisenberg(omega) -> LieAlgebra:
    """Central extension of an even abelian algebra by a nondegenerate
    antisymmetric form: [A, B] = omega(A, B) Z with Z central."""
    om = linalg.matrix(omega)
    m = len(om)
    if m % 2 != 0:
        raise DimensionMismatch("omega must have even dimension")
    if om != linalg.mat_neg(linalg.transpose(om)):
        raise DimensionMismatch("omega is not antisymmetric")
    if m and linalg.det(om) == 0:
        raise DegenerateForm("omega is degenerate")
    f: BracketTable = {}
    for i in range(m):
        for j in range(i + 1, m):
            if om[i][j] != 0:
                f[(i, j)] = ((m, om[i][j]),)
    labels = tuple(f"A{i + 1}" for i in range(m)) + ("Z",)
    return LieAlgebra(m + 1, labels, f)


def galilean_extension_algebra(d0) -> tuple[LieAlgebra, GalileanStructure]:
    """Extension of a euclidean abelian algebra by a skew derivation, with
    its canonical galilean structure (tau dual to the new generator, gamma
    the euclidean cometric)."""
    d0 = linalg.matrix(d0)
    m = len(d0)
    gram = SymBilinearForm(m, linalg.eye(m))
    if not is_skew(gram, d0):
        raise DimensionMismatch("D0 must be skew for the euclidean form")
    from liedual.extensions import extend_by_derivation

    base = LieAlgebra(m, tuple(f"A{i + 1}" for i in range(m)), {})
    alg = extend_by_derivation(base, Derivation(m, d0))
    tau = Covector(unit(m + 1, m))
    g = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
    for i in range(m):
        g[i][i] = Fraction(1)
    gs = GalileanStructure(tau, SymBilinearForm(m + 1, tuple(tuple(r) for r in g)))
    if m:
        assert verify_galilean(alg, gs)
    return alg, gs
