"""Constructors for the named algebras: kinematical families, su2, abelian
and reductive building blocks, the six-dimensional leibnizian counterexample,
and the fully indexed double extension.

Kinematical basis order is fixed as (L_ab lexicographic, B_a, P_a, H[, M]) so
index maps stay stable across the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from liedual import linalg
from liedual.core import BracketTable, Covector, LieAlgebra, Vector, direct_sum, unit
from liedual.derivations import Derivation, ReductiveModel, SimpleFactor
from liedual.errors import DimensionMismatch, InvalidData
from liedual.extensions import (
    Cocycle2,
    DoubleExtension,
    DoubleExtensionData,
    derivation_from_cocycle,
    double_extend,
)
from liedual.forms import SymBilinearForm
from liedual.linalg import Mat, frac
from liedual.structures import LeibnizianStructure
from liedual.classification import heisenberg, nappi_witten  # noqa: F401  (catalog surface)

FAMILIES = ("static", "s0", "carroll", "galilei", "bargmann", "g_alpha_beta", "b_alpha_beta")


@dataclass(frozen=True)
class KinematicalSpec:
    n: int
    family: str
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch("spatial dimension must be >= 1")
        if self.family not in FAMILIES:
            raise DimensionMismatch(f"unknown family {self.family!r}")
        object.__setattr__(self, "alpha", frac(self.alpha))
        object.__setattr__(self, "beta", frac(self.beta))


class _KinematicalIndex:
    """Index bookkeeping for the (L_ab, B_a, P_a, H, M) basis."""

    def __init__(self, n: int, with_h: bool, with_m: bool):
        self.n = n
        self.pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        self.nl = len(self.pairs)
        self.ipair = {p: i for i, p in enumerate(self.pairs)}
        self.with_h = with_h
        self.with_m = with_m
        self.dim = self.nl + 2 * n + int(with_h) + int(with_m)

    def L(self, a: int, b: int) -> tuple[int, int]:
        """(index, sign) with L_ba = -L_ab."""
        if a < b:
            return self.ipair[(a, b)], 1
        return self.ipair[(b, a)], -1

    def B(self, a: int) -> int:
        return self.nl + a - 1

    def P(self, a: int) -> int:
        return self.nl + self.n + a - 1

    @property
    def H(self) -> int:
        return self.nl + 2 * self.n

    @property
    def M(self) -> int:
        return self.H + 1

    def labels(self) -> tuple[str, ...]:
        out = [f"L{a}{b}" for a, b in self.pairs]
        out += [f"B{a}" for a in range(1, self.n + 1)]
        out += [f"P{a}" for a in range(1, self.n + 1)]
        if self.with_h:
            out.append("H")
        if self.with_m:
            out.append("M")
        return tuple(out)


def _add_term(f: BracketTable, i: int, j: int, k: int, c: Fraction) -> None:
    if c == 0 or i == j:
        return
    if i > j:
        i, j, c = j, i, -c
    f[(i, j)] = f.get((i, j), ()) + ((k, c),)


def _rotation_brackets(ix: _KinematicalIndex, f: BracketTable) -> None:
    n = ix.n
    # [L_ab, L_cd] = d_bc L_ad - d_ac L_bd - d_bd L_ac + d_ad L_bc
    for a, b in ix.pairs:
        for c, d in ix.pairs:
            i, _ = ix.L(a, b)
            j, _ = ix.L(c, d)
            if i >= j:
                continue
            for x, y, s in (
                (a, d, 1 if b == c else 0),
                (b, d, -1 if a == c else 0),
                (a, c, -1 if b == d else 0),
                (b, c, 1 if a == d else 0),
            ):
                if s and x != y:
                    k, sgn = ix.L(x, y)
                    _add_term(f, i, j, k, Fraction(s * sgn))
    # [L_ab, V_c] = d_bc V_a - d_ac V_b for V in {B, P}
    for a, b in ix.pairs:
        i, _ = ix.L(a, b)
        for vec in (ix.B, ix.P):
            for c in range(1, n + 1):
                if c == b:
                    _add_term(f, i, vec(c), vec(a), Fraction(1))
                if c == a:
                    _add_term(f, i, vec(c), vec(b), Fraction(-1))


def kinematical(spec: KinematicalSpec) -> LieAlgebra:
    """A kinematical Lie algebra: so(n) rotations acting on two vectors of
    generators, plus the family-specific brackets."""
    n = spec.n
    fam = spec.family
    with_h = fam != "s0"
    with_m = fam in ("bargmann", "b_alpha_beta")
    ix = _KinematicalIndex(n, with_h, with_m)
    f: BracketTable = {}
    _rotation_brackets(ix, f)
    if fam == "carroll":
        for a in range(1, n + 1):
            _add_term(f, ix.B(a), ix.P(a), ix.H, Fraction(1))
    if fam in ("galilei", "bargmann", "g_alpha_beta", "b_alpha_beta"):
        for a in range(1, n + 1):
            # [H, B_a] = -P_a
            _add_term(f, ix.H, ix.B(a), ix.P(a), Fraction(-1))
    if fam in ("g_alpha_beta", "b_alpha_beta"):
        for a in range(1, n + 1):
            # [H, P_a] = alpha B_a + beta P_a
            _add_term(f, ix.H, ix.P(a), ix.B(a), spec.alpha)
            _add_term(f, ix.H, ix.P(a), ix.P(a), spec.beta)
    if fam in ("bargmann", "b_alpha_beta"):
        for a in range(1, n + 1):
            _add_term(f, ix.B(a), ix.P(a), ix.M, Fraction(1))
    if fam == "b_alpha_beta":
        # [H, M] = beta M
        _add_term(f, ix.H, ix.M, ix.M, spec.beta)
    return LieAlgebra(ix.dim, ix.labels(), f)


def static_algebra(n: int) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "static"))


def s0_algebra(n: int) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "s0"))


def carroll_algebra(n: int) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "carroll"))


def galilei_algebra(n: int) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "galilei"))


def bargmann_algebra(n: int) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "bargmann"))


def g_alpha_beta(n: int, alpha, beta) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "g_alpha_beta", frac(alpha), frac(beta)))


def b_alpha_beta(n: int, alpha, beta) -> LieAlgebra:
    return kinematical(KinematicalSpec(n, "b_alpha_beta", frac(alpha), frac(beta)))


def kinematical_index(n: int, family: str) -> _KinematicalIndex:
    return _KinematicalIndex(
        n, family != "s0", family in ("bargmann", "b_alpha_beta")
    )


def abelian(m: int, prefix: str = "e") -> LieAlgebra:
    return LieAlgebra(m, tuple(f"{prefix}{i + 1}" for i in range(m)), {})


def su2() -> LieAlgebra:
    """Compact real form: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2."""
    one = Fraction(1)
    return LieAlgebra(
        3,
        ("e1", "e2", "e3"),
        {(0, 1): ((2, one),), (1, 2): ((0, one),), (0, 2): ((1, -one),)},
    )


def compact_reductive(multiples, abelian_dim: int) -> ReductiveModel:
    """su2 factors carrying -multiple * killing (positive definite for
    multiple > 0) plus a euclidean abelian block; the standard base datum for
    positive-definite double extensions."""
    multiples = [frac(m) for m in multiples]
    if any(m <= 0 for m in multiples):
        raise InvalidData("killing multiples must be positive")
    alg = LieAlgebra(0, (), {})
    factors = []
    start = 0
    for t, m in enumerate(multiples):
        alg = direct_sum(alg, su2()) if alg.dim else su2()
        factors.append(SimpleFactor(f"su2_{t}", start, 3, m))
        start += 3
    if abelian_dim:
        block = abelian(abelian_dim, prefix="a")
        alg = direct_sum(alg, block) if alg.dim else block
    n = alg.dim
    g = [[Fraction(0)] * n for _ in range(n)]
    for t, m in enumerate(multiples):
        for i in range(3):
            g[3 * t + i][3 * t + i] = 2 * m  # -m * killing(su2) = 2m * identity
    for i in range(abelian_dim):
        g[start + i][start + i] = Fraction(1)
    model = ReductiveModel(
        alg, SymBilinearForm(n, tuple(tuple(r) for r in g)), tuple(factors), start, abelian_dim
    )
    model.validate()
    return model


def leibniz_counterexample(alpha, beta, gamma) -> tuple[LieAlgebra, LeibnizianStructure]:
    """Six-dimensional leibnizian algebra on (e1..e4, e+, e-):

        [e1,e2] = e+        [e3,e4] = alpha e+
        [e1,e-] = beta e2   [e2,e-] = -beta e1
        [e3,e-] = gamma e4  [e4,e-] = -gamma e3

    bundled with the structure z = e+, psi the covector dual to e-, and h the
    euclidean form on ker psi (radical spanned by e+).  Bargmannian exactly
    when alpha*beta*gamma != 0."""
    a, b, g = frac(alpha), frac(beta), frac(gamma)
    f: BracketTable = {}
    one = Fraction(1)
    _add_term(f, 0, 1, 4, one)
    _add_term(f, 2, 3, 4, a)
    _add_term(f, 0, 5, 1, b)
    _add_term(f, 1, 5, 0, -b)
    _add_term(f, 2, 5, 3, g)
    _add_term(f, 3, 5, 2, -g)
    alg = LieAlgebra(6, ("e1", "e2", "e3", "e4", "e+", "e-"), f)
    h = [[Fraction(0)] * 5 for _ in range(5)]
    for i in range(4):
        h[i][i] = one
    structure = LeibnizianStructure(
        z=Vector(unit(6, 4)),
        psi=Covector(unit(6, 5)),
        h=SymBilinearForm(5, tuple(tuple(r) for r in h)),
    )
    return alg, structure


def indexed_double_extension(f, eta: SymBilinearForm, omega) -> DoubleExtension:
    """Double extension from fully indexed data: structure constants f_ab^c,
    invariant metric eta_ab, and the antisymmetric omega_ab defining both the
    cocycle term [X_a, X_b] += omega_ab X_+ and the action of X_-.

    Preconditions are validated index-wise: f_abc must be totally
    antisymmetric and omega must satisfy the derivation compatibility
    identity; violations are reported with the offending index triple."""
    base = LieAlgebra(eta.dim, tuple(f"X{i + 1}" for i in range(eta.dim)), dict(f))
    n = base.dim
    om = linalg.matrix(omega)
    if len(om) != n or om != linalg.mat_neg(linalg.transpose(om)):
        raise InvalidData("omega is not an antisymmetric n x n matrix")
    inv_eta = linalg.inverse(eta.matrix)
    if inv_eta is None:
        raise InvalidData("eta is degenerate")
    from liedual.core import bracket_basis

    # f_abc := f_ab^d eta_dc totally antisymmetric <=> eta is ad-invariant
    for a_ in range(n):
        for b_ in range(a_ + 1, n):
            fab = bracket_basis(base, a_, b_)
            for c_ in range(n):
                fac = bracket_basis(base, a_, c_)
                labc = linalg.dot(fab, tuple(eta.matrix[d][c_] for d in range(n)))
                lacb = linalg.dot(fac, tuple(eta.matrix[d][b_] for d in range(n)))
                if labc + lacb != 0:
                    raise InvalidData(
                        f"f_abc is not totally antisymmetric at triple ({a_},{b_},{c_})"
                    )
    # derivation compatibility of omega with the structure constants
    m = linalg.matmul(inv_eta, om)  # omega with the first index raised
    for a_ in range(n):
        for b_ in range(a_ + 1, n):
            fab = bracket_basis(base, a_, b_)
            lhs = linalg.matvec(m, fab)
            rhs = [Fraction(0)] * n
            for c_ in range(n):
                if m[c_][a_] != 0:
                    for d_, cd in enumerate(bracket_basis(base, c_, b_)):
                        if cd != 0:
                            rhs[d_] += m[c_][a_] * cd
                if m[c_][b_] != 0:
                    for d_, cd in enumerate(bracket_basis(base, a_, c_)):
                        if cd != 0:
                            rhs[d_] += m[c_][b_] * cd
            if tuple(lhs) != tuple(rhs):
                bad = next(d_ for d_ in range(n) if lhs[d_] != rhs[d_])
                raise InvalidData(
                    f"omega fails the derivation identity at (a,b,d) = ({a_},{b_},{bad})"
                )
    d0 = derivation_from_cocycle(base, eta, Cocycle2(n, om))
    data = DoubleExtensionData(base, eta, d0)
    ext = double_extend(data)
    # definitional agreement: the extension's cocycle term is exactly omega
    from liedual.extensions import cocycle_from_derivation

    assert cocycle_from_derivation(eta, d0).matrix == om
    return ext
