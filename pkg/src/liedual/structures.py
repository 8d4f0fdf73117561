"""Bargmannian, carrollian, galilean and leibnizian structures.

Detection scans, exact verification, the reduction of a bargmannian algebra
to its underlying metric algebra with skew derivation, and the canonical
Carroll/Galilei correspondence mediated by double extensions.  Every duality
output carries explicit basis-map witnesses so "up to isomorphism" claims
are checkable by matrix algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from liedual import linalg
from liedual.core import (
    Covector,
    LieAlgebra,
    LinearMap,
    Subspace,
    Vector,
    ad_matrix,
    as_coords,
    bracket,
    bracket_basis,
    center,
    change_basis,
    complement_indices,
    derived_subalgebra,
    quotient_by_ideal,
    subalgebra_on,
    unit,
)
from liedual.derivations import Derivation, is_derivation, is_skew
from liedual.errors import StructureInvalid
from liedual.extensions import (
    Cocycle2,
    DoubleExtension,
    DoubleExtensionData,
    central_extend,
    derivation_from_cocycle,
    double_extend,
    extend_by_derivation,
)
from liedual.forms import (
    FormFamily,
    SymBilinearForm,
    find_invariant_metric,
    invariant_sym_forms,
    is_ad_invariant,
    radical,
    restrict,
    scan_corank_members,
)
from liedual.linalg import Mat, Vec

NULL_SEARCH_BOUND = 6


@dataclass(frozen=True)
class BargmannianStructure:
    """Nondegenerate invariant form together with a central null element."""

    form: SymBilinearForm
    z: Vector


@dataclass(frozen=True)
class CarrollianStructure:
    """Central element spanning the one-dimensional radical of an invariant
    symmetric form."""

    z: Vector
    h: SymBilinearForm


@dataclass(frozen=True)
class GalileanStructure:
    """Invariant covector spanning the radical of an invariant symmetric form
    on the dual (canonical dual-basis coordinates)."""

    tau: Covector
    gamma: SymBilinearForm


@dataclass(frozen=True)
class LeibnizianStructure:
    """Central z, invariant covector psi with psi(z) = 0, and an invariant
    corank-1 form h on ker psi (expressed in the kernel's echelon basis)."""

    z: Vector
    psi: Covector
    h: SymBilinearForm


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def verify_bargmannian(l: LieAlgebra, s: BargmannianStructure) -> bool:
    if len(s.z) != l.dim or s.form.dim != l.dim:
        return False
    if s.z.is_zero():
        return False
    if not center(l).contains(s.z):
        return False
    if not is_ad_invariant(l, s.form):
        return False
    if radical(s.form).dim != 0:
        return False
    return s.form.apply(s.z, s.z) == 0


def verify_carrollian(l: LieAlgebra, s: CarrollianStructure) -> bool:
    if l.dim < 2:
        return False  # the quotient metric would live on a 0-dim space
    if len(s.z) != l.dim or s.h.dim != l.dim:
        return False
    if s.z.is_zero() or not center(l).contains(s.z):
        return False
    if not is_ad_invariant(l, s.h):
        return False
    rad = radical(s.h)
    return rad.dim == 1 and rad.contains(s.z)


def invariant_covectors(l: LieAlgebra) -> Subspace:
    """Covectors annihilating every bracket (the ad-invariant ones)."""
    der = derived_subalgebra(l)
    if der.dim == 0:
        return Subspace.full(l.dim)
    return Subspace.span(linalg.nullspace(der.matrix(), l.dim), l.dim)


def is_coad_invariant(l: LieAlgebra, gamma: SymBilinearForm) -> bool:
    """ad_w gamma + gamma ad_w^T = 0 for all basis w."""
    for w in range(l.dim):
        a = ad_matrix(l, unit(l.dim, w))
        lhs = linalg.mat_add(
            linalg.matmul(a, gamma.matrix),
            linalg.matmul(gamma.matrix, linalg.transpose(a)),
        )
        if not linalg.is_zero_mat(lhs):
            return False
    return True


def verify_galilean(l: LieAlgebra, s: GalileanStructure) -> bool:
    if l.dim < 2:
        return False
    if len(s.tau) != l.dim or s.gamma.dim != l.dim:
        return False
    if s.tau.is_zero():
        return False
    if not invariant_covectors(l).contains(s.tau.coords):
        return False
    if not is_coad_invariant(l, s.gamma):
        return False
    rad = radical(s.gamma)
    return rad.dim == 1 and rad.contains(s.tau.coords)


def kernel_of_covector(psi: Covector) -> Subspace:
    n = len(psi)
    return Subspace.span(linalg.nullspace((psi.coords,), n), n)


def verify_leibnizian(l: LieAlgebra, s: LeibnizianStructure) -> bool:
    n = l.dim
    if len(s.z) != n or len(s.psi) != n:
        return False
    if s.z.is_zero() or s.psi.is_zero():
        return False
    if s.psi(s.z) != 0:
        return False
    if not center(l).contains(s.z):
        return False
    if not invariant_covectors(l).contains(s.psi.coords):
        return False
    ker = kernel_of_covector(s.psi)
    if s.h.dim != ker.dim:
        return False
    cols = linalg.transpose(ker.matrix())
    z_k = linalg.solve(cols, s.z.coords)
    if z_k is None:
        return False
    # invariance of h under the full algebra acting on ker psi
    for w in range(n):
        ew = unit(n, w)
        for a in range(ker.dim):
            wa = bracket(l, ew, ker.basis[a]).coords
            wa_k = linalg.solve(cols, wa)
            if wa_k is None:
                return False
            for b in range(a, ker.dim):
                wb = bracket(l, ew, ker.basis[b]).coords
                wb_k = linalg.solve(cols, wb)
                if wb_k is None:
                    return False
                val = s.h.apply(wa_k, unit(ker.dim, b)) + s.h.apply(unit(ker.dim, a), wb_k)
                if val != 0:
                    return False
    rad = radical(s.h)
    return rad.dim == 1 and rad.contains(z_k)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise StructureInvalid(msg)


# ---------------------------------------------------------------------------
# detection
# ---------------------------------------------------------------------------


def _primitive_line(v: Vec) -> Vec:
    """Canonical generator of the line through v: first nonzero entry 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return v
    return tuple(x / lead for x in v)


def _null_center_lines(g: SymBilinearForm) -> list[Vec]:
    """Null lines of a form on the center, in center coordinates.

    The radical contributes whole null subspaces; isotropic non-radical lines
    are found by a bounded deterministic integer search.  Every returned line
    is exactly null; the search is complete only up to the coordinate bound.
    """
    k = g.dim
    lines: dict[Vec, None] = {}
    for v in radical(g).basis:
        lines.setdefault(_primitive_line(v), None)
    if k <= 4:
        rng = range(-NULL_SEARCH_BOUND, NULL_SEARCH_BOUND + 1)
        for cand in product(rng, repeat=k):
            lead = next((x for x in cand if x != 0), None)
            if lead is None or lead < 0:
                continue
            vv = linalg.vector(cand)
            if g.apply(vv, vv) == 0:
                lines.setdefault(_primitive_line(vv), None)
    return list(lines)


def find_bargmannian(l: LieAlgebra) -> list[BargmannianStructure]:
    """One structure per null central line of the scan's invariant metric."""
    b = find_invariant_metric(l)
    if b is None:
        return []
    zc = center(l)
    if zc.dim == 0:
        return []
    g = restrict(b, zc)
    out = []
    for line in _null_center_lines(g):
        z = linalg.vecmat(line, zc.matrix())
        s = BargmannianStructure(b, Vector(z))
        if verify_bargmannian(l, s):
            out.append(s)
    return out


def find_carrollian(l: LieAlgebra) -> list[CarrollianStructure]:
    """Corank-1 invariant forms whose radical is a central line, one witness
    per radical line found on the deterministic scan set."""
    if l.dim < 2:
        return []
    zc = center(l)
    if zc.dim == 0:
        return []
    fam = invariant_sym_forms(l)
    out = []
    for _pt, member in scan_corank_members(fam, corank=1):
        rad = radical(member)
        gen = rad.basis[0]
        if not zc.contains(gen):
            continue
        s = CarrollianStructure(Vector(gen), member)
        if verify_carrollian(l, s):
            out.append(s)
    return out


def invariant_dual_forms(l: LieAlgebra) -> FormFamily:
    """Basis of invariant symmetric forms on the dual (coadjoint action)."""
    n = l.dim
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: t for t, p in enumerate(pairs)}
    rows = []
    for w in range(n):
        a = ad_matrix(l, unit(n, w))
        for p, q in pairs:
            row = [Fraction(0)] * len(pairs)
            for r in range(n):
                if a[p][r] != 0:
                    row[pos[(min(r, q), max(r, q))]] += a[p][r]
                if a[q][r] != 0:
                    row[pos[(min(p, r), max(p, r))]] += a[q][r]
            if any(x != 0 for x in row):
                rows.append(tuple(row))
    if not rows:
        sols = [linalg.vector(v) for v in linalg.eye(len(pairs))]
    else:
        sols = linalg.nullspace(tuple(rows), len(pairs))
    mats = []
    for s in sols:
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in zip(pairs, s):
            m[i][j] = c
            m[j][i] = c
        mats.append(SymBilinearForm(n, tuple(tuple(r) for r in m)))
    fam = FormFamily(n, tuple(mats))
    assert all(is_coad_invariant(l, b) for b in fam.basis)
    return fam


def find_galilean(l: LieAlgebra) -> list[GalileanStructure]:
    """Corank-1 invariant dual forms whose radical is an invariant covector
    line, one witness per radical line on the deterministic scan set."""
    if l.dim < 2:
        return []
    taus = invariant_covectors(l)
    if taus.dim == 0:
        return []
    fam = invariant_dual_forms(l)
    out = []
    for _pt, member in scan_corank_members(fam, corank=1):
        rad = radical(member)
        gen = rad.basis[0]
        if not taus.contains(gen):
            continue
        s = GalileanStructure(Covector(gen), member)
        if verify_galilean(l, s):
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# bargmannian reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BargmannianReduction:
    """(g0, <,>_0, D0) recovered from a bargmannian algebra, plus the chosen
    split element d and the basis map identifying double_extend(data) with
    the input algebra (columns: section vectors, z, d)."""

    data: DoubleExtensionData
    d: Vector
    section: Mat  # rows: ambient coordinates of the g0 basis
    witness: LinearMap


def reduce_bargmannian(l: LieAlgebra, s: BargmannianStructure) -> BargmannianReduction:
    _require(verify_bargmannian(l, s), "not a verified bargmannian structure")
    n = l.dim
    b = s.form
    z = s.z.coords
    zline = Subspace.span([z], n)
    zperp = Subspace.span(linalg.nullspace((linalg.vecmat(z, b.matrix),), n), n)
    comp = complement_indices(zperp)
    _require(len(comp) == 1, "perp of the central null line is not a hyperplane")
    c = comp[0]
    pairing = b.apply(unit(n, c), z)
    d = linalg.vec_scale(1 / pairing, unit(n, c))
    # normalize <d, d> = 0 by the automorphism d -> d - (1/2)<d,d> z
    dd = b.apply(d, d)
    if dd != 0:
        d = linalg.vec_sub(d, linalg.vec_scale(dd / 2, z))
    assert b.apply(d, d) == 0 and b.apply(d, z) == 1
    # section: vectors orthogonal to both z and d; complements the z-line
    # inside z-perp, and makes the reconstruction exact.
    rows = (linalg.vecmat(z, b.matrix), linalg.vecmat(d, b.matrix))
    section = Subspace.span(linalg.nullspace(rows, n), n)
    _require(section.dim == n - 2, "adapted section has wrong dimension")
    k = section.dim
    sec = section.matrix()
    cols = linalg.transpose(sec + (z, d))
    inv = linalg.inverse(cols)
    _require(inv is not None, "section + z + d is not a basis")
    base_f = {}
    alpha = [[Fraction(0)] * k for _ in range(k)]
    for a in range(k):
        for bb in range(a + 1, k):
            w = bracket(l, sec[a], sec[bb]).coords
            coords = linalg.matvec(inv, w)
            _require(coords[k + 1] == 0, "bracket of section vectors leaves z-perp")
            terms = tuple((t, coords[t]) for t in range(k) if coords[t] != 0)
            if terms:
                base_f[(a, bb)] = terms
            alpha[a][bb] = coords[k]
            alpha[bb][a] = -coords[k]
    base = LieAlgebra(k, tuple(f"u{t}" for t in range(k)), base_f)
    b0 = restrict(b, section)
    d0_cols = []
    for a in range(k):
        w = bracket(l, d, sec[a]).coords
        coords = linalg.matvec(inv, w)
        _require(
            coords[k] == 0 and coords[k + 1] == 0,
            "[d, section] leaves the adapted section",
        )
        d0_cols.append(coords[:k])
    d0 = Derivation(k, linalg.transpose(linalg.matrix(d0_cols)))
    assert is_derivation(base, d0.matrix) and is_skew(b0, d0.matrix)
    # the z-components of the section brackets are exactly <D0 -, ->_0
    assert all(
        alpha[a][bb] == b0.apply(linalg.matvec(d0.matrix, unit(k, a)), unit(k, bb))
        for a in range(k)
        for bb in range(k)
    )
    data = DoubleExtensionData(base, b0, d0)
    ext = double_extend(data)
    witness = LinearMap(n, n, cols)
    rebuilt = change_basis(l, cols, labels=ext.algebra.basis_labels)
    _require(rebuilt.f == ext.algebra.f, "double extension does not rebuild the algebra")
    pulled = linalg.matmul(linalg.matmul(linalg.transpose(cols), b.matrix), cols)
    _require(pulled == ext.form.matrix, "form does not pull back to the extension form")
    return BargmannianReduction(data, Vector(d), sec, witness)


# ---------------------------------------------------------------------------
# the canonical correspondence
# ---------------------------------------------------------------------------


def carroll_ideal(e: DoubleExtension) -> tuple[LieAlgebra, CarrollianStructure]:
    """The ideal Z-perp of a double extension with the restricted form."""
    n = e.data.base.dim
    amb = e.algebra.dim
    sub = Subspace.span([unit(amb, i) for i in range(n + 1)], amb)
    algebra, _embed = subalgebra_on(e.algebra, sub)
    h = restrict(e.form, sub)
    s = CarrollianStructure(Vector(unit(n + 1, n)), h)
    _require(verify_carrollian(algebra, s), "carroll ideal failed verification")
    return algebra, s


def galilei_quotient(e: DoubleExtension) -> tuple[LieAlgebra, GalileanStructure]:
    """The quotient by the central line R Z with its galilean structure."""
    amb = e.algebra.dim
    n = e.data.base.dim
    zline = Subspace.span([unit(amb, e.z_index)], amb)
    quot, _proj = quotient_by_ideal(e.algebra, zline)
    tau = Covector(unit(n + 1, n))
    b0inv = linalg.inverse(e.data.form.matrix)
    assert b0inv is not None
    m = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            m[i][j] = b0inv[i][j]
    gamma = SymBilinearForm(n + 1, tuple(tuple(r) for r in m))
    s = GalileanStructure(tau, gamma)
    _require(verify_galilean(quot, s), "galilei quotient failed verification")
    return quot, s


def _carrollian_data(
    l: LieAlgebra, z: Vec, h: SymBilinearForm
) -> tuple[LieAlgebra, SymBilinearForm, Cocycle2, Mat, LinearMap]:
    """Quotient a carrollian algebra by its central line: returns the metric
    base, the induced form, the extension cocycle, the witness columns
    (section vectors then the normalized z) and the projection map."""
    n = l.dim
    zline = Subspace.span([z], n)
    zhat = zline.basis[0]
    quot, proj = quotient_by_ideal(l, zline)
    comp = complement_indices(zline)
    k = len(comp)
    sec = tuple(unit(n, c) for c in comp)
    b0 = SymBilinearForm(k, tuple(tuple(h.apply(sec[a], sec[bb]) for bb in range(k)) for a in range(k)))
    p = zline.pivots()[0]
    alpha = [[Fraction(0)] * k for _ in range(k)]
    for a in range(k):
        for bb in range(a + 1, k):
            w = bracket(l, sec[a], sec[bb]).coords
            alpha[a][bb] = w[p]
            alpha[bb][a] = -w[p]
    cols = linalg.transpose(sec + (zhat,))
    return quot, b0, Cocycle2(k, tuple(tuple(r) for r in alpha)), cols, proj


@dataclass(frozen=True)
class DualityResult:
    """One direction of the Carroll/Galilei correspondence.

    data/extension: the mediating metric datum and its double extension.
    algebra/structure: the dual algebra produced.
    witness: basis map from the matching side of the extension back onto the
    input algebra (carroll_ideal side for carroll inputs, galilei_quotient
    side for galilean inputs): columns are input-algebra coordinates.
    """

    data: DoubleExtensionData
    extension: DoubleExtension
    algebra: LieAlgebra
    structure: CarrollianStructure | GalileanStructure
    witness: LinearMap


def carroll_to_galilei(l: LieAlgebra, s: CarrollianStructure) -> DualityResult:
    """Galilean dual of a carrollian algebra: quotient of the mediating
    double extension by the central line."""
    _require(verify_carrollian(l, s), "not a verified carrollian structure")
    quot, b0, alpha, cols, _proj = _carrollian_data(l, s.z.coords, s.h)
    d0 = derivation_from_cocycle(quot, b0, alpha)
    data = DoubleExtensionData(quot, b0, d0)
    ext = double_extend(data)
    gal_alg, gal_s = galilei_quotient(ext)
    # witness: carroll_ideal(ext) == input through these columns
    car_alg, _car_s = carroll_ideal(ext)
    rebuilt = change_basis(l, cols, labels=car_alg.basis_labels)
    _require(rebuilt.f == car_alg.f, "carroll ideal does not rebuild the input")
    witness = LinearMap(l.dim, l.dim, cols)
    return DualityResult(data, ext, gal_alg, gal_s, witness)


def galilei_to_carroll(l: LieAlgebra, s: GalileanStructure) -> DualityResult:
    """Carrollian dual of a galilean algebra: the ideal Z-perp of the
    mediating double extension."""
    _require(verify_galilean(l, s), "not a verified galilean structure")
    n = l.dim
    ker = kernel_of_covector(s.tau)
    comp = complement_indices(ker)
    _require(len(comp) == 1, "tau kernel is not a hyperplane")
    c = comp[0]
    d = linalg.vec_scale(1 / linalg.dot(s.tau.coords, unit(n, c)), unit(n, c))
    base, _embed = subalgebra_on(l, ker)
    k = ker.dim
    cols = linalg.transpose(ker.matrix() + (d,))
    inv = linalg.inverse(cols)
    _require(inv is not None, "ker tau + d is not a basis")
    # gamma_0 on the dual of ker tau via the lifts vanishing on d
    kappa = tuple(inv[a] for a in range(k))
    m0 = tuple(
        tuple(linalg.dot(kappa[a], linalg.matvec(s.gamma.matrix, kappa[bb])) for bb in range(k))
        for a in range(k)
    )
    b0m = linalg.inverse(m0)
    _require(b0m is not None, "induced dual form is degenerate")
    b0 = SymBilinearForm(k, b0m)
    d0_cols = []
    for a in range(k):
        w = bracket(l, d, ker.basis[a]).coords
        coords = linalg.matvec(inv, w)
        _require(coords[k] == 0, "[d, ker tau] leaves ker tau")
        d0_cols.append(coords[:k])
    d0 = Derivation(k, linalg.transpose(linalg.matrix(d0_cols)))
    data = DoubleExtensionData(base, b0, d0)
    ext = double_extend(data)
    car_alg, car_s = carroll_ideal(ext)
    gal_alg, gal_s = galilei_quotient(ext)
    rebuilt = change_basis(l, cols, labels=gal_alg.basis_labels)
    _require(rebuilt.f == gal_alg.f, "galilei quotient does not rebuild the input")
    # gamma transforms contravariantly through the witness
    pushed = linalg.matmul(linalg.matmul(cols, gal_s.gamma.matrix), linalg.transpose(cols))
    _require(pushed == s.gamma.matrix, "gamma does not push forward to the input")
    witness = LinearMap(n, n, cols)
    return DualityResult(data, ext, car_alg, car_s, witness)


# ---------------------------------------------------------------------------
# leibnizian decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LeibnizDecomposition:
    """ker psi as a carrollian algebra, the metric base g0 = ker psi / R z,
    the quotient by R z as a galilean algebra, and the two derivations of g0
    at play: d0 from the central-extension cocycle and dbar0 induced by the
    action of a split element with psi = 1 on it.

    When d0 and dbar0 agree the input is a double extension on the nose and
    `bargmannian` carries a certificate; independently, `bargmannian` is
    filled from the exact invariant-metric scan whenever one exists."""

    carroll_algebra: LieAlgebra
    carroll_structure: CarrollianStructure
    kernel_map: LinearMap  # ker-psi coordinates -> ambient
    metric: DoubleExtensionData
    galilean_algebra: LieAlgebra
    galilean_structure: GalileanStructure
    d0: Derivation
    dbar0: Derivation
    d0_char: tuple[Fraction, ...]
    dbar0_char: tuple[Fraction, ...]
    same_orbit_data: bool
    bargmannian: BargmannianStructure | None


def leibniz_decompose(l: LieAlgebra, s: LeibnizianStructure) -> LeibnizDecomposition:
    _require(verify_leibnizian(l, s), "not a verified leibnizian structure")
    n = l.dim
    ker = kernel_of_covector(s.psi)
    ker_alg, embed = subalgebra_on(l, ker)
    kcols = linalg.transpose(ker.matrix())
    z_k = linalg.solve(kcols, s.z.coords)
    _require(z_k is not None, "z does not lie in ker psi")
    car_s = CarrollianStructure(Vector(z_k), s.h)
    _require(verify_carrollian(ker_alg, car_s), "ker psi is not carrollian")
    quot, b0, alpha, _cols, proj = _carrollian_data(ker_alg, z_k, s.h)
    d0 = derivation_from_cocycle(quot, b0, alpha)
    metric = DoubleExtensionData(quot, b0, d0)
    # split element with psi(d) = 1, from the kernel's echelon complement
    comp = complement_indices(ker)
    _require(len(comp) == 1, "psi kernel is not a hyperplane")
    c = comp[0]
    d = linalg.vec_scale(1 / linalg.dot(s.psi.coords, unit(n, c)), unit(n, c))
    # dbar0: the action of d on ker psi, pushed down to g0 = ker psi / R z
    kq = quot.dim
    sec_k = _carrollian_section(ker_alg, z_k)
    dbar_cols = []
    for a in range(kq):
        # lift the a-th g0 basis vector into ker psi, then into the ambient
        amb = linalg.matvec(kcols, sec_k[a])
        w = bracket(l, d, amb).coords
        w_k = linalg.solve(kcols, w)
        _require(w_k is not None, "[d, ker psi] leaves ker psi")
        dbar_cols.append(proj(w_k).coords)
    dbar0 = Derivation(kq, linalg.transpose(linalg.matrix(dbar_cols)))
    _require(
        is_derivation(quot, dbar0.matrix) and is_skew(b0, dbar0.matrix),
        "induced dbar0 is not a skew derivation",
    )
    # galilean quotient of the full algebra by R z
    zline = Subspace.span([s.z.coords], n)
    gbar, gproj = quotient_by_ideal(l, zline)
    gcomp = complement_indices(zline)
    tau_bar = Covector(tuple(s.psi.coords[c] for c in gcomp))
    b0inv = linalg.inverse(b0.matrix)
    assert b0inv is not None
    emb_rows = []
    for a in range(kq):
        amb = linalg.matvec(kcols, sec_k[a])
        emb_rows.append(gproj(amb).coords)
    j = linalg.transpose(linalg.matrix(emb_rows))  # gbar-dim x kq
    gamma = linalg.matmul(linalg.matmul(j, b0inv), linalg.transpose(j))
    gal_s = GalileanStructure(tau_bar, SymBilinearForm(gbar.dim, gamma))
    _require(verify_galilean(gbar, gal_s), "quotient by z is not galilean")
    d0_char = linalg.charpoly(d0.matrix)
    dbar0_char = linalg.charpoly(dbar0.matrix)
    certificate = None
    found = find_bargmannian(l)
    if found:
        certificate = found[0]
    return LeibnizDecomposition(
        carroll_algebra=ker_alg,
        carroll_structure=car_s,
        kernel_map=LinearMap(ker.dim, n, kcols),
        metric=metric,
        galilean_algebra=gbar,
        galilean_structure=gal_s,
        d0=d0,
        dbar0=dbar0,
        d0_char=d0_char,
        dbar0_char=dbar0_char,
        same_orbit_data=d0_char == dbar0_char,
        bargmannian=certificate,
    )


def _carrollian_section(l: LieAlgebra, z: Vec) -> tuple[Vec, ...]:
    """Standard complement basis of the z-line, as vectors of l."""
    zline = Subspace.span([z], l.dim)
    comp = complement_indices(zline)
    return tuple(unit(l.dim, c) for c in comp)
