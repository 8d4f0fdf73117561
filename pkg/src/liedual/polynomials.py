"""Exact univariate polynomials over the rationals.

A polynomial is a tuple of Fractions in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple.  Provides the Sturm-sequence
root counting and the rational root extraction used by the classification
invariants.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

ZERO = Fraction(0)
ONE = Fraction(1)

Poly = tuple[Fraction, ...]


def poly(coeffs) -> Poly:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def is_zero(p: Poly) -> bool:
    return not p


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def scale(c: Fraction, p: Poly) -> Poly:
    if c == 0:
        return ()
    return tuple(c * x for x in p)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    qd = len(q) - 1
    qc = q[-1]
    quo = [ZERO] * max(len(p) - qd, 0)
    while len(r) - 1 >= qd and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < qd:
            break
        k = len(r) - 1 - qd
        f = r[-1] / qc
        quo[k] = f
        for i in range(len(q)):
            r[k + i] -= f * q[i]
        r.pop()
    return poly(quo), poly(r)


def monic(p: Poly) -> Poly:
    if not p:
        return ()
    return tuple(c / p[-1] for c in p)


def gcd_poly(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p: Poly) -> Poly:
    return poly(i * p[i] for i in range(1, len(p)))


def squarefree_part(p: Poly) -> Poly:
    if degree(p) <= 0:
        return monic(p)
    g = gcd_poly(p, derivative(p))
    if degree(g) <= 0:
        return monic(p)
    return monic(divmod_poly(p, g)[0])


def squarefree_decomposition(p: Poly) -> list[tuple[int, Poly]]:
    """Yun's algorithm: p = lc * prod q_i^i with the q_i squarefree, coprime.

    Returns [(i, q_i)] for the q_i of positive degree.
    """
    if degree(p) <= 0:
        return []
    p = monic(p)
    dp = derivative(p)
    a = gcd_poly(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    out = []
    i = 1
    while degree(b) > 0:
        q = gcd_poly(b, d)
        if degree(q) > 0:
            out.append((i, q))
        b2 = divmod_poly(b, q)[0]
        c2 = divmod_poly(d, q)[0]
        d = sub(c2, derivative(b2))
        b = b2
        i += 1
    return out


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while degree(chain[-1]) > 0:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(neg(rem))
    return [c for c in chain if c]


def _variations(signs) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def variations_at(chain, x: Fraction) -> int:
    return _variations(_sign(evaluate(c, x)) for c in chain)


def variations_at_pos_inf(chain) -> int:
    return _variations(_sign(c[-1]) for c in chain)


def count_real_roots_in(p: Poly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of p in (a, b]; p must be nonzero."""
    sf = squarefree_part(p)
    if degree(sf) <= 0:
        return 0
    chain = sturm_chain(sf)
    n = variations_at(chain, a) - variations_at(chain, b)
    return n


def count_positive_roots(p: Poly) -> int:
    """Number of distinct real roots of p in (0, +inf)."""
    sf = squarefree_part(p)
    if degree(sf) <= 0:
        return 0
    chain = sturm_chain(sf)
    return variations_at(chain, ZERO) - variations_at_pos_inf(chain)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: all real roots lie in [-B, B]."""
    lead = p[-1]
    m = max((abs(c / lead) for c in p[:-1]), default=ZERO)
    return ONE + m


def all_roots_positive_real(p: Poly) -> bool:
    """Certify (via Sturm counts and the gcd tower) that every complex root
    of p is real and positive, with multiplicity."""
    if degree(p) < 0:
        return False
    if degree(p) == 0:
        return True
    if evaluate(p, ZERO) == 0:
        return False
    sf = squarefree_part(p)
    if count_positive_roots(sf) != degree(sf):
        return False
    g = gcd_poly(p, derivative(p))
    if degree(g) == 0:
        return True
    return all_roots_positive_real(g)


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots of p with multiplicities, sorted ascending."""
    if degree(p) <= 0:
        return []
    den = lcm(*(c.denominator for c in p))
    ic = [int(c * den) for c in p]
    k = 0
    while ic[k] == 0:
        k += 1
    shifted = ic[k:]
    roots: list[tuple[Fraction, int]] = []
    if k > 0:
        roots.append((ZERO, k))
    a0, an = abs(shifted[0]), abs(shifted[-1])
    cands = set()
    for pnum in _divisors(a0):
        for qden in _divisors(an):
            if gcd(pnum, qden) == 1:
                cands.add(Fraction(pnum, qden))
                cands.add(Fraction(-pnum, qden))
    rem = poly(shifted)
    for r in sorted(cands):
        mult = 0
        while rem and evaluate(rem, r) == 0:
            rem = divmod_poly(rem, (-r, ONE))[0]
            mult += 1
        if mult:
            roots.append((r, mult))
    roots.sort()
    return roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def isolate_positive_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each containing exactly one distinct
    positive real root of p, ordered ascending."""
    sf = squarefree_part(p)
    if degree(sf) <= 0:
        return []
    chain = sturm_chain(sf)
    hi = root_bound(sf)
    total = variations_at(chain, ZERO) - variations_at(chain, hi)
    out: list[tuple[Fraction, Fraction]] = []

    def split(a: Fraction, b: Fraction, count: int):
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        left = variations_at(chain, a) - variations_at(chain, mid)
        split(a, mid, left)
        split(mid, b, count - left)

    split(ZERO, hi, total)
    return out


def refine_root(p: Poly, a: Fraction, b: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (a, b] of p below the given width."""
    fa = evaluate(p, a)
    if fa == 0:
        return a, a
    while b - a > width:
        mid = (a + b) / 2
        fm = evaluate(p, mid)
        if fm == 0:
            return mid, mid
        if (fa > 0) != (fm > 0):
            b = mid
        else:
            a = mid
            fa = fm
    return a, b


def sqrt_rational(x: Fraction) -> Fraction | None:
    """Exact square root when x is a perfect rational square, else None."""
    if x < 0:
        return None
    rn = isqrt(x.numerator)
    rd = isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def format_poly(p: Poly, var: str = "t") -> str:
    """Human-readable form, highest degree first, e.g. 't^4 + 10t^2 + 9'."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = abs(c)
            coeff = "" if mag == 1 else str(mag)
            term = f"{coeff}{var}" if i == 1 else f"{coeff}{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)
