"""Exact real-root certificates for integer polynomials.

Root counting uses Sturm chains built from integer pseudo-remainders reduced
to primitive polynomials (positive scalings only, so signs are preserved). Isolating intervals are half-open ``(lo, hi]`` with rational
endpoints that are never roots. No floating point is involved in any verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Sequence

from .poly import IntPolynomial

WIDTH_FLOOR = Fraction(1, 2 ** 256)


def _primitive(cs: Sequence[Fraction]) -> IntPolynomial:
    """Scale rational coefficients by a positive rational to a primitive integer polynomial."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return IntPolynomial()
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return IntPolynomial(c // g for c in ints)


def poly_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``a`` by ``b`` up to a positive factor, as a primitive integer polynomial.

    Works with integer pseudo-division: each step scales the running
    remainder by ``|lead(b)|``, which never flips a sign.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    bc = b.coeffs
    db, lb = b.degree, b.leading
    scale, sgn = abs(lb), (1 if lb > 0 else -1)
    while len(r) - 1 >= db:
        lead = r.pop()
        if lead == 0:
            continue
        shift = len(r) - db
        f = sgn * lead
        r = [c * scale for c in r]
        for i in range(db):
            r[shift + i] -= f * bc[i]
        g = 0
        for c in r:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            r = [c // g for c in r]
    return _primitive([Fraction(c) for c in r])


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, poly_rem(a, b)
    if a.is_zero():
        return a
    a = _primitive([Fraction(c) for c in a.coeffs])
    return -a if a.leading < 0 else a


def poly_exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` over the rationals, returned as a primitive integer polynomial."""
    q = [Fraction(0)] * max(a.degree - b.degree + 1, 0)
    r = [Fraction(c) for c in a.coeffs]
    db, lb = b.degree, b.leading
    while len(r) - 1 >= db and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - 1 - db
        factor = r[-1] / lb
        q[shift] = factor
        for i, c in enumerate(b.coeffs):
            r[shift + i] -= factor * c
        r.pop()
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _primitive(q)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree <= 0:
        return _primitive([Fraction(c) for c in p.coeffs])
    g = poly_gcd(p, p.derivative())
    return poly_exact_quotient(p, g) if g.degree > 0 else _primitive([Fraction(c) for c in p.coeffs])


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    if p.is_zero():
        return []
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-poly_rem(chain[-2], chain[-1]))
    chain.pop()
    return chain


def _variations(chain: Sequence[IntPolynomial], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _variations_at_neg_inf(chain):
    signs = [(-1) ** q.degree * (1 if q.leading > 0 else -1) for q in chain]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _variations_at_pos_inf(chain):
    signs = [1 if q.leading > 0 else -1 for q in chain]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_distinct_real_roots(p: IntPolynomial) -> int:
    if p.degree <= 0:
        return 0
    chain = sturm_chain(p)
    return _variations_at_neg_inf(chain) - _variations_at_pos_inf(chain)


def root_bound(p: IntPolynomial) -> Fraction:
    """A power of two strictly larger than every root modulus (Cauchy bound)."""
    lead = abs(p.leading)
    m = max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def _split_point(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)):
        m = lo + (hi - lo) * Fraction(num, den)
        if p.sign_at(m) != 0:
            return m
    d = 7
    while True:
        for num in range(1, d):
            m = lo + (hi - lo) * Fraction(num, d)
            if p.sign_at(m) != 0:
                return m
        d += 2


def isolate_squarefree(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals ``(lo, hi]``, ascending, one per real root."""
    if p.degree <= 0:
        return []
    chain = sturm_chain(p)
    B = root_bound(p)
    out = []
    stack = [(-B, B, _variations(chain, -B), _variations(chain, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        if hi - lo < WIDTH_FLOOR:
            raise RuntimeError("root separation failed above the width floor")
        m = _split_point(p, lo, hi)
        vm = _variations(chain, m)
        stack.append((lo, m, vlo, vm))
        stack.append((m, hi, vm, vhi))
    out.sort()
    return out


def _has_root_in(chain, lo, hi) -> bool:
    return _variations(chain, lo) - _variations(chain, hi) > 0


@dataclass
class RootIsolation:
    """Real roots of a polynomial as disjoint rational intervals with multiplicities."""

    polynomial: IntPolynomial
    squarefree_part: IntPolynomial
    sturm_chain: list[IntPolynomial]
    intervals: list[tuple[Fraction, Fraction, int]] = field(default_factory=list)

    @property
    def real_root_count(self) -> int:
        return sum(m for _, _, m in self.intervals)

    @property
    def is_real_rooted(self) -> bool:
        p = self.polynomial
        return p.is_zero() or self.real_root_count == p.degree

    def witness(self) -> list[list[str]]:
        return [[str(lo), str(hi), str(m)] for lo, hi, m in self.intervals]


@lru_cache(maxsize=1024)
def _multiplicity_chains(p: IntPolynomial) -> list[list[IntPolynomial]]:
    """Sturm chains of the squarefree parts of ``p, gcd(p,p'), ...``."""
    chains = []
    g = p
    while g.degree > 0:
        chains.append(sturm_chain(squarefree_part(g)))
        g = poly_gcd(g, g.derivative())
    return chains


def _multiplicity(chains, lo, hi) -> int:
    return sum(1 for ch in chains if _has_root_in(ch, lo, hi))


@lru_cache(maxsize=4096)
def root_isolation(p: IntPolynomial) -> RootIsolation:
    if p.is_zero() or p.degree == 0:
        return RootIsolation(p, p, [p] if not p.is_zero() else [], [])
    sq = squarefree_part(p)
    chains = _multiplicity_chains(p)
    intervals = [(lo, hi, _multiplicity(chains, lo, hi)) for lo, hi in isolate_squarefree(sq)]
    return RootIsolation(p, sq, sturm_chain(sq), intervals)


def is_real_rooted(p: IntPolynomial) -> bool:
    """True iff every complex root is real (the zero polynomial counts as real-rooted)."""
    if p.degree <= 0:
        return True
    return root_isolation(p).is_real_rooted


# interlacing


@dataclass
class InterlacingResult:
    holds: bool
    coincident_roots: bool = False


class _Refiner:
    """Working copy of the isolating intervals of one polynomial, refinable in place.

    Sturm variation counts at both endpoints are stored with each interval so
    a bisection step costs one chain evaluation.
    """

    def __init__(self, iso: RootIsolation):
        self.poly = iso.squarefree_part
        self.chain = iso.sturm_chain
        self.intervals = [[lo, hi] for lo, hi, _ in iso.intervals]
        self.vars = [[_variations(self.chain, lo), _variations(self.chain, hi)]
                     for lo, hi, _ in iso.intervals]
        self.mult = [m for _, _, m in iso.intervals]

    def refine(self, i: int):
        lo, hi = self.intervals[i]
        vlo, vhi = self.vars[i]
        if hi - lo < WIDTH_FLOOR:
            raise RuntimeError("root comparison failed above the width floor")
        m = _split_point(self.poly, lo, hi)
        vm = _variations(self.chain, m)
        if vlo - vm > 0:
            self.intervals[i], self.vars[i] = [lo, m], [vlo, vm]
        else:
            self.intervals[i], self.vars[i] = [m, hi], [vm, vhi]


def _compare_roots(a: _Refiner, i: int, b: _Refiner, j: int, common) -> int:
    """Sign of ``root_i(a) - root_j(b)``; equality is decided by the common factor."""
    while True:
        alo, ahi = a.intervals[i]
        blo, bhi = b.intervals[j]
        if ahi <= blo:
            return -1
        if bhi <= alo:
            return 1
        lo, hi = max(alo, blo), min(ahi, bhi)
        if common is not None and _has_root_in(common, lo, hi):
            return 0
        if ahi - alo >= bhi - blo:
            a.refine(i)
        else:
            b.refine(j)


def _merged_root_ranks(p: IntPolynomial, q: IntPolynomial, refiners: dict | None = None):
    """Ascending lists of root ranks (with multiplicity) of ``p`` and ``q``.

    Each polynomial keeps its own isolating intervals; overlapping intervals
    are refined until they separate, unless the gcd of the squarefree parts
    has a root in the overlap, which proves the two roots equal. ``refiners``
    lets a caller reuse refined intervals across many comparisons.
    """
    if refiners is None:
        refiners = {}
    for s in (p, q):
        if s not in refiners:
            refiners[s] = _Refiner(root_isolation(s))
    rp, rq = refiners[p], refiners[q]
    g = poly_gcd(rp.poly, rq.poly)
    common = sturm_chain(g) if g.degree > 0 else None
    ranks_p, ranks_q = [], []
    shared = False
    i = j = rank = 0
    np_, nq = len(rp.intervals), len(rq.intervals)
    while i < np_ or j < nq:
        if j == nq:
            c = -1
        elif i == np_:
            c = 1
        else:
            c = _compare_roots(rp, i, rq, j, common)
        if c <= 0:
            ranks_p += [rank] * rp.mult[i]
            i += 1
        if c >= 0:
            ranks_q += [rank] * rq.mult[j]
            j += 1
        shared = shared or c == 0
        rank += 1
    return ranks_p, ranks_q, shared


def interlacing_detail(p: IntPolynomial, q: IntPolynomial,
                       _refiners: dict | None = None) -> InterlacingResult:
    if p.is_zero() or q.is_zero():
        return InterlacingResult(True)
    for s in (p, q):
        if not is_real_rooted(s):
            raise ValueError(f"{s} is not real-rooted")
    if p.degree <= 0 and q.degree <= 1:
        return InterlacingResult(True)
    rp, rq, shared = _merged_root_ranks(p, q, _refiners)
    alpha = rp[::-1]
    beta = rq[::-1]
    if not (len(beta) == len(alpha) or len(beta) == len(alpha) + 1):
        return InterlacingResult(False, shared)
    for k, a in enumerate(alpha):
        if a > beta[k]:
            return InterlacingResult(False, shared)
        if k + 1 < len(beta) and beta[k + 1] > a:
            return InterlacingResult(False, shared)
    return InterlacingResult(True, shared)


def interlaces(p: IntPolynomial, q: IntPolynomial) -> bool:
    """Whether ``p`` interlaces ``q``: roots ``... <= a2 <= b2 <= a1 <= b1``."""
    return interlacing_detail(p, q).holds


def is_interlacing_sequence(ps: Sequence[IntPolynomial], fast: bool = False) -> bool:
    """Pairwise interlacing ``p_i`` interlaces ``p_j`` for ``i < j``.

    With ``fast=True`` consecutive pairs and the end pair are checked first;
    if they all hold, the sequence is accepted (valid for positive leading
    coefficients), otherwise the full pairwise check decides.
    """
    ps = list(ps)
    for p in ps:
        if not is_real_rooted(p):
            raise ValueError(f"{p} is not real-rooted")
    shared: dict = {}

    def inter(a, b):
        return interlacing_detail(a, b, shared).holds

    if fast and len(ps) >= 2 and all(p.leading >= 0 for p in ps):
        if all(inter(a, b) for a, b in zip(ps, ps[1:])) and inter(ps[0], ps[-1]):
            return True
    return all(inter(ps[i], ps[j]) for i in range(len(ps)) for j in range(i + 1, len(ps)))


# coefficient properties


def unimodal(coeffs: Sequence[int]) -> tuple[bool, list[int]]:
    """Unimodality and every peak position ``k`` with ``a_0<=..<=a_k>=..>=a_n``."""
    a = list(coeffs)
    if not a:
        return True, []
    n = len(a)
    inc = [True] * n
    for i in range(1, n):
        inc[i] = inc[i - 1] and a[i - 1] <= a[i]
    dec = [True] * n
    for i in range(n - 2, -1, -1):
        dec[i] = dec[i + 1] and a[i] >= a[i + 1]
    peaks = [k for k in range(n) if inc[k] and dec[k]]
    return bool(peaks), peaks


def alternatingly_increasing(p: IntPolynomial, n: int) -> bool:
    """``a_0 <= a_n <= a_1 <= a_(n-1) <= ... <= a_ceil(n/2)``."""
    order = []
    lo, hi = 0, n
    while lo <= hi:
        order.append(lo)
        if hi != lo:
            order.append(hi)
        lo += 1
        hi -= 1
    vals = [p[i] for i in order]
    return all(u <= v for u, v in zip(vals, vals[1:]))


def gamma_vector(p: IntPolynomial, n: int) -> list[int]:
    """Coefficients ``g_j`` with ``p = sum_j g_j x^j (1+x)^(n-2j)``.

    Raises ``ValueError`` if ``p`` is not symmetric about ``n/2``.
    """
    if not p.is_symmetric(n):
        raise ValueError(f"{p} is not symmetric with respect to {n}")
    rest = p
    gammas = []
    for j in range(n // 2 + 1):
        g = rest[j]
        gammas.append(g)
        if g:
            rest = rest - IntPolynomial.binomial_power(n - 2 * j).shift(j) * g
    if not rest.is_zero():
        raise ArithmeticError("gamma expansion left a remainder")
    return gammas


def gamma_positive(p: IntPolynomial, n: int) -> bool:
    try:
        return all(g >= 0 for g in gamma_vector(p, n))
    except ValueError:
        return False


# Macaulay's characterization


def binomial_representation(a: int, i: int) -> list[tuple[int, int]]:
    """The ``i``-binomial representation ``a = C(n_i,i) + C(n_(i-1),i-1) + ...``."""
    rep = []
    k = i
    while a > 0 and k > 0:
        n = k
        while comb(n + 1, k) <= a:
            n += 1
        rep.append((n, k))
        a -= comb(n, k)
        k -= 1
    return rep


def macaulay_bound(a: int, i: int) -> int:
    """``a^<i>``: the largest allowed successor of ``a`` in degree ``i+1``."""
    return sum(comb(n + 1, k + 1) for n, k in binomial_representation(a, i))


def m_sequence_violation(seq: Sequence[int]) -> str | None:
    seq = list(seq)
    if not seq:
        return "empty sequence"
    if seq[0] != 1:
        return f"first entry is {seq[0]}, not 1"
    if any(a < 0 for a in seq):
        return "negative entry"
    for i in range(1, len(seq) - 1):
        bound = macaulay_bound(seq[i], i)
        if seq[i + 1] > bound:
            return f"entry {i + 1} = {seq[i + 1]} exceeds the Macaulay bound {bound}"
    return None


def is_M_sequence(seq: Sequence[int]) -> bool:
    return m_sequence_violation(seq) is None
