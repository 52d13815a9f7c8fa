"""Named polynomial families of antiprism triangulations and related identities.

All coefficients are exact integers. Families indexed by ``n`` are memoized
in process-global caches that are filled once and never mutated afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .enumeration import stirling2
from .errors import IntegrityError, MalformedInputError
from .poly import ONE, X, ZERO, IntPolynomial

# sd_A of a simplex


@lru_cache(maxsize=None)
def h_A(n: int) -> IntPolynomial:
    """h-polynomial of the antiprism triangulation of the ``(n-1)``-simplex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE.with_nominal(0)
    total = ZERO
    for k in range(n):
        total = total + h_A(k).reverse(k) * comb(n, k)
    return total.with_nominal(n)


@lru_cache(maxsize=None)
def ell_A(n: int) -> IntPolynomial:
    """Local h-polynomial of the antiprism triangulation of the ``(n-1)``-simplex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE.with_nominal(0)
    total = ZERO
    for k in range(n):
        m = n - k
        factor = IntPolynomial.binomial_power(m) - 1 - IntPolynomial.monomial(m)
        total = total + ell_A(k) * factor * comb(n, k)
    return total.with_nominal(n)


@lru_cache(maxsize=None)
def h_A_boundary(n: int) -> IntPolynomial:
    """h-polynomial of the antiprism triangulation of the boundary of the ``(n-1)``-simplex."""
    if n < 1:
        raise ValueError("n must be positive")
    total = ZERO
    for k in range(n):
        total = total + ell_A(k) * IntPolynomial.geometric(0, n - k - 1) * comb(n, k)
    return total.with_nominal(n - 1)


@lru_cache(maxsize=None)
def theta_A(n: int) -> IntPolynomial:
    """``h_A(n) - h_A_boundary(n)``."""
    return (h_A(n) - h_A_boundary(n)).with_nominal(n)


def theta_A_via_ell(n: int) -> IntPolynomial:
    """The same difference expressed through local h-polynomials only."""
    total = ell_A(n)
    for m in range(n - 1):
        total = total - ell_A(m) * IntPolynomial.geometric(1, n - m - 1) * comb(n, m)
    return total


def h_A_coefficient_formula(n: int, k: int) -> int:
    """Closed form ``C(n,k) sum_j (-1)^(k+1-j) j! S(k+1,j) j^(n-k-1)``."""
    if n == 0:
        return 1 if k == 0 else 0
    if not 0 <= k < n:
        return 0
    return comb(n, k) * sum(
        (-1) ** (k + 1 - j) * factorial(j) * stirling2(k + 1, j) * j ** (n - k - 1)
        for j in range(1, k + 2))


def ell_A_coefficient_formula(n: int, k: int) -> int:
    """Closed form ``C(n,k) sum_j (j!)^2 S(k,j) S(n-k,j)``."""
    if not 0 <= k <= n:
        return 0
    return comb(n, k) * sum(
        factorial(j) ** 2 * stirling2(k, j) * stirling2(n - k, j) for j in range(0, n + 1))


def q_A(n: int, k: int) -> int:
    """Interior ``(k-1)``-faces of sd_A of the ``(n-1)``-simplex: ``C(n,k) sum_j j! S(k,j) j^(n-k)``."""
    if not 0 <= k <= n:
        return 0
    return comb(n, k) * sum(
        factorial(j) * stirling2(k, j) * j ** (n - k) for j in range(0, k + 1))


def f_A(n: int) -> tuple[int, ...]:
    """f-vector of sd_A of the ``(n-1)``-simplex (sum of interior counts over faces)."""
    return tuple(sum(comb(n, m) * q_A(m, k) for m in range(k, n + 1)) for k in range(n + 1))


# classical families


@lru_cache(maxsize=None)
def eulerian(n: int) -> IntPolynomial:
    """``A_n`` from ``A_n = sum_(k<n) C(n,k) A_k (x-1)^(n-k-1)``, ``A_0 = 1``."""
    if n == 0:
        return ONE
    x_minus_1 = IntPolynomial([-1, 1])
    total = ZERO
    for k in range(n):
        total = total + eulerian(k) * (x_minus_1 ** (n - k - 1)) * comb(n, k)
    return total


@lru_cache(maxsize=None)
def derangement(n: int) -> IntPolynomial:
    """``d_n`` by binomial inversion of ``A_n = sum_k C(n,k) d_k``."""
    total = ZERO
    for k in range(n + 1):
        total = total + eulerian(k) * ((-1) ** (n - k) * comb(n, k))
    return total


def binomial_eulerian(n: int) -> IntPolynomial:
    """``1 + x sum_(k=1..n) C(n,k) A_k``."""
    total = ZERO
    for k in range(1, n + 1):
        total = total + eulerian(k) * comb(n, k)
    return ONE + total.shift(1)


# local h-polynomials of explicit triangulations


def local_h(sub, carrier, V) -> IntPolynomial:
    """Local h-polynomial of a triangulation ``sub`` of the simplex on ``V``.

    ``carrier`` is a :class:`~antiprism.subdivision.CarrierMap`. Computed by
    inclusion-exclusion over all restrictions ``sub_F``, each with its own
    nominal dimension ``|F|``.
    """
    from .subdivision import restriction

    if carrier is None:
        raise MalformedInputError("local h-polynomial needs a carrier map")
    V = list(V)
    n = len(V)
    total = ZERO
    for size in range(n + 1):
        for F in combinations(V, size):
            h = restriction(sub, carrier, F).h_polynomial(size)
            total = total + h * (-1) ** (n - size)
    return total.with_nominal(n)


# formulas for the antiprism over a uniform boundary triangulation


@dataclass
class GammaAFormulas:
    n: int
    h_restrictions: list[IntPolynomial]
    ell_restrictions: list[IntPolynomial]
    h_boundary: IntPolynomial
    h_antiprism: IntPolynomial
    h_antiprism_via_local: IntPolynomial
    local_h_antiprism: IntPolynomial
    h_minus_boundary_via_local: IntPolynomial
    h_minus_boundary_via_h: IntPolynomial
    h_cone: IntPolynomial
    h_boundary_via_local: IntPolynomial
    mismatches: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches


def gamma_A_formulas(bd, carrier, V) -> GammaAFormulas:
    """Evaluate every closed formula for the antiprism over ``bd`` and cross-check them.

    ``bd`` triangulates the boundary of the simplex on ``V`` and must be
    uniform: restrictions to faces of equal size have equal f-vectors.
    """
    from .subdivision import restriction

    V = list(V)
    n = len(V)
    h_k: list[IntPolynomial] = []
    for k in range(n):
        fvs = {restriction(bd, carrier, F).f_vector() for F in combinations(V, k)}
        if len(fvs) != 1:
            raise MalformedInputError(f"restrictions to {k}-subsets are not uniform")
        F = V[:k]
        h_k.append(restriction(bd, carrier, F).h_polynomial(k))
    ell_k = []
    for k in range(n):
        ell = ZERO
        for j in range(k + 1):
            ell = ell + h_k[j] * ((-1) ** (k - j) * comb(k, j))
        ell_k.append(ell)

    def ssum(terms):
        total = ZERO
        for t in terms:
            total = total + t
        return total

    def bp(m):
        return IntPolynomial.binomial_power(m)

    xm = IntPolynomial.monomial
    h9 = ssum(h_k[k].reverse(k) * comb(n, k) for k in range(n))
    h10 = ssum(ell_k[k] * (bp(n - k) - xm(n - k)) * comb(n, k) for k in range(n))
    l11 = ssum(ell_k[k] * (bp(n - k) - 1 - xm(n - k)) * comb(n, k) for k in range(n))
    d12 = ssum(ell_k[k] * (bp(n - k) - IntPolynomial.geometric(0, n - k)) * comb(n, k)
               for k in range(n))
    x_minus_1 = IntPolynomial([-1, 1])
    d13 = ssum(h_k[k] * (xm(n - k) - X * x_minus_1 ** (n - k - 1)) * comb(n, k)
               for k in range(n))
    cone_h = ssum(h_k[k] * x_minus_1 ** (n - k - 1) * comb(n, k) for k in range(n))
    hbd_local = ssum(ell_k[k] * IntPolynomial.geometric(0, n - k - 1) * comb(n, k)
                     for k in range(n))
    h_bd = bd.h_polynomial(n - 1)

    rec = GammaAFormulas(n, h_k, ell_k, h_bd, h9, h10, l11, d12, d13, cone_h, hbd_local)
    checks = {
        "h via h-restrictions vs via local h": h9 == h10,
        "local h vs h minus restriction sum": l11 == h9 - ssum(
            ell_k[k] * comb(n, k) for k in range(n)),
        "h minus boundary: local-h form vs h form": d12 == d13,
        "h minus boundary vs difference of h": d12 == h9 - h_bd,
        "boundary h vs local-h expansion": hbd_local == h_bd,
        "cone formula vs boundary h": cone_h == h_bd,
    }
    rec.mismatches = [name for name, ok in checks.items() if not ok]
    return rec


# face-vector transformations


@dataclass
class TransformTable:
    n_max: int
    p: dict[tuple[int, int, int], int]
    q: dict[tuple[int, int], int]

    def p_row(self, n: int, k: int) -> list[int]:
        return [self.p[(n, k, j)] for j in range(n + 1)]


def transform_table(n_max: int) -> TransformTable:
    """Tables ``p(n,k,j)`` and ``q(n,k)`` for ``n <= n_max``.

    ``p(n,0,j)`` is the ``x^j`` coefficient of ``h_A(n)``; for ``k >= 1``,
    ``p(n,k,j) = p(n,k-1,j) + p(n-1,k-1,j-1) - p(n-1,k-1,j)``.
    """
    p: dict = {}

    def get(n, k, j):
        return p.get((n, k, j), 0)

    for n in range(n_max + 1):
        h = h_A(n)
        for j in range(n + 1):
            p[(n, 0, j)] = h[j]
        for k in range(1, n + 1):
            for j in range(n + 1):
                p[(n, k, j)] = get(n, k - 1, j) + get(n - 1, k - 1, j - 1) - get(n - 1, k - 1, j)
    q = {(n, k): q_A(n, k) for n in range(n_max + 1) for k in range(n + 1)}
    q[(0, 0)] = 1
    return TransformTable(n_max, p, q)


def h_transform(h, n: int, table: TransformTable | None = None) -> list[int]:
    """h-vector of sd_A(Δ) from the h-vector ``(h_0..h_n)`` of an ``(n-1)``-dimensional Δ."""
    h = list(h)
    if len(h) != n + 1:
        raise MalformedInputError(f"h-vector of length {len(h)} does not match n={n}")
    t = table if table is not None and table.n_max >= n else transform_table(n)
    return [sum(t.p[(n, k, j)] * h[k] for k in range(n + 1)) for j in range(n + 1)]


def f_transform(f, n: int) -> list[int]:
    """f-vector ``(f_-1..f_(n-1))`` of sd_A(Δ) from that of Δ."""
    f = list(f)
    if len(f) != n + 1:
        raise MalformedInputError(f"f-vector of length {len(f)} does not match n={n}")
    out = []
    for j in range(n + 1):
        total = 0
        for k in range(j, n + 1):
            qk = 1 if (k, j) == (0, 0) else q_A(k, j)
            total += qk * f[k]
        out.append(total)
    return out


# auxiliary families


@lru_cache(maxsize=None)
def q_nr(n: int, r: int) -> IntPolynomial:
    """``sum_k C(n,k) x^(k+r) h_A(k+r)(1/x)``."""
    total = ZERO
    for k in range(n + 1):
        total = total + h_A(k + r).reverse(k + r) * comb(n, k)
    return total


def q_sequence(n: int) -> list[IntPolynomial]:
    """``(q_(n,0), q_(n-1,1), ..., q_(0,n), q_(0,n+1))``."""
    return [q_nr(n - r, r) for r in range(n + 1)] + [q_nr(0, n + 1)]


@dataclass(frozen=True)
class SymmetricDecomposition:
    a: IntPolynomial
    b: IntPolynomial
    n: int

    def recombine(self) -> IntPolynomial:
        return self.a + self.b.shift(1)

    @property
    def nonnegative(self) -> bool:
        return self.a.nonnegative() and self.b.nonnegative()


def symmetric_decomposition(p: IntPolynomial, n: int) -> SymmetricDecomposition:
    """Unique ``p = a + x b`` with ``a`` symmetric about ``n/2`` and ``b`` about ``(n-1)/2``."""
    if not p.is_zero() and p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds {n}")
    if n == 0:
        return SymmetricDecomposition(p.with_nominal(0), ZERO, 0)
    rev = p.reverse(n)
    b = (p - rev).divide_by_linear(1)
    a = p - b.shift(1)
    if not a.is_symmetric(n) or not b.is_symmetric(n - 1):
        raise IntegrityError("symmetric decomposition failed")
    return SymmetricDecomposition(a.with_nominal(n), b.with_nominal(n - 1), n)


def bar_coefficients(p: IntPolynomial, n: int) -> IntPolynomial:
    out = []
    for k in range(n + 1):
        c, d = p[k], comb(n, k)
        if c % d:
            raise IntegrityError(f"coefficient {c} of x^{k} not divisible by C({n},{k})")
        out.append(c // d)
    return IntPolynomial(out)


def bar_p(n: int) -> IntPolynomial:
    return bar_coefficients(h_A(n), n)


def bar_ell(n: int) -> IntPolynomial:
    return bar_coefficients(ell_A(n), n)


def bar_polys(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    return bar_p(n), bar_ell(n)
