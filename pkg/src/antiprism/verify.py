"""Sweeps that check the real-rootedness statements instance by instance.

Each claim is evaluated for one ``n`` at a time by a pure function, so sweeps
can be spread over worker processes; results are reassembled in ``n`` order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .complex import SimplicialComplex
from .errors import CapacityError
from .poly import IntPolynomial
from .polynomials import (bar_ell, bar_p, ell_A, h_A, h_A_boundary, h_transform,
                          q_nr, q_sequence, symmetric_decomposition, theta_A,
                          transform_table)
from .realroot import (gamma_positive, interlacing_detail, is_interlacing_sequence,
                       is_M_sequence, is_real_rooted, root_isolation, unimodal)

MAX_POLY_N = 40
MAX_PEAK_N = 12
DIRECT_PEAK_N = 5

HOLDS, FAILS, CAPACITY = "holds", "fails", "capacity"


@dataclass
class InstanceResult:
    n: int
    status: str
    checks: dict[str, bool] = field(default_factory=dict)
    witness_intervals: dict[str, list] = field(default_factory=dict)
    coincident_roots: list[str] = field(default_factory=list)
    elapsed_ms: int = 0
    detail: str = ""

    def to_json(self, claim: str) -> dict:
        return {
            "claim": claim,
            "n": str(self.n),
            "status": self.status,
            "checks": {k: self.checks[k] for k in sorted(self.checks)},
            "failed_checks": sorted(k for k, ok in self.checks.items() if not ok),
            "coincident_roots": self.coincident_roots,
            "witness_intervals": self.witness_intervals,
            "detail": self.detail,
            "elapsed_ms": str(self.elapsed_ms),
        }


@dataclass
class VerificationReport:
    claim: str
    n_range: list[int]
    instances: list[InstanceResult]
    elapsed_ms: int = 0

    @property
    def holds(self) -> bool:
        return all(r.status == HOLDS for r in self.instances)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.instances if r.status == FAILS]

    @property
    def capacity_hit(self) -> bool:
        return any(r.status == CAPACITY for r in self.instances)

    def to_json(self) -> list[dict]:
        return [r.to_json(self.claim) for r in self.instances]


class _Checker:
    """Accumulates named boolean checks plus root witnesses for one instance."""

    def __init__(self):
        self.checks: dict[str, bool] = {}
        self.witness: dict[str, list] = {}
        self.coincident: list[str] = []

    def record(self, name: str, ok: bool):
        self.checks[name] = bool(ok)

    def real_rooted(self, name: str, p: IntPolynomial):
        self.witness[name] = root_isolation(p).witness() if p.degree > 0 else []
        self.record(f"{name} real-rooted", is_real_rooted(p))

    def interlaces(self, name: str, p: IntPolynomial, q: IntPolynomial):
        if not (is_real_rooted(p) and is_real_rooted(q)):
            self.record(name, False)
            return
        res = interlacing_detail(p, q)
        if res.coincident_roots:
            self.coincident.append(name)
        self.record(name, res.holds)


def _thmA(n: int, c: _Checker):
    p = h_A(n)
    c.real_rooted("p", p)
    dec = symmetric_decomposition(p, n - 1)
    c.record("decomposition nonnegative", dec.nonnegative)
    c.real_rooted("a", dec.a)
    c.real_rooted("b", dec.b)
    c.interlaces("reverse(p,n-1) interlaces p", p.reverse(n - 1), p)
    c.interlaces("b interlaces a", dec.b, dec.a)
    c.interlaces("p interlaces h_A(n+1)", p, h_A(n + 1))
    c.record("a equals boundary h-polynomial", dec.a == h_A_boundary(n))


def _interlace_chain(n: int, c: _Checker):
    seq = q_sequence(n)
    ok = all(is_real_rooted(q) for q in seq)
    c.record("Q_n real-rooted", ok)
    c.record("Q_n interlacing sequence", ok and is_interlacing_sequence(seq))
    total = IntPolynomial()
    for r in range(n + 1):
        total = total + q_nr(n - r, r)
    c.record("sum of first n+1 terms equals h_A(n+1)", total == h_A(n + 1))
    c.real_rooted("h_A(n)", h_A(n))
    c.interlaces("h_A(n) interlaces h_A(n+1)", h_A(n), h_A(n + 1))
    sym = h_A(n) + h_A(n).reverse(n)
    c.interlaces("h_A(n) + reverse interlaces h_A(n+1)", sym, h_A(n + 1))


def _conj_thetaA(n: int, c: _Checker):
    theta = theta_A(n)
    c.real_rooted("theta_A(n)", theta)
    c.real_rooted("h_A(n-1)", h_A(n - 1))
    c.interlaces("h_A(n-1) interlaces theta_A(n)", h_A(n - 1), theta)


def _conj_barp(n: int, c: _Checker):
    p, q = bar_p(n), bar_p(n + 1)
    c.real_rooted("barp(n)", p)
    c.interlaces("barp(n) interlaces barp(n+1)", p, q)
    c.record("barp(n) gamma-positive wrt n-1", gamma_positive(p, max(n - 1, 0)))


def _conj_ellA(n: int, c: _Checker):
    for name, fam in (("ell", ell_A), ("ellbar", bar_ell)):
        p, q = fam(n), fam(n + 1)
        c.real_rooted(f"{name}(n)", p)
        c.interlaces(f"{name}(n) interlaces {name}(n+1)", p, q)
        c.record(f"{name}(n) gamma-positive wrt n", gamma_positive(p, n))


def peak_checks(h: list[int], N: int) -> dict[str, bool]:
    """Unimodality with a middle peak, the M-sequence g-vector and ``h_i <= h_(N-1-i)``."""
    h = list(h) + [0] * max(0, N + 1 - len(h))
    ok, peaks = unimodal(h)
    if N % 2 == 0:
        middle = {N // 2}
    else:
        middle = {(N - 1) // 2, (N + 1) // 2}
    g = [1] + [h[i] - h[i - 1] for i in range(1, N // 2 + 1)]
    return {
        "unimodal": ok,
        "peak in the middle": bool(middle & set(peaks)),
        "g-vector is an M-sequence": is_M_sequence(g),
        "h_i <= h_(N-1-i)": all(h[i] <= h[N - 1 - i] for i in range((N - 2) // 2 + 1)),
    }


def _peak_position(n: int, c: _Checker):
    table = transform_table(n)
    h_simplex = h_transform([1] + [0] * n, n, table)
    c.record("simplex transform equals h_A(n)", h_simplex == h_A(n).coefficient_list(n + 1))
    for name, ok in peak_checks(h_simplex, n).items():
        c.record(f"simplex: {name}", ok)
    if n >= 2:
        N = n - 1
        h_bd = h_transform([1] * (N + 1), N, table)
        for name, ok in peak_checks(h_bd, N).items():
            c.record(f"boundary: {name}", ok)
    if n <= DIRECT_PEAK_N:
        from .subdivision import antiprism_triangulation

        direct = antiprism_triangulation(SimplicialComplex.simplex(n))[0]
        c.record("simplex: direct construction agrees",
                 direct.h_polynomial(n).coefficient_list(n + 1) == h_simplex)
        if n >= 2:
            bd = antiprism_triangulation(SimplicialComplex.simplex_boundary(n))[0]
            c.record("boundary: direct construction agrees",
                     bd.h_polynomial(n - 1).coefficient_list(n) == h_bd)


CLAIMS: dict[str, tuple[Callable[[int, _Checker], None], int, int]] = {
    # name: (instance check, smallest n, largest n within capacity)
    "thmA": (_thmA, 1, MAX_POLY_N),
    "interlace_chain": (_interlace_chain, 0, MAX_POLY_N),
    "conj_thetaA": (_conj_thetaA, 1, MAX_POLY_N),
    "conj_barp": (_conj_barp, 0, MAX_POLY_N),
    "conj_ellA": (_conj_ellA, 0, MAX_POLY_N),
    "peak_position": (_peak_position, 1, MAX_PEAK_N),
}


def run_instance(claim: str, n: int) -> InstanceResult:
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}")
    check, lo, hi = CLAIMS[claim]
    start = time.perf_counter()
    if n < lo:
        return InstanceResult(n, HOLDS, detail=f"vacuous below n={lo}")
    if n > hi:
        return InstanceResult(n, CAPACITY, detail=f"n={n} exceeds the capacity {hi}")
    c = _Checker()
    try:
        check(n, c)
    except CapacityError as exc:
        return InstanceResult(n, CAPACITY, detail=str(exc))
    status = HOLDS if all(c.checks.values()) else FAILS
    elapsed = int((time.perf_counter() - start) * 1000)
    return InstanceResult(n, status, c.checks, c.witness, c.coincident, elapsed)


def _run_pair(args):
    return run_instance(*args)


def verify(claim: str, n_range: Iterable[int], jobs: int = 1) -> VerificationReport:
    """Evaluate ``claim`` for every ``n`` in ``n_range``."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}")
    ns = list(n_range)
    start = time.perf_counter()
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_pair, [(claim, n) for n in ns]))
    else:
        results = [run_instance(claim, n) for n in ns]
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(claim, ns, results, elapsed)
