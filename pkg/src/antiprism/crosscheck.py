"""Independent oracles compared against the recurrences and closed formulas.

Each check compares two computations that share no code path: a brute-force
enumeration (or an explicit construction) against a recurrence or a closed
formula. :func:`run_crosschecks` returns every comparison, passing or not.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complex import SimplicialComplex
from .enumeration import (bijection_check_halfblocks, c_recurrence, count_derangement_exc,
                          count_exc_prefix, count_theta_colourings,
                          count_transform_colourings, excedance_polynomial_counts, fubini,
                          multipointed_full, multipointed_partial, proper_multipointed,
                          proper_multipointed_partial)
from .polynomials import (bar_p, derangement, ell_A, ell_A_coefficient_formula, eulerian,
                          f_A, h_A, h_A_boundary, h_A_coefficient_formula, local_h, q_A,
                          theta_A, transform_table)
from .subdivision import (antiprism_by_crossings, antiprism_from_partitions,
                          antiprism_triangulation)

BRUTE_N = 6
CONSTRUCTION_N = 5
COLOUR_N = 5


@dataclass
class CheckResult:
    name: str
    n: int
    ok: bool
    expected: object = None
    observed: object = None

    def row(self) -> list[str]:
        return [self.name, str(self.n), "ok" if self.ok else "MISMATCH",
                _fmt(self.expected), _fmt(self.observed)]


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return "" if v is None else str(v)


def _row(p, n):
    return [p[k] for k in range(n + 1)]


def _counting_checks(n: int) -> list[CheckResult]:
    out = []
    ks = range(n + 1)

    def add(name, expected, observed):
        out.append(CheckResult(name, n, list(expected) == list(observed),
                               list(expected), list(observed)))

    add("h_A: proper multi-pointed partial partitions", _row(h_A(n), n),
        [proper_multipointed_partial(n, k) for k in ks])
    add("h_A: closed formula", _row(h_A(n), n), [h_A_coefficient_formula(n, k) for k in ks])
    add("ell_A: proper multi-pointed partitions", _row(ell_A(n), n),
        [proper_multipointed(n, k) for k in ks])
    add("ell_A: closed formula", _row(ell_A(n), n), [ell_A_coefficient_formula(n, k) for k in ks])
    add("ell_A: C(n,k) d(n,k)", _row(ell_A(n), n),
        [comb(n, k) * count_derangement_exc(n, k) for k in ks])
    add("q_A: multi-pointed partitions of [n]", [q_A(n, k) for k in ks],
        [multipointed_full(n, k) for k in ks])
    add("f_A: multi-pointed partial partitions", list(f_A(n)),
        [multipointed_partial(n, k) for k in ks])
    if n >= 1:
        add("barp: excedance sets [k]", _row(bar_p(n), n - 1),
            [count_exc_prefix(n, k) for k in range(n)])
        add("c(n,k): recurrence", [count_exc_prefix(n, k) for k in range(n)],
            [c_recurrence(n, k) for k in range(n)])
        add("eulerian: excedances", _row(eulerian(n), n - 1), excedance_polynomial_counts(n))
        add("derangement: excedances", _row(derangement(n), n - 1),
            excedance_polynomial_counts(n, derangements=True))
        add("theta_A: coloured ordered partitions", _row(theta_A(n), n),
            [count_theta_colourings(n, k) for k in ks])
    for k in ks:
        ok, t, s = bijection_check_halfblocks(n, k)
        out.append(CheckResult(f"half-block bijection k={k}", n, ok and t == h_A(n)[k],
                               h_A(n)[k], [t, s]))
        ok, t, s = bijection_check_halfblocks(n, k, even=True)
        out.append(CheckResult(f"even half-block bijection k={k}", n, ok and t == ell_A(n)[k],
                               ell_A(n)[k], [t, s]))
    return out


def _colour_transform_checks(n: int) -> list[CheckResult]:
    table = transform_table(n)
    out = []
    for k in range(n + 1):
        exp = table.p_row(n, k)
        obs = [count_transform_colourings(n, k, j) for j in range(n + 1)]
        out.append(CheckResult(f"p_A(n,{k},j): coloured partitions", n, exp == obs, exp, obs))
    return out


def _construction_checks(n: int) -> list[CheckResult]:
    out = []
    V = list(range(1, n + 1))
    for label, base in (("simplex", SimplicialComplex.simplex(n)),
                        ("boundary", SimplicialComplex.simplex_boundary(n))):
        if label == "boundary" and n < 2:
            continue
        clique, cm = antiprism_triangulation(base)
        parts = antiprism_from_partitions(base)
        cross, _ = antiprism_by_crossings(base)
        out.append(CheckResult(f"{label}: clique complex == partition model", n,
                               clique == parts, len(clique.facets), len(parts.facets)))
        out.append(CheckResult(f"{label}: clique complex == iterated crossings", n,
                               clique == cross, len(clique.facets), len(cross.facets)))
        if label == "simplex":
            out.append(CheckResult("simplex: f-vector", n, list(clique.f_vector()) == list(f_A(n)),
                                   list(f_A(n)), list(clique.f_vector())))
            out.append(CheckResult("simplex: facets = Fubini number", n,
                                   len(clique.facets) == fubini(n), fubini(n), len(clique.facets)))
            lh = local_h(clique, cm, V)
            out.append(CheckResult("simplex: local h == ell_A", n, lh == ell_A(n),
                                   _row(ell_A(n), n), _row(lh, n)))
            h = clique.h_polynomial(n)
            out.append(CheckResult("simplex: h == h_A", n, h == h_A(n),
                                   _row(h_A(n), n), _row(h, n)))
        else:
            h = clique.h_polynomial(n - 1)
            out.append(CheckResult("boundary: h == h_A_boundary", n, h == h_A_boundary(n),
                                   _row(h_A_boundary(n), n - 1), _row(h, n - 1)))
    return out


def run_crosschecks(n_max: int, brute_n: int = BRUTE_N, construction_n: int = CONSTRUCTION_N,
                    colour_n: int = COLOUR_N) -> list[CheckResult]:
    results = []
    for n in range(0, n_max + 1):
        if n <= brute_n:
            results += _counting_checks(n)
        if n <= colour_n:
            results += _colour_transform_checks(n)
        if 1 <= n <= construction_n:
            results += _construction_checks(n)
    return results
