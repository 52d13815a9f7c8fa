import random

import pytest

from antiprism.complex import SimplicialComplex, shelling_step_ok


def random_shellable(seed: int, max_dim: int = 3, max_facets: int = 5) -> SimplicialComplex:
    """A pure shellable complex grown facet by facet along a shelling order.

    Each new facet glues a ridge of an existing facet to either a fresh vertex
    or an existing one; the shelling condition is checked before accepting it.
    """
    rng = random.Random(seed)
    d = rng.randint(1, max_dim)
    facets = [frozenset(range(1, d + 2))]
    next_vertex = d + 2
    target = rng.randint(1, max_facets)
    attempts = 0
    while len(facets) < target and attempts < 200:
        attempts += 1
        base = rng.choice(facets)
        ridge = base - {rng.choice(sorted(base))}
        if rng.random() < 0.6:
            apex = next_vertex
        else:
            used = sorted(set().union(*facets) - ridge)
            apex = rng.choice(used)
        new = ridge | {apex}
        if new in facets or not shelling_step_ok(facets, new):
            continue
        facets.append(new)
        if apex == next_vertex:
            next_vertex += 1
    return SimplicialComplex.from_facets([sorted(f) for f in facets])


@pytest.fixture
def shellable_samples():
    return [random_shellable(seed) for seed in range(10)]
