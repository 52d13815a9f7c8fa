"""Brute-force combinatorial oracles.

Everything here is computed by explicit enumeration (or, for Stirling
numbers, the textbook triangle) and never calls the recurrences in
:mod:`antiprism.polynomials`; the two modules check each other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError

DEFAULT_ENUM_CAP = 10
PARTITION_CAP = 12


@dataclass(frozen=True)
class OrderedSetPartition:
    blocks: tuple[frozenset, ...]

    @property
    def support(self) -> frozenset:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class MultiPointedOrderedPartition:
    """An ordered partition together with a nonempty chosen subset of every block."""

    pi: OrderedSetPartition
    tau: tuple[frozenset, ...]

    def __post_init__(self):
        if len(self.tau) != len(self.pi.blocks):
            raise ValueError("pi and tau must have the same number of blocks")
        for b, c in zip(self.pi.blocks, self.tau):
            if not c or not c <= b:
                raise ValueError("chosen subsets must be nonempty subsets of their blocks")

    @property
    def weight(self) -> int:
        return sum(len(c) for c in self.tau)

    @property
    def proper(self) -> bool:
        return all(c < b for b, c in zip(self.pi.blocks, self.tau))

    @property
    def support(self) -> frozenset:
        return self.pi.support


def _sorted(s):
    return sorted(s)


def _nonempty_subsets(items: Sequence) -> Iterator[tuple]:
    for k in range(1, len(items) + 1):
        yield from combinations(items, k)


def _check_cap(n: int, cap: int):
    if n > cap:
        raise CapacityError(f"enumeration over a {n}-set exceeds the cap {cap}")


def ordered_partitions(S: Iterable, cap: int = PARTITION_CAP) -> Iterator[OrderedSetPartition]:
    """Every ordered set partition of ``S`` exactly once.

    First blocks are produced in order of increasing size and, within a size,
    lexicographically; the empty set has exactly one (empty) partition.
    """
    items = tuple(_sorted(S))
    _check_cap(len(items), cap)

    def rec(rest: tuple) -> Iterator[tuple]:
        if not rest:
            yield ()
            return
        for first in _nonempty_subsets(rest):
            fs = frozenset(first)
            remaining = tuple(x for x in rest if x not in fs)
            for tail in rec(remaining):
                yield (fs,) + tail

    for blocks in rec(items):
        yield OrderedSetPartition(blocks)


def fubini(n: int) -> int:
    """Number of ordered partitions of an ``n``-set (closed form via Stirling numbers)."""
    return sum(factorial(j) * stirling2(n, j) for j in range(n + 1))


def multipointed_partitions(S: Iterable, cap: int = DEFAULT_ENUM_CAP
                            ) -> Iterator[MultiPointedOrderedPartition]:
    """Multi-pointed ordered partitions of exactly the set ``S``."""
    items = tuple(_sorted(S))
    _check_cap(len(items), cap)
    for pi in ordered_partitions(items, cap=max(cap, len(items))):
        choices = [[frozenset(c) for c in _nonempty_subsets(_sorted(b))] for b in pi.blocks]
        for tau in product(*choices):
            yield MultiPointedOrderedPartition(pi, tuple(tau))


def multipointed_partial_partitions(n: int, cap: int = DEFAULT_ENUM_CAP
                                    ) -> Iterator[MultiPointedOrderedPartition]:
    """Multi-pointed ordered partitions of all subsets of ``[n]``."""
    _check_cap(n, cap)
    base = range(1, n + 1)
    for k in range(n + 1):
        for S in combinations(base, k):
            yield from multipointed_partitions(S, cap)


@lru_cache(maxsize=None)
def _weight_histograms(n: int, partial: bool, proper: bool) -> dict[int, int]:
    hist: Counter = Counter()
    if partial:
        stream = multipointed_partial_partitions(n, cap=max(n, 0))
    else:
        stream = multipointed_partitions(range(1, n + 1), cap=max(n, 0))
    for obj in stream:
        if not proper or obj.proper:
            hist[obj.weight] += 1
    return dict(hist)


def multipointed_partial(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of multi-pointed partial ordered partitions of ``[n]`` of weight ``k``."""
    _check_cap(n, cap)
    return _weight_histograms(n, True, False).get(k, 0)


def multipointed_full(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of multi-pointed ordered partitions of ``[n]`` of weight ``k``."""
    _check_cap(n, cap)
    return _weight_histograms(n, False, False).get(k, 0)


def proper_multipointed(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Proper multi-pointed ordered partitions of ``[n]`` (all of ``[n]``) of weight ``k``."""
    _check_cap(n, cap)
    return _weight_histograms(n, False, True).get(k, 0)


def proper_multipointed_partial(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    _check_cap(n, cap)
    return _weight_histograms(n, True, True).get(k, 0)


# permutations


def excedance_set(w: Sequence[int]) -> frozenset:
    """Indices ``i`` in ``[n-1]`` with ``w(i) > i``; ``w`` is the one-line notation."""
    return frozenset(i for i, wi in enumerate(w, start=1) if wi > i)


@lru_cache(maxsize=None)
def _prefix_excedance_counts(n: int, derangements: bool) -> tuple[int, ...]:
    counts = [0] * (n + 1)
    for w in permutations(range(1, n + 1)):
        if derangements and any(wi == i for i, wi in enumerate(w, start=1)):
            continue
        exc = excedance_set(w)
        k = len(exc)
        if exc == frozenset(range(1, k + 1)):
            counts[k] += 1
    return tuple(counts)


def count_exc_prefix(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """``c(n, k)``: permutations of ``[n]`` whose excedance set is exactly ``[k]``."""
    _check_cap(n, cap)
    if not 0 <= k <= n:
        return 0
    return _prefix_excedance_counts(n, False)[k]


def count_derangement_exc(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """``d(n, k)``: derangements of ``[n]`` whose excedance set is exactly ``[k]``."""
    _check_cap(n, cap)
    if not 0 <= k <= n:
        return 0
    return _prefix_excedance_counts(n, True)[k]


@lru_cache(maxsize=None)
def c_recurrence(n: int, k: int) -> int:
    """``c(n, k)`` from ``1 + sum_m C(n-k, m) c(k+m, m)``, with ``c(n, n) = 0`` for ``n >= 1``."""
    if k < 0 or k > n:
        return 0
    if k == n:
        return 1 if n == 0 else 0
    return 1 + sum(comb(n - k, m) * c_recurrence(k + m, m) for m in range(1, n - k))


def excedance_polynomial_counts(n: int, cap: int = DEFAULT_ENUM_CAP, derangements=False):
    """Coefficients of the Eulerian (or derangement) polynomial by brute force."""
    _check_cap(n, cap)
    counts = [0] * max(n, 1)
    for w in permutations(range(1, n + 1)):
        if derangements and any(wi == i for i, wi in enumerate(w, start=1)):
            continue
        counts[len(excedance_set(w))] += 1
    return counts


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via ``S(n,k) = k S(n-1,k) + S(n-1,k-1)``."""
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# bijections and colour-model counts


def _halfblock_image(obj: MultiPointedOrderedPartition, n: int) -> tuple[frozenset, ...]:
    blocks = list(obj.tau) + [b - c for b, c in zip(obj.pi.blocks, obj.tau)]
    rest = frozenset(range(1, n + 1)) - obj.support
    if rest:
        blocks.append(rest)
    return tuple(blocks)


def _front_half(blocks: Sequence[frozenset]) -> int:
    return sum(len(b) for b in blocks[: len(blocks) // 2])


def bijection_check_halfblocks(n: int, k: int, cap: int = 8, even: bool = False):
    """Check the block-listing bijection behind the half-blocks interpretation.

    With ``even=False`` proper multi-pointed *partial* partitions of weight
    ``k`` are mapped to ordered partitions of ``[n]`` whose first
    ``floor(m/2)`` blocks hold ``k`` elements. With ``even=True`` the sources
    are proper multi-pointed partitions of all of ``[n]`` and the targets have
    an even number of blocks. Returns ``(ok, n_targets, n_sources)``.
    """
    _check_cap(n, cap)
    targets = set()
    for pi in ordered_partitions(range(1, n + 1)):
        m = len(pi.blocks)
        if even and m % 2:
            continue
        if _front_half(pi.blocks) == k:
            targets.add(pi.blocks)
    sources = (multipointed_partitions(range(1, n + 1), cap) if even
               else multipointed_partial_partitions(n, cap))
    images = set()
    n_sources = 0
    ok = True
    for obj in sources:
        if not obj.proper or obj.weight != k:
            continue
        n_sources += 1
        img = _halfblock_image(obj, n)
        if img in images or img not in targets:
            ok = False
        images.add(img)
    ok = ok and images == targets and len(targets) == n_sources
    return ok, len(targets), n_sources


def _colourings(items: Sequence[int], k: int) -> Iterator[frozenset]:
    for black in combinations(items, k):
        yield frozenset(black)


def count_theta_colourings(n: int, k: int, cap: int = 8) -> int:
    """Ordered partitions of ``[n]`` with ``k`` black elements, no monochromatic
    block, and some black element larger than some white one in the last block."""
    _check_cap(n, cap)
    total = 0
    items = range(1, n + 1)
    parts = list(ordered_partitions(items))
    for black in _colourings(items, k):
        for pi in parts:
            if any(b <= black or not (b & black) for b in pi.blocks):
                continue
            last = pi.blocks[-1]
            whites = last - black
            blacks = last & black
            if blacks and whites and max(blacks) > min(whites):
                total += 1
    return total


def count_transform_colourings(n: int, k: int, j: int, cap: int = 8) -> int:
    """Colour-model count of the h-transform coefficient for ``(n, k, j)``.

    Choose ``[k] ⊆ S ⊆ [n]``, an ordered partition of ``S`` and ``j`` black
    elements of ``S`` so that a monochromatic block may only be the first
    block, lie inside ``[k]`` and be black.
    """
    _check_cap(n, cap)
    total = 0
    fixed = tuple(range(1, k + 1))
    optional = tuple(range(k + 1, n + 1))
    for extra_size in range(len(optional) + 1):
        for extra in combinations(optional, extra_size):
            S = fixed + extra
            if j > len(S):
                continue
            parts = list(ordered_partitions(S))
            for black in _colourings(S, j):
                for pi in parts:
                    good = True
                    for idx, b in enumerate(pi.blocks):
                        mono = b <= black or not (b & black)
                        if mono and not (idx == 0 and b <= black and max(b) <= k):
                            good = False
                            break
                    if good:
                        total += 1
    return total
