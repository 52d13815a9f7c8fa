"""Finite abstract simplicial complexes stored by their facets.

Faces are ``frozenset`` objects internally and sorted tuples on output. The
void complex ``{∅}`` (one empty face, no vertices) and the empty complex (no
faces at all) are different objects: ``from_facets([])`` gives the former,
``SimplicialComplex.empty()`` the latter.
"""

from __future__ import annotations

import warnings
from collections import Counter, defaultdict
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import CapacityError, DisjointnessError, MalformedInputError, NotAFaceError
from .labels import face_key, format_label, label_key, sort_face
from .poly import IntPolynomial, expand_face_counts

DEFAULT_SHELL_CAP = 12


def _absorb(sets: list[frozenset]) -> list[frozenset]:
    """Drop every set contained in another one (and duplicates)."""
    uniq = sorted(set(sets), key=len, reverse=True)
    if not uniq:
        return []
    if len(uniq[0]) == len(uniq[-1]):
        return uniq
    kept: list[frozenset] = []
    by_vertex: dict = defaultdict(list)
    for s in uniq:
        if s:
            pools = [by_vertex.get(v, ()) for v in s]
            smallest = min(pools, key=len)
            if any(s <= kept[i] for i in smallest):
                continue
        elif kept:
            continue
        idx = len(kept)
        kept.append(s)
        for v in s:
            by_vertex[v].append(idx)
    return kept


class SimplicialComplex:
    """A finite simplicial complex given by its inclusion-maximal faces."""

    def __init__(self, facets: Iterable[frozenset], _absorbed: bool = False):
        fs = list(facets) if _absorbed else _absorb([frozenset(f) for f in facets])
        self._facets = tuple(sorted(fs, key=face_key))
        self.vertices = frozenset().union(*self._facets) if self._facets else frozenset()
        index = defaultdict(list)
        for i, f in enumerate(self._facets):
            for v in f:
                index[v].append(i)
        self._index = dict(index)

    # construction

    @classmethod
    def from_facets(cls, facet_list: Iterable[Iterable]) -> "SimplicialComplex":
        sets = []
        for raw in facet_list:
            raw = list(raw)
            s = frozenset(raw)
            if len(s) != len(raw):
                raise MalformedInputError(f"duplicate vertex in facet {raw!r}")
            for v in s:
                label_key(v)
            sets.append(s)
        if not sets:
            sets = [frozenset()]
        return cls(sets)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex with no faces at all (not even the empty face)."""
        return cls([], _absorbed=True)

    @classmethod
    def simplex(cls, vertices) -> "SimplicialComplex":
        if isinstance(vertices, int):
            vertices = range(1, vertices + 1)
        return cls.from_facets([list(vertices)])

    @classmethod
    def simplex_boundary(cls, vertices) -> "SimplicialComplex":
        if isinstance(vertices, int):
            vertices = range(1, vertices + 1)
        vs = list(vertices)
        return cls.from_facets([c for c in combinations(vs, len(vs) - 1)])

    # basic structure

    @property
    def facets(self) -> tuple:
        return self._facets

    def sorted_facets(self) -> list[tuple]:
        return [sort_face(f) for f in self._facets]

    def is_empty(self) -> bool:
        return not self._facets

    def is_void(self) -> bool:
        return self._facets == (frozenset(),)

    @property
    def dim(self) -> int:
        if not self._facets:
            return -2
        return max(len(f) for f in self._facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        if not self._facets:
            return False
        if not face:
            return True
        pools = []
        for v in face:
            pool = self._index.get(v)
            if pool is None:
                return False
            pools.append(pool)
        return any(face <= self._facets[i] for i in min(pools, key=len))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self._facets) == set(other._facets)

    def __hash__(self):
        return hash(frozenset(self._facets))

    def __repr__(self):
        body = ", ".join(
            "{" + ",".join(format_label(v) for v in f) + "}" for f in self.sorted_facets()[:6])
        more = ", ..." if len(self._facets) > 6 else ""
        return f"SimplicialComplex([{body}{more}])"

    # faces

    @cached_property
    def _faces_by_size(self) -> dict[int, frozenset]:
        by_size: dict[int, set] = defaultdict(set)
        if self._facets:
            by_size[0].add(frozenset())
        for f in self._facets:
            for k in range(1, len(f) + 1):
                by_size[k].update(frozenset(c) for c in combinations(f, k))
        return {k: frozenset(v) for k, v in by_size.items()}

    def faces(self) -> set[frozenset]:
        out: set = set()
        for s in self._faces_by_size.values():
            out |= s
        return out

    def face_count(self) -> int:
        return sum(len(s) for s in self._faces_by_size.values())

    def faces_of_dim(self, k: int) -> Iterator[tuple]:
        """Faces of dimension ``k`` in lexicographic order; empty if out of range."""
        faces = self._faces_by_size.get(k + 1, ())
        return iter(sorted((sort_face(f) for f in faces), key=lambda t: [label_key(v) for v in t]))

    def f_vector(self) -> tuple[int, ...]:
        """``(f_-1, f_0, ..., f_dim)``."""
        if not self._facets:
            return ()
        return tuple(len(self._faces_by_size.get(k, ())) for k in range(self.dim + 2))

    def h_polynomial(self, n: int | None = None) -> IntPolynomial:
        """h-polynomial computed from the f-vector with ``n = dim + 1`` by default.

        Non-pure input triggers a ``UserWarning`` but is still evaluated.
        """
        if n is None:
            if not self.is_pure():
                warnings.warn("h-polynomial of a non-pure complex", UserWarning, stacklevel=2)
            n = self.dim + 1
        return h_from_f(self.f_vector(), n)

    def h_polynomial_from_faces(self, n: int | None = None) -> IntPolynomial:
        """Same polynomial via ``sum_F x^|F| (1-x)^(n-|F|)`` over all faces."""
        n = self.dim + 1 if n is None else n
        sizes = Counter(len(f) for f in self.faces())
        counts = [sizes.get(i, 0) for i in range(max(sizes, default=-1) + 1)]
        return expand_face_counts(counts, n)

    # standard constructions

    def _require_face(self, face) -> frozenset:
        face = frozenset(face)
        if face not in self:
            raise NotAFaceError(f"{sort_face(face)!r} is not a face of the complex")
        return face

    def link(self, face) -> "SimplicialComplex":
        face = self._require_face(face)
        return SimplicialComplex([f - face for f in self._facets if face <= f])

    def star(self, face) -> "SimplicialComplex":
        face = self._require_face(face)
        return SimplicialComplex([f for f in self._facets if face <= f], _absorbed=True)

    def induced(self, vertices) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset."""
        w = frozenset(vertices)
        return SimplicialComplex([f & w for f in self._facets])

    def boundary(self) -> "SimplicialComplex":
        """Complex generated by the proper faces lying in exactly one facet."""
        if not self.is_pure():
            raise MalformedInputError("boundary requires a pure complex")
        ridges = Counter()
        for f in self._facets:
            for v in f:
                ridges[f - {v}] += 1
        return SimplicialComplex.from_facets([r for r, c in ridges.items() if c == 1])

    def interior_faces(self) -> set[frozenset]:
        bd = self.boundary()
        return {f for f in self.faces() if f not in bd}

    def interior_h_polynomial(self) -> IntPolynomial:
        n = self.dim + 1
        sizes = Counter(len(f) for f in self.interior_faces())
        counts = [sizes.get(i, 0) for i in range(n + 1)]
        return expand_face_counts(counts, n)

    # shellability

    def is_shellable(self, cap: int = DEFAULT_SHELL_CAP):
        """Decide shellability by exhaustive backtracking over facet orders.

        Returns ``(True, order)`` with a shelling order of sorted facets, or
        ``(False, None)``. Raises :class:`CapacityError` when the facet count
        exceeds ``cap``.
        """
        if not self.is_pure():
            raise MalformedInputError("shellability is only decided for pure complexes")
        m = len(self._facets)
        if m > cap:
            raise CapacityError(f"{m} facets exceed the shelling bound {cap}")
        facets = self._facets
        dead: set[frozenset] = set()

        def extend(order: list[int], used: frozenset):
            if len(order) == m:
                return order
            if used in dead:
                return None
            prev = [facets[i] for i in order]
            for j in range(m):
                if j not in used and shelling_step_ok(prev, facets[j]):
                    found = extend(order + [j], used | {j})
                    if found is not None:
                        return found
            dead.add(used)
            return None

        order = extend([], frozenset())
        if order is None:
            return False, None
        return True, [sort_face(facets[i]) for i in order]

    # edge contraction and link conditions

    def contract_edge(self, edge, keep=None) -> "SimplicialComplex":
        """Identify the endpoint ``b`` of ``edge`` with the endpoint ``a`` that is kept.

        By default the smaller label survives.
        """
        e = frozenset(edge)
        if len(e) != 2:
            raise MalformedInputError(f"{sort_face(e)!r} is not an edge")
        self._require_face(e)
        a, b = sort_face(e)
        if keep is not None:
            if keep not in e:
                raise MalformedInputError(f"{keep!r} is not an endpoint of the edge")
            if keep == b:
                a, b = b, a
        return SimplicialComplex([(f - {b}) | {a} if b in f else f for f in self._facets])

    def link_faces(self, face) -> set[frozenset]:
        return self.link(face).faces()

    def link_condition(self, edge) -> bool:
        e = frozenset(edge)
        if len(e) != 2:
            raise MalformedInputError(f"{sort_face(e)!r} is not an edge")
        a, b = sort_face(e)
        return self.link_faces(e) == self.link_faces({a}) & self.link_faces({b})

    def strong_link_condition(self, face) -> bool:
        """Check ``link(F) ∩ link(G) = link(F ∪ G)`` for all disjoint ``F, G ⊆ face``."""
        U = sort_face(self._require_face(face))
        cache: dict = {}

        def lk(s):
            if s not in cache:
                cache[s] = self.link_faces(s)
            return cache[s]

        n = len(U)
        # label each vertex 0 (unused), 1 (in F), 2 (in G); F and G nonempty, F before G
        for mask in range(3 ** n):
            F, G, m = [], [], mask
            for u in U:
                m, r = divmod(m, 3)
                if r == 1:
                    F.append(u)
                elif r == 2:
                    G.append(u)
            if not F or not G or min(F, key=label_key) != min(F + G, key=label_key):
                continue
            F, G = frozenset(F), frozenset(G)
            if lk(F) & lk(G) != lk(F | G):
                return False
        return True


def shelling_step_ok(previous: list[frozenset], new: frozenset) -> bool:
    """Whether ``new`` can follow ``previous`` in a shelling of a pure complex.

    The faces of ``new`` not already present have a unique minimal element
    exactly when ``new ∩ ⟨previous⟩`` is generated by codimension-one faces of
    ``new`` (or ``previous`` is empty).
    """
    if not previous:
        return True
    ridges = [new - {v} for v in new]
    present = [r for r in ridges if any(r <= p for p in previous)]
    if not present:
        return False
    return all(any(new & p <= r for r in present) for p in previous)


def h_from_f(f: tuple[int, ...], n: int) -> IntPolynomial:
    """``h_i = sum_j (-1)^(i-j) C(n-j, i-j) f_(j-1)`` for ``i = 0..n``."""
    h = []
    for i in range(n + 1):
        total = 0
        for j in range(i + 1):
            fj = f[j] if j < len(f) else 0
            if fj:
                total += (-1) ** (i - j) * comb(n - j, i - j) * fj
        h.append(total)
    return IntPolynomial(h, nominal_degree=n)


def from_facets(facet_list) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facet_list)


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    if c1.vertices & c2.vertices:
        raise DisjointnessError("join requires disjoint vertex sets")
    return SimplicialComplex([f | g for f in c1.facets for g in c2.facets], _absorbed=True)


def cone(apex, c: SimplicialComplex) -> SimplicialComplex:
    if apex in c.vertices:
        raise DisjointnessError(f"apex {apex!r} already is a vertex")
    return join(SimplicialComplex.from_facets([[apex]]), c)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex([f for c in complexes for f in c.facets])
