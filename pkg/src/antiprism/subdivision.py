"""Triangulation constructors together with their carrier maps.

Every constructor labels new vertices deterministically (see
:mod:`antiprism.labels`), so complexes built in different ways can be compared
with plain equality instead of an isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .complex import SimplicialComplex, cone
from .enumeration import DEFAULT_ENUM_CAP, multipointed_partitions
from .errors import MalformedInputError, NotAFaceError
from .labels import (Antipode, FaceLabel, PointedFace, format_label, label_carrier,
                     label_key, sort_face)


@dataclass
class CarrierMap:
    """Carriers of the vertices of a subdivision; faces get the union."""

    vertex_carriers: dict = field(default_factory=dict)

    def __getitem__(self, v) -> frozenset:
        return self.vertex_carriers[v]

    def carrier(self, face: Iterable) -> frozenset:
        out: frozenset = frozenset()
        for v in face:
            out = out | self.vertex_carriers[v]
        return out

    def restricted(self, vertices: Iterable) -> "CarrierMap":
        return CarrierMap({v: self.vertex_carriers[v] for v in vertices})

    def to_json(self) -> dict[str, list[str]]:
        keys = sorted(self.vertex_carriers, key=label_key)
        return {format_label(v): [format_label(u) for u in sort_face(self.vertex_carriers[v])]
                for v in keys}

    @classmethod
    def from_labels(cls, vertices: Iterable) -> "CarrierMap":
        """Read carriers off structured labels; base labels carry themselves."""
        return cls({v: label_carrier(v) for v in vertices})

    @classmethod
    def identity(cls, vertices: Iterable) -> "CarrierMap":
        return cls({v: frozenset([v]) for v in vertices})


def restriction(sub: SimplicialComplex, cm: CarrierMap, F: Iterable) -> SimplicialComplex:
    """Faces of ``sub`` whose carrier lies in ``F``.

    Carriers are unions of vertex carriers, so this is the subcomplex induced
    on the vertices carried by ``F``.
    """
    F = frozenset(F)
    keep = [v for v in sub.vertices if cm[v] <= F]
    return sub.induced(keep)


# barycentric subdivision


def barycentric(c: SimplicialComplex) -> tuple[SimplicialComplex, CarrierMap]:
    """Order complex of the nonempty faces; a chain is carried by its top element."""
    chains = []
    for facet in c.facets:
        verts = sort_face(facet)
        if not verts:
            chains.append(frozenset())
            continue
        for perm in permutations(verts):
            chains.append(frozenset(FaceLabel(perm[:i]) for i in range(1, len(perm) + 1)))
    sub = SimplicialComplex(chains)
    return sub, CarrierMap.from_labels(sub.vertices)


# antiprism triangulation: the pointed-face graph


def antiprism_adjacent(p: PointedFace, q: PointedFace) -> bool:
    """Edge relation of the graph whose clique complex is the antiprism triangulation."""
    F, G = frozenset(p.face), frozenset(q.face)
    if F == G:
        return p.point != q.point
    if F < G:
        return q.point not in F
    if G < F:
        return p.point not in G
    return False


def pointed_faces(c: SimplicialComplex) -> list[PointedFace]:
    out = []
    for k in range(c.dim + 1):
        for face in c.faces_of_dim(k):
            out.extend(PointedFace(face, v) for v in face)
    return out


def _maximal_cliques(vertices: list, nbrs: Mapping) -> list[frozenset]:
    """Bron–Kerbosch with pivoting; cliques are returned as frozensets."""
    out: list[frozenset] = []

    def expand(R: frozenset, P: set, X: set):
        if not P and not X:
            out.append(R)
            return
        pivot = max(P | X, key=lambda u: len(nbrs[u] & P))
        for v in sorted(P - nbrs[pivot], key=label_key):
            expand(R | {v}, P & nbrs[v], X & nbrs[v])
            P = P - {v}
            X = X | {v}

    expand(frozenset(), set(vertices), set())
    return out


def antiprism_triangulation(c: SimplicialComplex) -> tuple[SimplicialComplex, CarrierMap]:
    """Clique complex of the pointed-face graph of ``c``."""
    if c.is_empty():
        return SimplicialComplex.empty(), CarrierMap()
    if c.is_void():
        return SimplicialComplex.from_facets([]), CarrierMap()
    verts = pointed_faces(c)
    # two pointed faces can only be adjacent if their faces are comparable,
    # so candidates are gathered per facet of c
    nbrs: dict = {v: set() for v in verts}
    by_facet: dict = {}
    for v in verts:
        for i in c._index[v.point]:
            if frozenset(v.face) <= c.facets[i]:
                by_facet.setdefault(i, []).append(v)
    for group in by_facet.values():
        for p, q in combinations(group, 2):
            if q not in nbrs[p] and antiprism_adjacent(p, q):
                nbrs[p].add(q)
                nbrs[q].add(p)
    nbrs = {v: frozenset(s) for v, s in nbrs.items()}
    sub = SimplicialComplex(_maximal_cliques(verts, nbrs), _absorbed=True)
    return sub, CarrierMap.from_labels(sub.vertices)


def partition_face(pi_blocks, tau) -> frozenset:
    """Vertex set ``{(B_1 ∪ ... ∪ B_i, v) : v ∈ C_i}`` of a multi-pointed ordered partition."""
    verts = []
    acc: frozenset = frozenset()
    for b, c in zip(pi_blocks, tau):
        acc = acc | b
        verts.extend(PointedFace(acc, v) for v in c)
    return frozenset(verts)


def antiprism_from_partitions(c: SimplicialComplex, cap: int = DEFAULT_ENUM_CAP
                              ) -> SimplicialComplex:
    """Antiprism triangulation assembled from multi-pointed ordered partitions of all faces."""
    if c.is_empty():
        return SimplicialComplex.empty()
    faces = []
    for face in c.faces():
        if not face:
            continue
        for obj in multipointed_partitions(face, cap=cap):
            faces.append(partition_face(obj.pi.blocks, obj.tau))
    return SimplicialComplex(faces) if faces else SimplicialComplex.from_facets([])


# antiprism constructions over boundary triangulations


def _resolve_carrier(c: SimplicialComplex, V: frozenset, carrier: CarrierMap | None,
                     what: str) -> CarrierMap:
    if carrier is None:
        carrier = CarrierMap.from_labels(c.vertices)
        if any(not carrier[v] <= V for v in c.vertices):
            raise MalformedInputError(f"{what}: no restriction map to the faces of the simplex")
        return carrier
    missing = [v for v in c.vertices if v not in carrier.vertex_carriers]
    if missing:
        raise MalformedInputError(f"{what}: vertices without carrier: {missing[:3]!r}")
    return carrier


def antiprism_over(bd: SimplicialComplex, V: Iterable, carrier: CarrierMap | None = None,
                   new_vertex=None) -> tuple[SimplicialComplex, CarrierMap]:
    """The antiprism ``Γ_A(bd)`` over a triangulation ``bd`` of the boundary of ``2^V``.

    ``new_vertex(v)`` names the new vertex paired with ``v`` (default
    ``PointedFace(V, v)``). When ``carrier`` is omitted it is read from the
    vertex labels, which must then all be carried inside ``V``.
    """
    V = sort_face(V)
    Vset = frozenset(V)
    cm = _resolve_carrier(bd, Vset, carrier, "antiprism_over")
    if new_vertex is None:
        def new_vertex(v):
            return PointedFace(V, v)
    U = {v: new_vertex(v) for v in V}
    if set(U.values()) & bd.vertices:
        raise MalformedInputError("new vertices collide with the boundary triangulation")
    facets = list(bd.facets)
    for size in range(1, len(V) + 1):
        for I in combinations(V, size):
            E = frozenset(U[v] for v in I)
            rest = Vset - frozenset(I)
            for G in restriction(bd, cm, rest).facets:
                facets.append(E | G)
    out = SimplicialComplex(facets)
    vc = dict(cm.vertex_carriers)
    vc.update({u: Vset for u in U.values()})
    return out, CarrierMap({v: vc[v] for v in out.vertices})


def antiprism_sphere(g: SimplicialComplex, V: Iterable,
                     carrier: CarrierMap | None = None) -> SimplicialComplex:
    """``Δ_A(g) = g ∪ Γ_A(∂g)`` with new vertices ``~v`` opposite to ``v``."""
    V = sort_face(V)
    cm = _resolve_carrier(g, frozenset(V), carrier, "antiprism_sphere")
    bd = g.boundary()
    gamma, _ = antiprism_over(bd, V, cm.restricted(bd.vertices), new_vertex=Antipode)
    return SimplicialComplex(list(g.facets) + list(gamma.facets))


# stellar subdivisions and crossing operations


def _check_subdividable(c: SimplicialComplex, F) -> frozenset:
    F = frozenset(F)
    if F not in c:
        raise NotAFaceError(f"{sort_face(F)!r} is not a face")
    if len(F) < 2:
        raise MalformedInputError("subdivision requires a face of dimension at least 1")
    return F


def stellar_subdivision(c: SimplicialComplex, F) -> SimplicialComplex:
    """Replace ``star(F)`` by ``link(F) * ({F} * ∂(2^F))`` with new vertex ``{F}``."""
    F = _check_subdividable(c, F)
    w = FaceLabel(F)
    facets = []
    for G in c.facets:
        if F <= G:
            for x in F:
                facets.append((G - F) | (F - {x}) | {w})
        else:
            facets.append(G)
    return SimplicialComplex(facets)


def crossing_operation(c: SimplicialComplex, F) -> SimplicialComplex:
    """Replace ``star(F)`` by ``link(F) * Γ_A(∂(2^F))``; new vertices ``(F, i)``."""
    F = _check_subdividable(c, F)
    Fs = sort_face(F)
    facets = []
    for G in c.facets:
        if F <= G:
            L = G - F
            for size in range(1, len(Fs) + 1):
                for I in combinations(Fs, size):
                    E = frozenset(PointedFace(Fs, i) for i in I)
                    facets.append(L | E | (F - frozenset(I)))
        else:
            facets.append(G)
    return SimplicialComplex(facets)


def crossing_order(c: SimplicialComplex) -> list[tuple]:
    """Faces of dimension >= 1 by decreasing dimension, lexicographic within a dimension."""
    order = []
    for k in range(c.dim, 0, -1):
        order.extend(c.faces_of_dim(k))
    return order


def antiprism_by_crossings(c: SimplicialComplex) -> tuple[SimplicialComplex, CarrierMap]:
    """Antiprism triangulation from iterated crossing operations.

    Surviving base vertices ``v`` are finally renamed ``({v}, v)`` so the result
    is literally equal to :func:`antiprism_triangulation`.
    """
    cur = c
    for F in crossing_order(c):
        cur = crossing_operation(cur, F)
    rename = {v: PointedFace((v,), v) for v in c.vertices}
    out = SimplicialComplex([frozenset(rename.get(v, v) for v in f) for f in cur.facets])
    return out, CarrierMap.from_labels(out.vertices)


# contraction of interior vertices


def interior_vertices(sub: SimplicialComplex, cm: CarrierMap, V: Iterable) -> list:
    V = frozenset(V)
    return sorted((v for v in sub.vertices if cm[v] == V), key=label_key)


@dataclass
class ContractionStep:
    edge: tuple
    link_condition: bool
    strong_link_after: bool


@dataclass
class ContractionRun:
    steps: list[ContractionStep]
    initial_strong_link: bool
    result: SimplicialComplex
    reaches_cone: bool

    @property
    def ok(self) -> bool:
        return (self.initial_strong_link and self.reaches_cone
                and all(s.link_condition and s.strong_link_after for s in self.steps))


def contract_to_cone(sub: SimplicialComplex, U: Iterable) -> ContractionRun:
    """Contract the edges ``{u_(m-1), u_m}`` of the face ``U`` one at a time.

    ``U`` is sorted by label; at each step the two largest remaining vertices
    are merged into the smaller one. Records the Link Condition for each edge
    and the strong Link Condition for the shrunken face after each step, and
    whether the final complex is the cone over the boundary of ``sub``.
    """
    U = sort_face(U)
    if not U:
        raise MalformedInputError("nothing to contract")
    initial = sub.strong_link_condition(U)
    bd = sub.boundary()
    cur = sub
    steps = []
    remaining = list(U)
    while len(remaining) > 1:
        a, b = remaining[-2], remaining[-1]
        lc = cur.link_condition((a, b))
        cur = cur.contract_edge((a, b))
        remaining.pop()
        steps.append(ContractionStep((a, b), lc, cur.strong_link_condition(remaining)))
    reaches = cur == cone(remaining[0], bd)
    return ContractionRun(steps, initial, cur, reaches)
