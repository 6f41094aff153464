"""Rooted hypertrees and their basic structure theory.

A hypertree is a connected hypergraph (every hyperedge has at least two
vertices) in which the edge sizes attain the tree bound
sum(size(e)) = n + k - 1 for n vertices and k hyperedges.  Rooting it at
its largest vertex singles out, inside every hyperedge, the marked vertex
closest to the root; the remaining "reduced" parts partition the non-root
vertices.  This module provides validated construction, marking, the
partition and glue maps, distances and geodesics, the spine, the
edge-expansion to an ordinary tree, and star-reduction.

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    Disconnected,
    EdgeTooSmall,
    HypertreeError,
    NotATree,
    NotAnEdge,
    NotConstantOnPart,
    NotEventuallyRoot,
    NotIdempotent,
    NotLowering,
    RootNotMax,
    UnknownVertex,
)

Vertex = int
Edge = tuple[Vertex, ...]

# Partition maps and glue maps are plain finite dicts vertex -> vertex.
PartitionMap = dict[Vertex, Vertex]
GlueMap = dict[Vertex, Vertex]


@dataclass(frozen=True)
class RootedHypertree:
    """A finite rooted hypertree in canonical form.

    ``edges`` holds every hyperedge as an ascending vertex tuple; the
    edges themselves are ordered by their smallest unmarked vertex, the
    total order used throughout the codecs.  Build instances through
    :func:`validate`, which checks the tree equalities and normalizes
    the ordering; direct construction skips both.
    """

    root: Vertex
    edges: tuple[Edge, ...]

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        vs = {self.root}
        for e in self.edges:
            vs.update(e)
        return tuple(sorted(vs))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def k(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        if not self.edges:
            return f"root={self.root} (no hyperedges)"
        body = ", ".join(str(m) for m in mark(self))
        return f"root={self.root}: {body}"


@dataclass(frozen=True)
class MarkedHyperedge:
    """A hyperedge split into its reduced part and its marked vertex.

    The marked vertex is the unique vertex of the hyperedge closest to
    the root; it never belongs to ``reduced``.
    """

    reduced: tuple[Vertex, ...]
    marked: Vertex

    def full(self) -> Edge:
        return tuple(sorted(self.reduced + (self.marked,)))

    def __str__(self) -> str:
        return "{%s}_%d" % (",".join(map(str, self.reduced)), self.marked)


@dataclass(frozen=True)
class PruferPartition:
    """Ordered partition of the non-root vertices into reduced hyperedges.

    Parts are ascending tuples, listed by increasing minimum element.
    """

    parts: tuple[tuple[Vertex, ...], ...]
    root: Vertex

    @cached_property
    def covered(self) -> frozenset[Vertex]:
        return frozenset(v for p in self.parts for v in p)

    def __str__(self) -> str:
        return " u ".join("{%s}" % ",".join(map(str, p)) for p in self.parts)


def partition_from_parts(parts: Iterable[Iterable[Vertex]], root: Vertex) -> PruferPartition:
    """Normalize and check raw parts: non-empty, disjoint, all below the root."""
    norm = []
    seen: set[Vertex] = set()
    for p in parts:
        t = tuple(sorted(set(p)))
        if not t:
            raise HypertreeError("empty partition part")
        if seen.intersection(t):
            raise HypertreeError(f"overlapping partition parts at {sorted(seen.intersection(t))}")
        seen.update(t)
        norm.append(t)
    if seen and root <= max(seen):
        raise RootNotMax(f"root {root} is not larger than every covered vertex")
    norm.sort(key=lambda t: t[0])
    return PruferPartition(tuple(norm), root)


def _check_vertex_ids(vs: Iterable[int]) -> None:
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise HypertreeError(f"vertex ids must be positive integers, got {v!r}")


def _incidence(edges: tuple[Edge, ...]) -> dict[Vertex, list[int]]:
    inc: dict[Vertex, list[int]] = {}
    for i, e in enumerate(edges):
        for v in e:
            inc.setdefault(v, []).append(i)
    return inc


def _root_distances(root: Vertex, edges: tuple[Edge, ...]) -> dict[Vertex, int]:
    """BFS distances from the root over the vertex/hyperedge incidence."""
    inc = _incidence(edges)
    dist = {root: 0}
    used_edge = [False] * len(edges)
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for i in inc.get(v, ()):
            if used_edge[i]:
                continue
            used_edge[i] = True
            for u in edges[i]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
    return dist


def validate(root: Vertex, edges: Iterable[Iterable[Vertex]]) -> RootedHypertree:
    """Check raw input and return the canonical rooted hypertree.

    Accepts any collection of vertex sets.  Rejects edges of size < 2
    (EdgeTooSmall), a root that is not the maximum vertex (RootNotMax),
    disconnected input (Disconnected) and connected input with a cycle,
    i.e. strict inequality in the size bound (NotATree).  The degenerate
    single-vertex tree (no edges) is accepted.
    """
    _check_vertex_ids([root])
    canon: list[Edge] = []
    seen_edges: set[Edge] = set()
    for e in edges:
        t = tuple(sorted(set(e)))
        _check_vertex_ids(t)
        if len(t) < 2:
            raise EdgeTooSmall(f"hyperedge {t} has fewer than two vertices")
        if t in seen_edges:
            raise NotATree(f"duplicate hyperedge {t}")
        seen_edges.add(t)
        canon.append(t)

    vs = {root}
    for e in canon:
        vs.update(e)
    if root != max(vs):
        raise RootNotMax(f"root {root} is not the largest vertex {max(vs)}")

    dist = _root_distances(root, tuple(canon))
    if len(dist) < len(vs):
        missing = sorted(vs - dist.keys())
        raise Disconnected(f"vertices {missing} are not reachable from the root")

    n, k = len(vs), len(canon)
    total = sum(len(e) for e in canon)
    if total != n + k - 1:
        raise NotATree(f"sum of sizes {total} exceeds n + k - 1 = {n + k - 1}")

    def min_unmarked(e: Edge) -> Vertex:
        m = min(e, key=lambda v: (dist[v], v))
        return min(v for v in e if v != m)

    canon.sort(key=min_unmarked)
    return RootedHypertree(root, tuple(canon))


def degree(tree: RootedHypertree, v: Vertex) -> int:
    """Number of hyperedges containing ``v``."""
    if v not in tree.vertices:
        raise UnknownVertex(f"vertex {v} not in tree")
    return sum(1 for e in tree.edges if v in e)


def leaves(tree: RootedHypertree) -> tuple[Vertex, ...]:
    """Vertices of degree exactly one, ascending."""
    deg = {v: 0 for v in tree.vertices}
    for e in tree.edges:
        for v in e:
            deg[v] += 1
    return tuple(v for v in tree.vertices if deg[v] == 1)


def nonleaves(tree: RootedHypertree) -> tuple[Vertex, ...]:
    """Vertices of degree at least two, ascending."""
    deg = {v: 0 for v in tree.vertices}
    for e in tree.edges:
        for v in e:
            deg[v] += 1
    return tuple(v for v in tree.vertices if deg[v] >= 2)


def nonleaf_rank(tree: RootedHypertree) -> int:
    """Number of non-leaf vertices (the rank in the star-reduction poset)."""
    return len(nonleaves(tree))


def mark(tree: RootedHypertree) -> tuple[MarkedHyperedge, ...]:
    """Split every hyperedge into reduced part and marked vertex.

    The marked vertex of a hyperedge is its unique vertex closest to the
    root.  The output is ordered by the smallest vertex of the reduced
    part, matching the storage order of ``tree.edges``.
    """
    dist = _root_distances(tree.root, tree.edges)
    out = []
    for e in tree.edges:
        m = min(e, key=lambda v: (dist[v], v))
        out.append(MarkedHyperedge(tuple(v for v in e if v != m), m))
    return tuple(out)


def prufer_partition(tree: RootedHypertree) -> PruferPartition:
    """The partition of the non-root vertices into reduced hyperedges."""
    return PruferPartition(tuple(m.reduced for m in mark(tree)), tree.root)


def partition_map(partition: PruferPartition) -> PartitionMap:
    """Send every covered vertex to the minimum of its part."""
    return {v: p[0] for p in partition.parts for v in p}


def partition_from_map(mapping: Mapping[Vertex, Vertex], root: Vertex) -> PruferPartition:
    """Rebuild the partition whose parts are the fibers of the fix-points.

    The map must be idempotent and lowering; fails with NotIdempotent or
    NotLowering otherwise.  Inverse of :func:`partition_map`.
    """
    for x, y in mapping.items():
        if y > x:
            raise NotLowering(f"p({x}) = {y} > {x}")
        if y not in mapping or mapping[y] != y:
            raise NotIdempotent(f"p(p({x})) = p({y}) != p({x})")
    fibers: dict[Vertex, list[Vertex]] = {}
    for x, y in mapping.items():
        fibers.setdefault(y, []).append(x)
    return partition_from_parts(fibers.values(), root)


def glue_map(tree: RootedHypertree) -> GlueMap:
    """Send every vertex to the marked vertex of its hyperedge.

    Each non-root vertex lies in exactly one reduced hyperedge and is
    sent to that hyperedge's marked vertex; the root is a fixed point.
    Iterating the glue map from any vertex walks the geodesic to the
    root (up to repetitions of the root).
    """
    g = {tree.root: tree.root}
    for m in mark(tree):
        for v in m.reduced:
            g[v] = m.marked
    return g


def from_glue(partition: PruferPartition, g: Mapping[Vertex, Vertex]) -> RootedHypertree:
    """Reassemble the tree with the given partition and glue map.

    Every part becomes the hyperedge part + {g(part)}.  Fails with
    NotConstantOnPart if g takes two values on one part and with
    NotEventuallyRoot if some vertex never reaches the root under
    iteration (a cycle in g).  Inverse of
    (:func:`prufer_partition`, :func:`glue_map`).
    """
    root = partition.root
    for p in partition.parts:
        vals = {g.get(v) for v in p}
        if len(vals) != 1 or None in vals:
            raise NotConstantOnPart(f"glue map not constant on part {p}: {vals}")

    status: dict[Vertex, bool] = {root: g.get(root, root) == root}
    if not status[root]:
        raise NotEventuallyRoot(f"g({root}) = {g[root]} != root")
    for start in partition.covered:
        chain = []
        v = start
        while v not in status:
            if v in chain:
                raise NotEventuallyRoot(f"iteration from {start} cycles at {v} without reaching the root")
            chain.append(v)
            if v not in g:
                raise HypertreeError(f"glue map undefined at {v}")
            v = g[v]
        ok = status[v]
        for u in chain:
            status[u] = ok
        if not ok:
            raise NotEventuallyRoot(f"iteration from {start} never reaches the root")

    edges = [p + (g[p[0]],) for p in partition.parts]
    return validate(root, edges)


def geodesic(tree: RootedHypertree, v: Vertex, w: Vertex) -> tuple[tuple[Vertex, ...], tuple[Edge, ...]]:
    """Unique shortest path from v to w and the hyperedges it traverses.

    Returns (v_0 .. v_l, e_1 .. e_l) with {v_{i-1}, v_i} inside e_i.
    """
    for x in (v, w):
        if x not in tree.vertices:
            raise UnknownVertex(f"vertex {x} not in tree")
    if v == w:
        return (v,), ()
    inc = _incidence(tree.edges)
    prev: dict[Vertex, tuple[Vertex, int]] = {}
    seen = {v}
    used_edge = [False] * len(tree.edges)
    queue = deque([v])
    while queue and w not in seen:
        x = queue.popleft()
        for i in inc.get(x, ()):
            if used_edge[i]:
                continue
            used_edge[i] = True
            for u in tree.edges[i]:
                if u not in seen:
                    seen.add(u)
                    prev[u] = (x, i)
                    queue.append(u)
    if w not in seen:  # impossible for a validated tree
        raise Disconnected(f"no path from {v} to {w}")
    path = [w]
    eseq = []
    while path[-1] != v:
        x, i = prev[path[-1]]
        eseq.append(tree.edges[i])
        path.append(x)
    return tuple(reversed(path)), tuple(reversed(eseq))


def distance(tree: RootedHypertree, v: Vertex, w: Vertex) -> int | float:
    """Length of the shortest path from v to w (math.inf if unreachable,
    which cannot happen for a validated tree)."""
    try:
        path, _ = geodesic(tree, v, w)
    except Disconnected:
        return float("inf")
    return len(path) - 1


def spine(tree: RootedHypertree) -> tuple[RootedHypertree, dict[Vertex, Vertex]]:
    """Ordinary rooted tree over the partition parts, plus the projection.

    Each part is represented by its minimum element; the root keeps its
    id.  One edge {min(e'), pi(e_*)} per hyperedge.  The projection maps
    every vertex to the representative of its part (root to itself) and
    preserves root distances: d(pi(v), pi(r)) = d(v, r).
    """
    marked = mark(tree)
    proj = {tree.root: tree.root}
    for m in marked:
        for v in m.reduced:
            proj[v] = m.reduced[0]
    edges = [(m.reduced[0], proj[m.marked]) for m in marked]
    return validate(tree.root, edges), proj


def to_ordinary(tree: RootedHypertree) -> RootedHypertree:
    """Replace every hyperedge by size(e) - 1 ordinary edges {v, e_*}.

    Keeps the vertex set; root distances are preserved while general
    distances can only grow.
    """
    edges = [(v, m.marked) for m in mark(tree) for v in m.reduced]
    return validate(tree.root, edges)


def star_reduce(tree: RootedHypertree, v: Vertex) -> RootedHypertree:
    """Merge all hyperedges containing ``v`` into their union.

    Identity when v is a leaf; v is a leaf of the result.  Reductions at
    different vertices commute.
    """
    if v not in tree.vertices:
        raise UnknownVertex(f"vertex {v} not in tree")
    touched = [e for e in tree.edges if v in e]
    if len(touched) <= 1:
        return tree
    union: set[Vertex] = set()
    for e in touched:
        union.update(e)
    edges = [e for e in tree.edges if v not in e]
    edges.append(tuple(sorted(union)))
    return validate(tree.root, edges)


def star_reduce_set(tree: RootedHypertree, vs: Iterable[Vertex]) -> RootedHypertree:
    """Star-reduce at every vertex of ``vs`` (order is irrelevant)."""
    todo = sorted(set(vs))
    for v in todo:
        if v not in tree.vertices:
            raise UnknownVertex(f"vertex {v} not in tree")
    for v in todo:
        tree = star_reduce(tree, v)
    return tree


def is_leaf_type(tree: RootedHypertree, edge: MarkedHyperedge) -> bool:
    """True iff no vertex of the reduced part is marked in another hyperedge.

    Equivalently, every vertex of the reduced part is a leaf; these are
    the hyperedges the classic codec deletes.
    """
    marked = mark(tree)
    if edge not in marked:
        raise NotAnEdge(f"{edge} is not a marked hyperedge of the tree")
    others = {m.marked for m in marked if m != edge}
    return not others.intersection(edge.reduced)


def adjacency(tree: RootedHypertree) -> dict[Vertex, tuple[Vertex, ...]]:
    """Neighbour lists (vertices sharing a hyperedge), ascending."""
    inc = _incidence(tree.edges)
    out: dict[Vertex, tuple[Vertex, ...]] = {}
    for v in tree.vertices:
        ns: set[Vertex] = set()
        for i in inc.get(v, ()):
            ns.update(tree.edges[i])
        ns.discard(v)
        out[v] = tuple(sorted(ns))
    return out
