"""The star-reduction Prüfer codec.

Instead of deleting hyperedges, this codec merges them: the hyperstar of
the smallest non-leaf v (all hyperedges containing v) collapses into a
single hyperedge, v becomes a leaf, and the letters equal to v land at
the positions of the hyperedges marked v within the ordered list of
hyperedges avoiding v.  The base case is a hyperstar centered at the
root, encoded as root^(k-1).  The vertex set never changes, which is
what lets the construction extend to halfline trees (see permline).

Two encoders are provided: ``encode_star`` executes the definition on
explicit marked-hyperedge lists, while ``encode_star_incremental`` (the
production encoder) evolves only the partition map and the glue map of
the successive reductions.  They are differentially tested against each
other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classic import STAR, PruferCode, _check_code
from .core import (
    MarkedHyperedge,
    PruferPartition,
    RootedHypertree,
    Vertex,
    glue_map,
    mark,
    partition_map,
    prufer_partition,
    validate,
)


@dataclass(frozen=True)
class StarStep:
    """One pivot of the star encoder.

    ``ev`` lists, ordered by smallest unmarked element, the hyperedges of
    the current reduction whose reduced part avoids the pivot; ``sv``
    holds the 1-based positions in ``ev`` carrying the pivot as marked
    vertex (one per hyperedge glued to the pivot, i.e. deg(pivot) - 1
    entries).
    """

    pivot: Vertex
    ev: tuple[MarkedHyperedge, ...]
    sv: tuple[int, ...]


def star_steps(tree: RootedHypertree) -> tuple[StarStep, ...]:
    """Pivot trace of the star encoder, one step per non-root non-leaf.

    Works on the marked-hyperedge list directly: merging the hyperedges
    that contain the pivot does not disturb the marking of the others,
    so no re-traversal of the tree is needed.
    """
    state = list(mark(tree))
    root = tree.root
    steps = []
    while True:
        pivots = sorted(m.marked for m in state if m.marked != root)
        if not pivots:
            return tuple(steps)
        v = pivots[0]
        own = next(m for m in state if v in m.reduced)
        ev = tuple(m for m in state if m is not own)
        sv = tuple(j + 1 for j, m in enumerate(ev) if m.marked == v)
        steps.append(StarStep(v, ev, sv))

        absorbed = [m for m in ev if m.marked == v]
        union = set(own.reduced)
        for m in absorbed:
            union.update(m.reduced)
            union.add(m.marked)
        merged = MarkedHyperedge(tuple(sorted(union)), own.marked)
        state = [m for m in state if m is not own and m.marked != v]
        state.append(merged)
        state.sort(key=lambda m: m.reduced[0])


def encode_star(tree: RootedHypertree) -> PruferCode:
    """Star-reduction Prüfer word, by direct execution of the definition."""
    partition = prufer_partition(tree)
    k = len(partition.parts)
    word: list[Vertex] = [tree.root] * max(k - 1, 0)
    slots = list(range(max(k - 1, 0)))
    for step in star_steps(tree):
        hit = set(step.sv)
        for pos in step.sv:
            word[slots[pos - 1]] = step.pivot
        slots = [s for j, s in enumerate(slots, start=1) if j not in hit]
    return PruferCode(partition, tuple(word), STAR)


@dataclass(frozen=True)
class IncrementalStep:
    """State after one pivot of the incremental encoder.

    ``merged_min`` is the minimum of the merged reduced hyperedge;
    ``positions`` are the 1-based slots (within the hyperedges avoiding
    the pivot) that received the pivot letter; ``p`` and ``g`` snapshot
    the partition map and glue map of the reduction so far.
    """

    pivot: Vertex
    merged_min: Vertex
    positions: tuple[int, ...]
    p: dict[Vertex, Vertex]
    g: dict[Vertex, Vertex]


def _run_incremental(tree: RootedHypertree, want_trace: bool):
    partition = prufer_partition(tree)
    k = len(partition.parts)
    word: list[Vertex] = [tree.root] * max(k - 1, 0)
    slots = list(range(max(k - 1, 0)))

    p = partition_map(partition)
    members: dict[Vertex, set[Vertex]] = {q[0]: set(q) for q in partition.parts}
    g = glue_map(tree)
    del g[tree.root]
    g_inv: dict[Vertex, set[Vertex]] = {}
    for v, w in g.items():
        g_inv.setdefault(w, set()).add(v)

    trace: list[IncrementalStep] = []
    for i in sorted(p):
        preimage = g_inv.pop(i, None)
        if not preimage:
            continue
        # letters: hyperedges avoiding i correspond to the parts other
        # than i's own; their marked vertices are the g-values of the
        # part representatives
        reps = sorted(members)
        ev_reps = [r for r in reps if r != p[i]]
        hit = {j for j, r in enumerate(ev_reps, start=1) if g[r] == i}
        for j in hit:
            word[slots[j - 1]] = i
        slots = [s for j, s in enumerate(slots, start=1) if j not in hit]

        # merge i's part with every part glued to i ...
        move = {p[i]} | {p[v] for v in preimage}
        a = min(move)
        pooled: set[Vertex] = set()
        for r in move:
            pooled |= members.pop(r)
        members[a] = pooled
        for v in pooled:
            p[v] = a
        # ... and redirect the glue map of the absorbed parts
        target = g[i]
        for v in preimage:
            g[v] = target
        g_inv.setdefault(target, set()).update(preimage)
        if want_trace:
            trace.append(IncrementalStep(i, a, tuple(sorted(hit)), dict(p), dict(g)))

    code = PruferCode(partition, tuple(word), STAR)
    return code, tuple(trace)


def encode_star_incremental(tree: RootedHypertree) -> PruferCode:
    """Star-reduction Prüfer word via the evolving partition/glue maps.

    Same contract as :func:`encode_star`; this is the production
    encoder.  At each pivot i, the part of i merges with all parts glued
    to i (their new representative is the minimum of the union) and the
    glue values pointing at i are redirected to g(i).
    """
    code, _ = _run_incremental(tree, want_trace=False)
    return code


def incremental_trace(tree: RootedHypertree) -> tuple[IncrementalStep, ...]:
    """Per-pivot snapshots of the incremental encoder's maps."""
    _, trace = _run_incremental(tree, want_trace=True)
    return trace


def decode_star(code: PruferCode) -> RootedHypertree:
    """Rebuild the unique tree whose star code is ``code``.

    If every letter equals the root the code describes the hyperstar
    whose reduced hyperedges are the parts.  Otherwise the smallest
    non-root letter v, occurring a times, marks the parts at the
    corresponding positions among the parts avoiding v; those parts
    merge with v's own part, the letters disappear, and the marked
    vertex of v's own part is inherited from the merged part of the
    smaller code.
    """
    _check_code(code)
    root = code.root
    if not code.partition.parts:
        return validate(root, [])

    parts = [frozenset(q) for q in code.partition.parts]
    marked = _assign_marks(parts, list(code.word), root)
    edges = [tuple(sorted(q | {marked[q]})) for q in parts]
    return validate(root, edges)


def _assign_marks(parts: list[frozenset[Vertex]], word: list[Vertex], root: Vertex) -> dict[frozenset[Vertex], Vertex]:
    nonroot = [w for w in word if w != root]
    if not nonroot:
        return {q: root for q in parts}
    v = min(nonroot)
    positions = [j for j, w in enumerate(word) if w == v]
    own = next(q for q in parts if v in q)
    others = [q for q in parts if v not in q]
    absorbed = [others[j] for j in positions]

    merged = own.union(*absorbed)
    hit = set(positions)
    rest = [q for j, q in enumerate(others) if j not in hit]
    sub_parts = sorted(rest + [merged], key=min)
    sub_word = [w for w in word if w != v]

    sub = _assign_marks(sub_parts, sub_word, root)
    out = {q: sub[q] for q in rest}
    out[own] = sub[merged]
    for q in absorbed:
        out[q] = v
    return out
