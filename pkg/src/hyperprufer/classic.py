"""The classical Prüfer codec for rooted hypertrees.

Encoding repeatedly removes the smallest hyperedge of leaf-type (a
hyperedge whose reduced part consists of leaves) and writes down its
marked vertex, stopping when a single hyperedge remains.  Decoding scans
the partition for the smallest part disjoint from the remaining word and
attaches the current letter as its marked vertex.  Together with the
partition of non-root vertices into reduced hyperedges, the word
determines the tree uniquely; every vertex of degree a, the root
included, occurs a - 1 times in the word.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

from .core import (
    PruferPartition,
    RootedHypertree,
    Vertex,
    is_leaf_type,
    mark,
    prufer_partition,
    validate,
)
from .errors import LengthMismatch, LetterOutOfRange

CLASSIC = "classic"
STAR = "star"


@dataclass(frozen=True)
class PruferCode:
    """A (partition, word) pair produced by either codec.

    The word has length (number of parts) - 1, except for the degenerate
    single-vertex tree where both are empty; every letter is a covered
    vertex or the root.
    """

    partition: PruferPartition
    word: tuple[Vertex, ...]
    variant: str

    @property
    def root(self) -> Vertex:
        return self.partition.root


def _check_code(code: PruferCode) -> None:
    k = len(code.partition.parts)
    if len(code.word) != max(k - 1, 0):
        raise LengthMismatch(f"word length {len(code.word)} != number of parts - 1 = {k - 1}")
    alphabet = code.partition.covered | {code.root}
    for w in code.word:
        if w not in alphabet:
            raise LetterOutOfRange(f"letter {w} is not a vertex of the tree")


def encode_classic(tree: RootedHypertree) -> PruferCode:
    """Prüfer word by successive removal of smallest leaf-type hyperedges.

    Keeps a count of marked-vertex occurrences per vertex, so the
    leaf-type test is O(1) amortized; a heap of the currently leaf-type
    parts keyed by minimum element yields the removal order.
    """
    marked = mark(tree)
    k = len(marked)
    partition = prufer_partition(tree)
    if k <= 1:
        return PruferCode(partition, (), CLASSIC)

    marked_count: Counter[Vertex] = Counter(m.marked for m in marked)
    part_of: dict[Vertex, int] = {}
    blocked = [0] * k
    for j, m in enumerate(marked):
        for v in m.reduced:
            part_of[v] = j
            if marked_count[v]:
                blocked[j] += 1
    ready = [m.reduced[0] for j, m in enumerate(marked) if blocked[j] == 0]
    heapq.heapify(ready)

    word = []
    removed = [False] * k
    for _ in range(k - 1):
        j = part_of[heapq.heappop(ready)]
        removed[j] = True
        m = marked[j]
        word.append(m.marked)
        marked_count[m.marked] -= 1
        if marked_count[m.marked] == 0 and m.marked in part_of:
            i = part_of[m.marked]
            blocked[i] -= 1
            if blocked[i] == 0 and not removed[i]:
                heapq.heappush(ready, marked[i].reduced[0])
    return PruferCode(partition, tuple(word), CLASSIC)


def _encode_classic_rescan(tree: RootedHypertree) -> PruferCode:
    """Reference encoder: re-scan the hyperedge list for the first
    leaf-type hyperedge on every round.  Kept for differential testing."""
    partition = prufer_partition(tree)
    current = tree
    word = []
    while current.k > 1:
        for m in mark(current):
            if is_leaf_type(current, m):
                word.append(m.marked)
                rest = [e for e in current.edges if e != m.full()]
                current = validate(current.root, rest)
                break
    return PruferCode(partition, tuple(word), CLASSIC)


def decode_classic(code: PruferCode) -> RootedHypertree:
    """Rebuild the unique tree whose classic code is ``code``.

    The word, augmented by a final root letter, is consumed left to
    right; each letter becomes the marked vertex of the smallest
    remaining part disjoint from the remaining word.  Such a part always
    exists, for any word over the vertex set.
    """
    _check_code(code)
    parts = code.partition.parts
    root = code.root
    k = len(parts)
    if k == 0:
        return validate(root, [])

    letters = list(code.word) + [root]
    counts: Counter[Vertex] = Counter(letters)
    part_of: dict[Vertex, int] = {}
    blocked = [0] * k
    for j, p in enumerate(parts):
        for v in p:
            part_of[v] = j
            if counts[v]:
                blocked[j] += 1
    ready = [p[0] for j, p in enumerate(parts) if blocked[j] == 0]
    heapq.heapify(ready)

    used = [False] * k
    edges = []
    for w in letters:
        j = part_of[heapq.heappop(ready)]
        used[j] = True
        edges.append(parts[j] + (w,))
        counts[w] -= 1
        if counts[w] == 0 and w in part_of:
            i = part_of[w]
            blocked[i] -= 1
            if blocked[i] == 0 and not used[i]:
                heapq.heappush(ready, parts[i][0])
    return validate(root, edges)
