"""Halfline trees, finitely-supported permutations and ideal pairs.

A halfline hanging from the root visits the positive integers in some
order v_1, v_2, ...; when only finitely many integers leave their place
the order is a finitely-supported permutation.  The star codec of such a
tree is again a word in which every integer occurs exactly once, i.e.
another finitely-supported permutation, and the induced self-map of S_n
is a bijection compatible with the inclusions S_{n-1} into S_n.

The infinite tree is never materialized: the word is computed on finite
truncations of increasing depth until the answer stabilizes.

``validate_ideal_pair`` covers the finite-support part of the wider
theory: a lowering idempotent map p and a map g with g = g o p describe
a rooted hypertree exactly when every g-orbit reaches the root marker;
orbits that cycle away from the root, or escape upward forever, witness
ideal components instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping

from .core import RootedHypertree, Vertex, validate
from .errors import (
    CompositionMismatch,
    DepthTooSmall,
    HypertreeError,
    NoStabilization,
    NotAPermutation,
    NotIdempotent,
    NotLowering,
    OutOfRange,
)
from .star import encode_star_incremental

ROOT_MARKER = None  # stands for the point at infinity in glue maps


@dataclass(frozen=True)
class FiniteSupportPermutation:
    """A permutation of the positive integers fixing all i > bound.

    Canonical form: trailing fixed points are trimmed, so the identity
    has bound 0 and ``values`` is the one-line notation on 1..bound.
    """

    values: tuple[int, ...]

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "FiniteSupportPermutation":
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise NotAPermutation(f"{vals} is not a permutation of 1..{len(vals)}")
        end = len(vals)
        while end > 0 and vals[end - 1] == end:
            end -= 1
        return cls(vals[:end])

    @classmethod
    def identity(cls) -> "FiniteSupportPermutation":
        return cls(())

    @property
    def bound(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise OutOfRange("permutations act on positive integers")
        return self.values[i - 1] if i <= self.bound else i

    def one_line(self, n: int) -> tuple[int, ...]:
        """One-line notation padded with fixed points up to n."""
        return tuple(self(i) for i in range(1, n + 1))

    def __str__(self) -> str:
        return " ".join(map(str, self.values)) if self.values else "identity"


def perm_to_tree(sigma: FiniteSupportPermutation, depth: int) -> RootedHypertree:
    """Finite truncation of the halfline tree described by sigma.

    The path root - sigma(1) - sigma(2) - ... - sigma(depth), with the
    root materialized as vertex depth + 1 so that it stays the largest
    vertex.  Requires depth >= bound so the whole support is included.
    """
    if depth < sigma.bound:
        raise DepthTooSmall(f"depth {depth} is smaller than the support bound {sigma.bound}")
    root = depth + 1
    edges = []
    prev = root
    for i in range(1, depth + 1):
        cur = sigma(i)
        edges.append((prev, cur))
        prev = cur
    return validate(root, edges)


def _truncated_word(sigma: FiniteSupportPermutation, depth: int) -> tuple[int, ...]:
    return encode_star_incremental(perm_to_tree(sigma, depth)).word


def perm_encode_star(sigma: FiniteSupportPermutation) -> FiniteSupportPermutation:
    """The word-permutation of the halfline tree of sigma.

    Encodes truncations at depths D and D + 1 and accepts once the first
    ``bound`` letters agree and every later letter (up to the truncation
    artifact zone at the very end) sits at its own position.  D starts
    at 2 * bound + 4 and escalates to 8 * bound + 4 before giving up;
    NoStabilization signals an implementation bug, not a valid input
    class.
    """
    b = sigma.bound
    for depth in (2 * b + 4, 4 * b + 4, 8 * b + 4):
        w1 = _truncated_word(sigma, depth)
        w2 = _truncated_word(sigma, depth + 1)
        head = w1[:b]
        if w2[:b] != head:
            continue
        tail_ok = all(w[i - 1] == i for w in (w1, w2) for i in range(b + 1, depth - 1))
        if not tail_ok:
            continue
        if sorted(head) != list(range(1, b + 1)):
            continue
        return FiniteSupportPermutation.from_values(head)
    raise NoStabilization(f"halfline words for {sigma.values} did not stabilize below depth {8 * b + 5}")


def sn_map(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """The table sigma -> word-permutation over all of S_n."""
    if not 1 <= n <= 7:
        raise OutOfRange("S_n tables are limited to n <= 7")
    table = {}
    for vals in permutations(range(1, n + 1)):
        sigma = FiniteSupportPermutation.from_values(vals)
        table[vals] = perm_encode_star(sigma).one_line(n)
    return table


def orbits(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Cycles of the S_n self-map, each starting at its smallest member.

    Orbits are listed by increasing smallest member; iterating the map
    from the first entry of an orbit visits its entries in order.
    """
    table = sn_map(n)
    seen: set[tuple[int, ...]] = set()
    out = []
    for start in sorted(table):
        if start in seen:
            continue
        cycle = [start]
        cur = table[start]
        while cur != start:
            cycle.append(cur)
            cur = table[cur]
        seen.update(cycle)
        out.append(tuple(cycle))
    return out


@dataclass(frozen=True)
class IdealPair:
    """Finite-support data (p, g) for a possibly ideally rooted tree.

    ``p`` is a partition map on its keys and the identity elsewhere;
    ``g`` maps vertices to vertices or to the root marker (None), and
    follows ``default`` outside its keys: "root" sends everything to the
    marker, "successor" to v + 1 (escaping upward), "identity" fixes it.
    """

    p: Mapping[Vertex, Vertex]
    g: Mapping[Vertex, Vertex | None]
    default: str = "root"


@dataclass(frozen=True)
class IdealPairReport:
    """Outcome of :func:`validate_ideal_pair`.

    The pair describes an ordinary rooted hypertree iff ``valid``; the
    witnesses are the vertices whose g-orbit never reaches the root.
    """

    valid: bool
    root_component: tuple[Vertex, ...]
    ideal_witnesses: tuple[Vertex, ...]


def _g_at(pair: IdealPair, v: Vertex) -> Vertex | None:
    if v in pair.g:
        return pair.g[v]
    if pair.default == "root":
        return ROOT_MARKER
    if pair.default == "successor":
        return v + 1
    if pair.default == "identity":
        return v
    raise HypertreeError(f"unknown default rule {pair.default!r}")


def validate_ideal_pair(pair: IdealPair) -> IdealPairReport:
    """Check the pair laws and classify every vertex.

    Raises NotIdempotent / NotLowering when p is not a partition map and
    CompositionMismatch when g differs from g o p.  Classification then
    follows the g-orbits: reaching the root marker puts a vertex in the
    root component, while entering a cycle or escaping upward under the
    declared default makes it an ideal-component witness.
    """
    p, g = pair.p, pair.g

    def p_at(v: Vertex) -> Vertex:
        return p.get(v, v)

    for x, y in p.items():
        if y > x:
            raise NotLowering(f"p({x}) = {y} > {x}")
        if p_at(y) != y:
            raise NotIdempotent(f"p(p({x})) = {p_at(y)} != p({x}) = {y}")
    for v in sorted(set(p) | set(g)):
        if _g_at(pair, v) != _g_at(pair, p_at(v)):
            raise CompositionMismatch(f"g({v}) = {_g_at(pair, v)} but g(p({v})) = {_g_at(pair, p_at(v))}")

    known = set(p) | set(g) | set(p.values()) | {w for w in g.values() if w is not None}
    ceiling = max(known, default=0)
    status: dict[Vertex, bool] = {}
    for start in sorted(known):
        chain: list[Vertex] = []
        on_chain: set[Vertex] = set()
        v: Vertex | None = start
        while True:
            if v is ROOT_MARKER:
                reaches_root = True
                break
            if v in status:
                reaches_root = status[v]
                break
            if v in on_chain:
                reaches_root = False  # cycle avoiding the root
                break
            if v > ceiling and v not in g:
                # beyond all data: the default decides immediately
                reaches_root = pair.default == "root"
                break
            chain.append(v)
            on_chain.add(v)
            v = _g_at(pair, v)
        for u in chain:
            status[u] = reaches_root

    root_component = tuple(v for v in sorted(known) if status[v])
    witnesses = tuple(v for v in sorted(known) if not status[v])
    return IdealPairReport(not witnesses, root_component, witnesses)
