"""Exhaustive and arithmetic verification of the counting results.

There are stirling2(n-1, k) * n^(k-1) rooted hypertrees with vertices
{1..n} and k hyperedges: one per (partition of {1..n-1} into k parts,
word of length k-1 over {1..n}) pair.  The enumerator realizes the
bijection by decoding every pair, so counting doubles as surjectivity
evidence; an independent brute-force generator over raw hyperedge sets
is available for n <= 4 as a second witness.

The same tree set carries a ranked poset (T >= any star-reduction of T)
whose Moebius function from the minimum is (-1)^(number of non-leaves);
``StarPoset`` computes the order directly and inverts the zeta matrix
exactly over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .classic import STAR, PruferCode
from .core import (
    RootedHypertree,
    Vertex,
    degree,
    nonleaf_rank,
    nonleaves,
    partition_from_parts,
    star_reduce,
    star_reduce_set,
    validate,
)
from .errors import HypertreeError, OutOfRange
from .star import decode_star


def stirling2(m: int, k: int) -> int:
    """Number of partitions of an m-set into k non-empty parts."""
    if m < 0 or k < 0:
        raise OutOfRange("stirling2 arguments must be non-negative")
    if k > m:
        return 0
    row = [1] + [0] * k  # S(0, j)
    for i in range(1, m + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def count_hypertrees(n: int, k: int) -> int:
    """stirling2(n-1, k) * n^(k-1): trees on {1..n} with k hyperedges."""
    if not 1 <= k <= n - 1:
        raise OutOfRange(f"need 1 <= k <= n - 1, got n={n} k={k}")
    return stirling2(n - 1, k) * n ** (k - 1)


def count_all_hypertrees(n: int) -> int:
    """Total number of rooted hypertrees on {1..n}."""
    if n < 1:
        raise OutOfRange("n must be at least 1")
    if n == 1:
        return 1
    return sum(count_hypertrees(n, k) for k in range(1, n))


def set_partitions(items: Iterable[int], k: int | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of ``items`` into (k) non-empty parts.

    Parts come out ordered by minimum element.
    """
    pool = sorted(items)

    def rec(i: int, parts: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(pool):
            if k is None or len(parts) == k:
                yield tuple(tuple(p) for p in parts)
            return
        x = pool[i]
        for p in parts:
            p.append(x)
            yield from rec(i + 1, parts)
            p.pop()
        if k is None or len(parts) < k:
            parts.append([x])
            yield from rec(i + 1, parts)
            parts.pop()

    if not pool:
        if k in (None, 0):
            yield ()
        return
    yield from rec(0, [])


def enumerate_hypertrees(n: int, k: int | None = None) -> Iterator[RootedHypertree]:
    """Every rooted hypertree on {1..n} exactly once, via the star codec.

    Decodes every (partition of {1..n-1} into k parts, word in
    {1..n}^(k-1)) pair; the stream length therefore equals
    :func:`count_hypertrees` summed over the requested k.
    """
    if n < 1:
        raise OutOfRange("n must be at least 1")
    if n == 1:
        if k is None:
            yield validate(1, [])
        else:
            raise OutOfRange("n = 1 admits no hyperedge count k >= 1")
        return
    if k is not None and not 1 <= k <= n - 1:
        raise OutOfRange(f"need 1 <= k <= n - 1, got n={n} k={k}")
    ks = range(1, n) if k is None else (k,)
    alphabet = range(1, n + 1)
    for kk in ks:
        for parts in set_partitions(range(1, n), kk):
            partition = partition_from_parts(parts, n)
            for word in product(alphabet, repeat=kk - 1):
                yield decode_star(PruferCode(partition, word, STAR))


def brute_force_hypertrees(n: int) -> list[RootedHypertree]:
    """Second witness: filter every hyperedge set over {1..n} through
    validate.  Exponential in 2^n, so restricted to n <= 4."""
    if not 1 <= n <= 4:
        raise OutOfRange("brute force generation is limited to n <= 4")
    if n == 1:
        return [validate(1, [])]
    vs = range(1, n + 1)
    candidates = [c for size in range(2, n + 1) for c in combinations(vs, size)]
    out = []
    for r in range(1, len(candidates) + 1):
        for subset in combinations(candidates, r):
            if set().union(*subset) != set(vs):
                continue
            try:
                out.append(validate(n, subset))
            except HypertreeError:
                continue
    return out


@dataclass(frozen=True)
class DegreeWeight:
    """Exponent vector deg(v) - 1 of a tree, nonzero entries only."""

    exponents: tuple[tuple[Vertex, int], ...]

    def as_dict(self) -> dict[Vertex, int]:
        return dict(self.exponents)

    def total(self) -> int:
        return sum(e for _, e in self.exponents)

    def evaluate(self, x: Mapping[Vertex, int]) -> int:
        out = 1
        for v, e in self.exponents:
            out *= x[v] ** e
        return out


def degree_weight(tree: RootedHypertree) -> DegreeWeight:
    """Monomial exponents prod x_v^(deg(v) - 1) of a tree."""
    expo = [(v, degree(tree, v) - 1) for v in tree.vertices if degree(tree, v) >= 2]
    return DegreeWeight(tuple(expo))


def verify_generating_identity(n: int, k: int, points: Sequence[Sequence[int]]) -> bool:
    """Check sum over trees with a fixed partition of prod x_v^(deg-1)
    against (sum x_v)^(k-1), at every sample point, for every partition
    of {1..n-1} into k parts.  Exact integer arithmetic."""
    if n > 5:
        raise OutOfRange("generating identity check is limited to n <= 5")
    if not 1 <= k <= n - 1:
        raise OutOfRange(f"need 1 <= k <= n - 1, got n={n} k={k}")
    vecs = [{v: int(pt[v - 1]) for v in range(1, n + 1)} for pt in points]
    for parts in set_partitions(range(1, n), k):
        partition = partition_from_parts(parts, n)
        weights = [
            degree_weight(decode_star(PruferCode(partition, word, STAR)))
            for word in product(range(1, n + 1), repeat=k - 1)
        ]
        for x in vecs:
            lhs = sum(w.evaluate(x) for w in weights)
            rhs = sum(x.values()) ** (k - 1)
            if lhs != rhs:
                return False
    return True


class StarPoset:
    """The set T(n) of rooted hypertrees on {1..n}, ordered by
    star-reduction: A >= B iff B is a star-reduction of A at some vertex
    set.

    The order is graded by the number of non-leaves; the Moebius values
    from the minimum (the trivial hypertree) are computed by exact
    integer inversion of the zeta matrix.
    """

    def __init__(self, n: int):
        if not 1 <= n <= 5:
            raise OutOfRange("star poset construction is limited to n <= 5")
        self.n = n
        els = sorted(enumerate_hypertrees(n), key=lambda t: (nonleaf_rank(t), t.edges))
        self.elements: tuple[RootedHypertree, ...] = tuple(els)
        self._index = {t: i for i, t in enumerate(els)}
        m = len(els)
        self._leq = [[False] * m for _ in range(m)]
        for j, t in enumerate(els):
            nl = nonleaves(t)
            for r in range(len(nl) + 1):
                for sub in combinations(nl, r):
                    i = self._index[star_reduce_set(t, sub)]
                    self._leq[i][j] = True
        self._mu0 = self._invert_zeta_row()

    def _invert_zeta_row(self) -> tuple[int, ...]:
        # elements are sorted by rank, so the zeta matrix is
        # unitriangular and inverts exactly over the integers
        m = len(self.elements)
        leq = self._leq
        mu = [0] * m
        mu[0] = 1
        for j in range(1, m):
            if leq[0][j]:
                mu[j] = -sum(mu[l] for l in range(j) if leq[0][l] and leq[l][j])
        return tuple(mu)

    @property
    def minimum(self) -> RootedHypertree:
        return self.elements[0]

    def index(self, tree: RootedHypertree) -> int:
        try:
            return self._index[tree]
        except KeyError:
            raise OutOfRange(f"tree is not an element of T({self.n})") from None

    def leq(self, a: RootedHypertree, b: RootedHypertree) -> bool:
        return self._leq[self.index(a)][self.index(b)]

    def rank(self, tree: RootedHypertree) -> int:
        self.index(tree)
        return nonleaf_rank(tree)

    def moebius(self, tree: RootedHypertree) -> int:
        """mu(minimum, tree) from the inverted zeta matrix."""
        return self._mu0[self.index(tree)]

    def covers(self, tree: RootedHypertree) -> tuple[RootedHypertree, ...]:
        """Elements covered by ``tree`` (computed exhaustively)."""
        j = self.index(tree)
        below = [i for i in range(len(self.elements)) if self._leq[i][j] and i != j]
        out = []
        for i in below:
            if not any(self._leq[i][l] and self._leq[l][j] for l in below if l != i):
                out.append(self.elements[i])
        return tuple(out)

    def ancestor(self, tree: RootedHypertree) -> RootedHypertree | None:
        """Star-reduction at the smallest non-leaf (the parent in the
        rooted-tree structure on T(n)); None for the minimum."""
        self.index(tree)
        nl = nonleaves(tree)
        if not nl:
            return None
        return star_reduce(tree, nl[0])
