#!/usr/bin/env python3
"""The star-reduction order on the 29 hypertrees over {1,2,3,4}.

A tree dominates all its star-reductions; the trivial hypertree (one
hyperedge, every vertex a leaf) is the unique minimum.  The rank of a
tree is its number of non-leaves, and inverting the zeta matrix shows
the Moebius value from the minimum is (-1)^rank: each interval below a
tree is a copy of the boolean lattice on its non-leaves.
"""

from collections import Counter

from hyperprufer import StarPoset, nonleaf_rank, nonleaves

poset = StarPoset(4)
print(f"T(4) has {len(poset.elements)} elements; minimum: {poset.minimum}")

by_rank = Counter(poset.rank(t) for t in poset.elements)
print("elements per rank:", dict(sorted(by_rank.items())))

print("\nrank | tree -> moebius value")
for tree in poset.elements:
    mu = poset.moebius(tree)
    assert mu == (-1) ** nonleaf_rank(tree)
print("moebius value is (-1)^rank for all", len(poset.elements), "elements: OK")

sample = max(poset.elements, key=poset.rank)
print("\nA maximal-rank element:", sample)
print("its non-leaves:", nonleaves(sample))
print("it covers exactly one tree per non-leaf:")
for below in poset.covers(sample):
    print("   ", below)

print("\nchain to the minimum along smallest-non-leaf reductions:")
cur = sample
while cur is not None:
    print("   ", cur)
    cur = poset.ancestor(cur)
