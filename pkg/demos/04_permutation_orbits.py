#!/usr/bin/env python3
"""Halfline trees turn the star codec into a bijection of S_n.

A permutation sigma describes the infinite path root - sigma(1) -
sigma(2) - ...; its star word lists every positive integer exactly once
(all degrees are 2), i.e. it is again a permutation, and it fixes
everything beyond the support of sigma.  Iterating sigma -> word splits
S_n into orbits.
"""

from hyperprufer import FiniteSupportPermutation, orbits, perm_encode_star, perm_to_tree

sigma = FiniteSupportPermutation.from_values((2, 3, 4, 1))
print("sigma =", sigma)
print("truncated halfline at depth 8:", perm_to_tree(sigma, 8))
print("word permutation:", perm_encode_star(sigma))

print("\nfixed points: the identity and the transposition (1 2)")
for vals in ((1,), (2, 1)):
    s = FiniteSupportPermutation.from_values(vals)
    print(f"    {s} -> {perm_encode_star(s)}")

for n in (3, 4):
    print(f"\norbits on S_{n} (cycles, starting at the smallest member):")
    for orbit in orbits(n):
        cycle = " -> ".join("".join(map(str, p)) for p in orbit)
        print("   ", cycle)

print("\nNote how the orbits preserve the image of the largest moved")
print("point, and how the S_3 orbits reappear inside S_4 with a fixed 4.")
