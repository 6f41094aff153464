#!/usr/bin/env python3
"""Walk the showcase 14-vertex hypertree through both codecs.

The tree has root 14 and eight hyperedges; {3,9}_4 denotes the
hyperedge {3,4,9} whose vertex closest to the root is 4.
"""

from hyperprufer import (
    decode_classic,
    decode_star,
    emit_code,
    emit_tree,
    encode_classic,
    encode_star,
    glue_map,
    mark,
    prufer_partition,
    star_steps,
    validate,
)

tree = validate(14, [
    (1, 8, 10, 12),
    (1, 2),
    (3, 4, 9),
    (4, 7, 8),
    (5, 14),
    (4, 6),
    (8, 13, 14),
    (7, 11),
])

print("The tree, hyperedges ordered by smallest unmarked vertex:")
for m in mark(tree):
    print("   ", m)

print("\nPrüfer partition of the non-root vertices:")
print("   ", prufer_partition(tree))

print("\nGlue map (vertex -> marked vertex of its hyperedge):")
g = glue_map(tree)
print("   ", {v: g[v] for v in range(1, 14)})

# The classic codec prunes leaf-type hyperedges smallest-first and
# records their marked vertices.
classic = encode_classic(tree)
print("\nClassic word:", " ".join(map(str, classic.word)))
assert decode_classic(classic) == tree

# The star codec never deletes vertices: it merges the hyperedges
# around the smallest non-leaf and interleaves the letters.
star = encode_star(tree)
print("Star word:   ", " ".join(map(str, star.word)))
assert decode_star(star) == tree

print("\nStar pivots (smallest non-leaf at each stage) and the slots")
print("their letters occupy among the hyperedges avoiding the pivot:")
for step in star_steps(tree):
    print(f"    pivot {step.pivot}: slots {step.sv}")

print("\nBoth words contain every vertex of degree a exactly a-1 times,")
print("so they are permutations of each other:")
print("    classic sorted:", sorted(classic.word))
print("    star sorted:   ", sorted(star.word))

print("\nText formats used by the command line tool:")
print(emit_tree(tree))
print(emit_code(star))
