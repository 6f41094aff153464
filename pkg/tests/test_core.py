import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperprufer import (
    Disconnected,
    EdgeTooSmall,
    MarkedHyperedge,
    NotAnEdge,
    NotATree,
    NotConstantOnPart,
    NotEventuallyRoot,
    NotIdempotent,
    NotLowering,
    RootNotMax,
    UnknownVertex,
    adjacency,
    degree,
    distance,
    from_glue,
    geodesic,
    glue_map,
    is_leaf_type,
    leaves,
    mark,
    nonleaf_rank,
    nonleaves,
    partition_from_map,
    partition_from_parts,
    partition_map,
    prufer_partition,
    set_partitions,
    spine,
    star_reduce,
    star_reduce_set,
    to_ordinary,
    validate,
)

from conftest import T1_EDGES, T1_GLUE, T1_PARTS, all_trees


class TestValidate:
    def test_fixture_accepted(self, t1):
        assert t1.n == 14 and t1.k == 8
        assert t1.vertices == tuple(range(1, 15))

    def test_trivial_edge(self):
        tree = validate(2, [(1, 2)])
        assert tree.edges == ((1, 2),)

    def test_triangle_is_not_a_tree(self):
        with pytest.raises(NotATree):
            validate(3, [(1, 2), (2, 3), (1, 3)])

    def test_single_vertex_degenerate(self):
        tree = validate(1, [])
        assert tree.n == 1 and tree.k == 0

    def test_edge_too_small(self):
        with pytest.raises(EdgeTooSmall):
            validate(2, [(2,), (1, 2)])

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            validate(4, [(1, 2), (3, 4)])

    def test_root_not_max(self):
        with pytest.raises(RootNotMax):
            validate(2, [(2, 3)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(NotATree):
            validate(2, [[1, 2], [2, 1]])

    def test_tree_equalities_small(self):
        # sum(size-1) = n-1, sum(deg-1) = k-1, k < n, >= 2 leaves
        for n in range(1, 6):
            for tree in all_trees(n):
                assert sum(len(e) - 1 for e in tree.edges) == tree.n - 1
                degs = [degree(tree, v) for v in tree.vertices]
                assert sum(d - 1 for d in degs) == tree.k - 1
                assert tree.k < tree.n
                if tree.n >= 2:
                    assert len(leaves(tree)) >= 2


class TestDegree:
    @pytest.mark.parametrize("v,expected", [(8, 3), (5, 1), (14, 2)])
    def test_fixture(self, t1, v, expected):
        assert degree(t1, v) == expected

    def test_unknown_vertex(self, t1):
        with pytest.raises(UnknownVertex):
            degree(t1, 99)


class TestMark:
    def test_fixture(self, t1):
        assert mark(t1) == tuple(MarkedHyperedge(r, m) for r, m in zip(
            T1_PARTS, (8, 1, 4, 8, 14, 4, 14, 7)))

    def test_trivial(self, trivial):
        assert mark(trivial) == (MarkedHyperedge((1,), 2),)

    def test_path(self, path3):
        assert mark(path3) == (MarkedHyperedge((1,), 2), MarkedHyperedge((2,), 3))

    def test_marking_multiplicities(self):
        # non-root v is marked deg(v)-1 times, the root deg(root) times
        for n in range(1, 6):
            for tree in all_trees(n):
                marked = [m.marked for m in mark(tree)]
                for v in tree.vertices:
                    expected = degree(tree, v) - (0 if v == tree.root else 1)
                    assert marked.count(v) == expected


class TestPartition:
    def test_fixture(self, t1):
        assert prufer_partition(t1).parts == T1_PARTS

    def test_trivial_single_part(self):
        tree = validate(5, [(1, 2, 3, 4, 5)])
        assert prufer_partition(tree).parts == ((1, 2, 3, 4),)

    def test_path(self, path3):
        assert prufer_partition(path3).parts == ((1,), (2,))


class TestPartitionMap:
    def test_fixture(self, t1):
        p = partition_map(prufer_partition(t1))
        assert p == {1: 1, 10: 1, 12: 1, 2: 2, 3: 3, 9: 3, 4: 4, 7: 4,
                     5: 5, 6: 6, 8: 8, 13: 8, 11: 11}

    def test_singletons_identity(self):
        partition = partition_from_parts([(v,) for v in range(1, 5)], 9)
        assert partition_map(partition) == {v: v for v in range(1, 5)}

    def test_fibers_of_fixpoints(self):
        p = {1: 1, 2: 1, 3: 3, 4: 3}
        assert partition_from_map(p, 5).parts == ((1, 2), (3, 4))

    def test_not_idempotent(self):
        with pytest.raises(NotIdempotent):
            partition_from_map({1: 1, 2: 1, 3: 2}, 4)

    def test_not_lowering(self):
        with pytest.raises(NotLowering):
            partition_from_map({1: 2, 2: 2}, 3)

    def test_roundtrip_exhaustive(self):
        for m in range(1, 7):
            for parts in set_partitions(range(1, m + 1)):
                partition = partition_from_parts(parts, m + 1)
                assert partition_from_map(partition_map(partition), m + 1) == partition

    @given(st.dictionaries(st.integers(1, 20), st.integers(1, 20), min_size=1))
    def test_roundtrip_random_maps(self, raw):
        # collapse an arbitrary map into a partition map, then roundtrip
        p = {x: min(x, y) for x, y in raw.items()}
        p.update({y: y for y in list(p.values())})
        partition = partition_from_map(p, 21)
        assert partition_map(partition) == p


class TestGlueMap:
    def test_fixture(self, t1):
        g = glue_map(t1)
        assert g.pop(14) == 14
        assert g == T1_GLUE

    def test_trivial(self, trivial):
        assert glue_map(trivial) == {1: 2, 2: 2}

    def test_query_seven(self, t1):
        assert glue_map(t1)[7] == 8

    def test_iterates_follow_geodesic(self, t1):
        g = glue_map(t1)
        for v in t1.vertices:
            path, _ = geodesic(t1, v, t1.root)
            walk = [v]
            while walk[-1] != t1.root:
                walk.append(g[walk[-1]])
            assert tuple(walk) == path


class TestFromGlue:
    def test_fixture_roundtrip(self, t1):
        g = dict(T1_GLUE)
        g[14] = 14
        assert from_glue(prufer_partition(t1), g) == t1

    def test_trivial(self):
        partition = partition_from_parts([(1, 2, 3)], 4)
        g = {1: 4, 2: 4, 3: 4, 4: 4}
        assert from_glue(partition, g) == validate(4, [(1, 2, 3, 4)])

    def test_two_cycle(self):
        partition = partition_from_parts([(1,), (2,)], 3)
        with pytest.raises(NotEventuallyRoot):
            from_glue(partition, {1: 2, 2: 1, 3: 3})

    def test_not_constant(self, t1):
        g = dict(T1_GLUE)
        g[14] = 14
        g[10] = 4
        with pytest.raises(NotConstantOnPart):
            from_glue(prufer_partition(t1), g)

    def test_inverse_pair_exhaustive(self):
        for n in range(1, 6):
            for tree in all_trees(n):
                assert from_glue(prufer_partition(tree), glue_map(tree)) == tree


class TestGeodesic:
    def test_fixture_paths(self, t1):
        assert distance(t1, 3, 14) == 3
        assert geodesic(t1, 3, 14)[0] == (3, 4, 8, 14)
        assert distance(t1, 5, 5) == 0
        assert distance(t1, 10, 14) == 2
        assert geodesic(t1, 10, 14)[0] == (10, 8, 14)

    def test_unknown(self, t1):
        with pytest.raises(UnknownVertex):
            distance(t1, 1, 15)

    def test_edge_sequence_contains_steps(self, t1):
        for w in t1.vertices:
            path, eseq = geodesic(t1, 3, w)
            assert len(eseq) == len(path) - 1
            for (a, b), e in zip(zip(path, path[1:]), eseq):
                assert a in e and b in e

    def _exhaustive_shortest(self, tree, v, w):
        # independent oracle: enumerate every simple path
        adj = adjacency(tree)
        best = []
        stack = [(v, (v,))]
        while stack:
            x, path = stack.pop()
            if x == w:
                best.append(path)
                continue
            for u in adj[x]:
                if u not in path:
                    stack.append((u, path + (u,)))
        shortest = min(len(p) for p in best)
        return [p for p in best if len(p) == shortest]

    def test_unique_shortest_path_small(self):
        for n in range(2, 5):
            for tree in all_trees(n):
                for v in tree.vertices:
                    for w in tree.vertices:
                        mins = self._exhaustive_shortest(tree, v, w)
                        assert len(mins) == 1
                        assert geodesic(tree, v, w)[0] == mins[0]


class TestSpine:
    def test_fixture(self, t1):
        sp, proj = spine(t1)
        assert sp.n == 9 and sp.k == 8
        assert proj[10] == 1  # representative of part {1,10,12}
        part = next(p for p in prufer_partition(t1).parts if 10 in p)
        assert part == (1, 10, 12)
        assert distance(sp, proj[10], 14) == 2 == distance(t1, 10, 14)

    def test_ordinary_tree_fixed(self, path3):
        sp, proj = spine(path3)
        assert sp == path3
        assert proj == {1: 1, 2: 2, 3: 3}

    def test_trivial(self):
        tree = validate(4, [(1, 2, 3, 4)])
        sp, _ = spine(tree)
        assert sp.edges == ((1, 4),)

    def test_distance_identities(self):
        for n in range(2, 6):
            for tree in all_trees(n):
                sp, proj = spine(tree)
                for v in tree.vertices:
                    assert distance(sp, proj[v], tree.root) == distance(tree, v, tree.root)
                    for w in tree.vertices:
                        assert distance(sp, proj[v], proj[w]) <= distance(tree, v, w)
                fixed = sp == tree
                assert fixed == all(len(e) == 2 for e in tree.edges)


class TestToOrdinary:
    def test_fixture(self, t1):
        ordinary = to_ordinary(t1)
        assert ordinary.k == 13
        for e in ((1, 8), (8, 10), (8, 12)):
            assert e in ordinary.edges

    def test_ordinary_fixed(self, path3):
        assert to_ordinary(path3) == path3

    def test_trivial_star(self):
        tree = validate(4, [(1, 2, 3, 4)])
        assert to_ordinary(tree).edges == ((1, 4), (2, 4), (3, 4))

    def test_distances_grow(self):
        for n in range(2, 6):
            for tree in all_trees(n):
                ordinary = to_ordinary(tree)
                for v in tree.vertices:
                    assert distance(ordinary, v, tree.root) == distance(tree, v, tree.root)
                    for w in tree.vertices:
                        assert distance(ordinary, v, w) >= distance(tree, v, w)


class TestStarReduce:
    def test_fixture_vertex_one(self, t1):
        reduced = star_reduce(t1, 1)
        assert (1, 2, 8, 10, 12) in reduced.edges
        assert reduced.k == t1.k - 1

    def test_leaf_identity(self, t1):
        assert star_reduce(t1, 5) == t1

    def test_fixture_set(self, t1):
        reduced = star_reduce_set(t1, range(1, 9))
        assert reduced.edges == ((1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14), (5, 14))

    def test_unknown(self, t1):
        with pytest.raises(UnknownVertex):
            star_reduce(t1, 15)

    def test_pivot_becomes_leaf_and_commutes(self):
        for n in range(2, 5):
            for tree in all_trees(n):
                for v in tree.vertices:
                    rv = star_reduce(tree, v)
                    assert degree(rv, v) == 1
                    assert (rv == tree) == (degree(tree, v) == 1)
                    for w in tree.vertices:
                        assert star_reduce(rv, w) == star_reduce(star_reduce(tree, w), v)


class TestLeafType:
    def test_fixture(self, t1):
        assert is_leaf_type(t1, MarkedHyperedge((2,), 1)) is True
        assert is_leaf_type(t1, MarkedHyperedge((4, 7), 8)) is False

    def test_trivial(self, trivial):
        assert is_leaf_type(trivial, MarkedHyperedge((1,), 2)) is True

    def test_not_an_edge(self, t1):
        with pytest.raises(NotAnEdge):
            is_leaf_type(t1, MarkedHyperedge((2, 3), 1))

    def test_equivalent_to_all_leaves(self):
        for n in range(2, 6):
            for tree in all_trees(n):
                leafset = set(leaves(tree))
                for m in mark(tree):
                    assert is_leaf_type(tree, m) == set(m.reduced).issubset(leafset)


class TestNonleafRank:
    def test_fixture(self, t1):
        assert nonleaves(t1) == (1, 4, 7, 8, 14)
        assert nonleaf_rank(t1) == 5

    def test_trivial(self):
        assert nonleaf_rank(validate(4, [(1, 2, 3, 4)])) == 0

    def test_path(self, path3):
        # degrees are 1, 2, 1: only the middle vertex is a non-leaf
        assert nonleaves(path3) == (2,)
        assert nonleaf_rank(path3) == 1

    def test_longer_path(self):
        tree = validate(4, [(1, 2), (2, 3), (3, 4)])
        assert nonleaf_rank(tree) == 2
