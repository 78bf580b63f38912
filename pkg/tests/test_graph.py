import math
import random
from itertools import combinations, permutations

import pytest

from lexsweep import (
    Graph,
    GraphError,
    PatternTooLargeError,
    complement,
    find_induced,
    from_edge_list,
    girth,
    induced_subgraph,
)

from conftest import all_graphs, complete, cycle, graph_from_mask, path, random_graph


class TestConstruction:
    def test_c4(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.n == 4 and g.m == 4

    def test_empty(self):
        g = from_edge_list(3, [])
        assert g.n == 3 and g.m == 0

    def test_duplicate_collapse(self):
        g = from_edge_list(2, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match=r"\(0, 5\)"):
            from_edge_list(3, [(0, 5)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match=r"self-loop"):
            from_edge_list(3, [(1, 1)])

    def test_negative_n_rejected(self):
        with pytest.raises(GraphError):
            Graph(-1)

    def test_adjacency_symmetric_and_sorted(self, rng):
        g = random_graph(12, 0.4, rng)
        for u in range(g.n):
            assert list(g.neighbors(u)) == sorted(g.neighbors(u))
            for v in g.neighbors(u):
                assert u in g.adjsets[v]
        assert g.m * 2 == sum(g.degree(v) for v in range(g.n))


class TestComplement:
    def test_c4_is_2k2(self):
        assert set(complement(cycle(4)).edges()) == {(0, 2), (1, 3)}

    def test_k3_empty(self):
        assert complement(complete(3)).m == 0

    def test_p4_self_complementary(self):
        cp = complement(path(4))
        assert cp.m == 3
        degs = sorted(cp.degree(v) for v in range(4))
        assert degs == [1, 1, 2, 2]

    def test_involution(self, rng):
        for _ in range(50):
            g = random_graph(rng.randrange(0, 10), 0.5, rng)
            assert complement(complement(g)) == g


class TestInducedSubgraph:
    def test_c4_minus_vertex_is_p3(self):
        sub, idmap = induced_subgraph(cycle(4), {0, 1, 2})
        assert idmap == (0, 1, 2)
        assert set(sub.edges()) == {(0, 1), (1, 2)}

    def test_empty_set(self):
        sub, idmap = induced_subgraph(cycle(4), set())
        assert sub.n == 0 and idmap == ()

    def test_k4_subset_is_k3(self):
        sub, _ = induced_subgraph(complete(4), {0, 2, 3})
        assert sub == complete(3)

    def test_full_set_identity(self, rng):
        g = random_graph(8, 0.5, rng)
        sub, idmap = induced_subgraph(g, range(8))
        assert sub == g and idmap == tuple(range(8))

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            induced_subgraph(cycle(4), {0, 9})


def brute_force_find(host, pattern):
    for images in permutations(range(host.n), pattern.n):
        if all(
            pattern.has_edge(a, b) == host.has_edge(images[a], images[b])
            for a, b in combinations(range(pattern.n), 2)
        ):
            return images
    return None


class TestFindInduced:
    def test_p4_in_c5(self):
        emb = find_induced(cycle(5), path(4))
        assert emb is not None and emb.check(cycle(5), path(4))

    def test_no_diamond_in_k4(self):
        diamond = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert find_induced(complete(4), diamond) is None

    def test_pattern_in_itself_identity(self):
        g = cycle(5)
        emb = find_induced(g, g)
        assert emb.mapping == tuple(range(5))

    def test_size_guard(self):
        with pytest.raises(PatternTooLargeError):
            find_induced(complete(12), complete(11))

    def test_soundness_random(self, rng):
        for _ in range(100):
            host = random_graph(rng.randrange(1, 9), 0.5, rng)
            pattern = random_graph(rng.randrange(1, 5), 0.5, rng)
            emb = find_induced(host, pattern)
            if emb is not None:
                assert emb.check(host, pattern)

    def test_completeness_exhaustive_small(self):
        # every host on <= 4 vertices against every pattern on <= 3
        for hn in range(5):
            for host in all_graphs(hn):
                for pn in range(4):
                    for pattern in all_graphs(pn):
                        found = find_induced(host, pattern)
                        expected = brute_force_find(host, pattern)
                        assert (found is None) == (expected is None)

    def test_completeness_random_sample(self, rng):
        # spot-check the n<=6 host / n<=5 pattern regime against brute force
        for _ in range(200):
            host = random_graph(rng.randrange(0, 7), rng.random(), rng)
            pattern = random_graph(rng.randrange(0, 6), rng.random(), rng)
            found = find_induced(host, pattern)
            expected = brute_force_find(host, pattern)
            assert (found is None) == (expected is None)


def brute_force_girth(g):
    best = math.inf
    for k in range(3, g.n + 1):
        for verts in combinations(range(g.n), k):
            for perm in permutations(verts[1:]):
                seq = (verts[0],) + perm
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)
                ):
                    best = min(best, k)
                    break
            if best == 3:
                return 3
        if best < math.inf:
            return best
    return best


class TestGirth:
    def test_c4(self):
        assert girth(cycle(4)) == 4

    def test_tree(self):
        assert girth(path(6)) == math.inf
        assert girth(Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])) == math.inf

    def test_k4(self):
        assert girth(complete(4)) == 3

    def test_against_cycle_enumeration(self, rng):
        for _ in range(150):
            g = random_graph(rng.randrange(0, 8), rng.random(), rng)
            assert girth(g) == brute_force_girth(g)
