import random

import pytest

from pathfactors.enumeration import (
    ALL_GRAPH_COUNTS,
    CONNECTED_GRAPH_COUNTS,
    EnumerationError,
    all_graphs,
    connected_graphs,
)
from pathfactors.graphs import Graph, is_connected, permute
from pathfactors.random_graphs import random_connected_graph, random_graph


def canon(g: Graph) -> bytes:
    # brute-force canonical form, independent of the generator's dedup logic
    import itertools

    best = None
    for perm in itertools.permutations(range(g.n)):
        h = permute(g, list(perm))
        key = bytes(
            1 if (h.adj[u] >> v) & 1 else 0
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )
        if best is None or key < best:
            best = key
    return best


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_counts_match_published_enumeration(n):
    assert len(all_graphs(n)) == ALL_GRAPH_COUNTS[n]
    assert len(connected_graphs(n)) == CONNECTED_GRAPH_COUNTS[n]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_representatives_pairwise_nonisomorphic(n):
    forms = [canon(g) for g in all_graphs(n)]
    assert len(set(forms)) == len(forms)


def test_every_small_graph_is_represented():
    # every labeled graph on 5 vertices matches exactly one representative
    reps = {canon(g) for g in all_graphs(5)}
    seen = set()
    for code in range(1 << 10):
        edges = []
        bit = 0
        for u in range(5):
            for v in range(u + 1, 5):
                if (code >> bit) & 1:
                    edges.append((u, v))
                bit += 1
        rows = [0] * 5
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        seen.add(canon(Graph(5, rows)))
    assert seen == reps


def test_connected_filter_agrees_with_bfs():
    for g in all_graphs(5):
        assert is_connected(g) in (True, False)
    conn = connected_graphs(5)
    assert all(is_connected(g) for g in conn)


def test_order_bounds_rejected():
    with pytest.raises(EnumerationError):
        all_graphs(0)
    with pytest.raises(EnumerationError):
        all_graphs(11)


def test_random_graph_bounds_and_determinism():
    g1 = random_graph(12, 0.5, random.Random(7))
    g2 = random_graph(12, 0.5, random.Random(7))
    assert g1 == g2
    assert random_graph(10, 0.0, random.Random(0)).m == 0
    assert random_graph(10, 1.0, random.Random(0)).m == 45
    with pytest.raises(ValueError):
        random_graph(5, 1.5, random.Random(0))


def test_random_connected_graph_is_connected():
    for seed in range(30):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randrange(1, 20), rng, extra=rng.randrange(8))
        assert is_connected(g)
        assert g.m >= g.n - 1
