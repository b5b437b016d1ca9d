"""Seeded random graph generators for tests, demos, and sampling ops."""

from __future__ import annotations

import random

from .graphs import Graph, InvalidOrder, from_edges


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p): each of the n(n-1)/2 possible edges kept with probability p."""
    if n < 1:
        raise InvalidOrder(f"n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra: int = 0) -> Graph:
    """Random recursive tree on n vertices plus up to `extra` chord edges.

    Connectivity is guaranteed by the tree skeleton; chords are sampled
    uniformly from the non-edges (fewer are added if the graph fills up).
    """
    if n < 1:
        raise InvalidOrder(f"n={n}")
    if extra < 0:
        raise ValueError(f"extra={extra}")
    rows = [0] * n
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        edges.append((u, v))
    missing = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not (rows[u] >> v) & 1
    ]
    rng.shuffle(missing)
    edges.extend(missing[: min(extra, len(missing))])
    return from_edges(n, edges)
