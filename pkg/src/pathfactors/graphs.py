"""Core graph type, constructions, and serialization.

Undirected simple graphs on vertex set {0, ..., n-1}.  Adjacency is stored
as one bitmask per vertex (Python ints, so any order up to the cap fits);
exhaustive algorithms elsewhere enforce their own, much smaller caps.

Two text formats are supported: the 6-bit graph6 encoding (strict by
default, see parse_graph6) and a small edge-list format for hand-written
fixtures (first line is n, then one "u v" pair per line).
"""

from __future__ import annotations

import warnings
from typing import Iterable, Iterator

import numpy as np

MAX_N = 10_000
MAX_GRAPH6_N = 258_047


class GraphError(ValueError):
    pass


class InvalidOrder(GraphError):
    pass


class EdgeListError(GraphError):
    pass


class Graph6Error(ValueError):
    pass


class ByteOutOfRange(Graph6Error):
    pass


class TruncatedPayload(Graph6Error):
    pass


class TrailingData(Graph6Error):
    pass


class NonzeroPadding(Graph6Error):
    pass


class TooLarge(Graph6Error):
    pass


def _bits(mask: int) -> Iterator[int]:
    # iterate set bit positions, ascending
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph: order n, per-vertex adjacency bitmasks.

    Validation (symmetry, no loops, mask range) runs by default.  Library
    constructors that build rows algebraically pass check=False together
    with a precomputed edge count; parser entry points always validate.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj, m: int | None = None, check: bool = True):
        if not isinstance(n, int) or n < 1 or n > MAX_N:
            raise InvalidOrder(f"order must be an int in [1, {MAX_N}], got {n!r}")
        adj = tuple(adj)
        if check:
            if len(adj) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            edge_ends = 0
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {v} has bits outside [0, {n})")
                if (row >> v) & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                edge_ends += row.bit_count()
            for v, row in enumerate(adj):
                for u in _bits(row):
                    if not (adj[u] >> v) & 1:
                        raise GraphError(f"asymmetric pair ({u}, {v})")
            computed = edge_ends // 2
            if m is not None and m != computed:
                raise GraphError(f"edge count mismatch: given {m}, counted {computed}")
            m = computed
        elif m is None:
            m = sum(row.bit_count() for row in adj) // 2
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; rejects loops and duplicates."""
    rows = [0] * n
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        m += 1
    return Graph(n, rows, m=m, check=False)


# ---------------------------------------------------------------------------
# constructions


def complete(k: int) -> Graph:
    """K_k."""
    if k < 1 or k > MAX_N:
        raise InvalidOrder(f"k={k}")
    full = (1 << k) - 1
    rows = [full & ~(1 << v) for v in range(k)]
    return Graph(k, rows, m=k * (k - 1) // 2, check=False)


def empty_graph(k: int) -> Graph:
    """k isolated vertices."""
    if k < 1 or k > MAX_N:
        raise InvalidOrder(f"k={k}")
    return Graph(k, [0] * k, m=0, check=False)


def path(k: int) -> Graph:
    """P_k, vertices in path order 0-1-...-(k-1)."""
    if k < 1 or k > MAX_N:
        raise InvalidOrder(f"k={k}")
    rows = [0] * k
    for v in range(k - 1):
        rows[v] |= 1 << (v + 1)
        rows[v + 1] |= 1 << v
    return Graph(k, rows, m=k - 1, check=False)


def cycle(k: int) -> Graph:
    """C_k (k >= 3)."""
    if k < 3 or k > MAX_N:
        raise InvalidOrder(f"cycle needs k >= 3, got {k}")
    g = path(k)
    rows = list(g.adj)
    rows[0] |= 1 << (k - 1)
    rows[k - 1] |= 1
    return Graph(k, rows, m=k, check=False)


def star(k: int) -> Graph:
    """K_{1,k-1}: vertex 0 is the hub, k total vertices."""
    if k < 1 or k > MAX_N:
        raise InvalidOrder(f"k={k}")
    rows = [(1 << k) - 2] + [1] * (k - 1)
    if k == 1:
        rows = [0]
    return Graph(k, rows, m=k - 1, check=False)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_N:
        raise InvalidOrder(f"union order {a.n + b.n} exceeds cap {MAX_N}")
    rows = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, rows, m=a.m + b.m, check=False)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = a.n + b.n
    if n > MAX_N:
        raise InvalidOrder(f"join order {n} exceeds cap {MAX_N}")
    amask = (1 << a.n) - 1
    bmask = ((1 << b.n) - 1) << a.n
    rows = [row | bmask for row in a.adj]
    rows += [(row << a.n) | amask for row in b.adj]
    return Graph(n, rows, m=a.m + b.m + a.n * b.n, check=False)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    return Graph(g.n, rows, m=g.n * (g.n - 1) // 2 - g.m, check=False)


def permute(g: Graph, perm: list[int]) -> Graph:
    """Relabel: vertex v of g becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of range(n)")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        new_row = 0
        for u in _bits(row):
            new_row |= 1 << perm[u]
        rows[perm[v]] = new_row
    return Graph(g.n, rows, m=g.m, check=False)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0.. in sorted order."""
    verts = sorted(set(vertices))
    if not verts:
        raise InvalidOrder("empty vertex set")
    index = {v: i for i, v in enumerate(verts)}
    keep = _mask_of(verts)
    rows = []
    for v in verts:
        new_row = 0
        for u in _bits(g.adj[v] & keep):
            new_row |= 1 << index[u]
        rows.append(new_row)
    return Graph(len(verts), rows, check=False)


def without_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows, m=g.m - 1, check=False)


def is_edge_subgraph(h: Graph, g: Graph) -> bool:
    """True iff h.n <= g.n and every edge of h is an edge of g (identity embedding)."""
    if h.n > g.n:
        return False
    return all(h.adj[v] & ~g.adj[v] == 0 for v in range(h.n))


# ---------------------------------------------------------------------------
# traversal


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == full


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, ordered by smallest vertex."""
    comps = []
    remaining = (1 << g.n) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        comps.append(list(_bits(seen)))
        remaining &= ~seen
    return comps


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense symmetric 0/1 float array; used by the spectral routines."""
    nbytes = (g.n + 7) // 8
    buf = b"".join(row.to_bytes(nbytes, "little") for row in g.adj)
    bits = np.unpackbits(
        np.frombuffer(buf, dtype=np.uint8).reshape(g.n, nbytes),
        axis=1, bitorder="little",
    )
    return bits[:, : g.n].astype(np.float64)


# ---------------------------------------------------------------------------
# graph6


def emit_graph6(g: Graph) -> str:
    """Encode in graph6: order bytes, then the upper triangle in column-major
    order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed 6 bits per byte,
    most significant bit first, zero-padded to a byte boundary.
    """
    n = g.n
    if n > MAX_GRAPH6_N:
        raise TooLarge(f"graph6 order form supported up to {MAX_GRAPH6_N}, got {n}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.append(63 + ((n >> 12) & 63))
        out.append(63 + ((n >> 6) & 63))
        out.append(63 + (n & 63))
    acc = 0
    nbits = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | ((row >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def parse_graph6(text: str, strict: bool = True) -> Graph:
    """Decode a graph6 string.

    Strict mode (default) rejects nonzero padding bits; strict=False
    downgrades that to a warning.  Truncated payloads, trailing bytes, and
    bytes outside [63, 126] are always errors.
    """
    data = text.strip()
    try:
        raw = data.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ByteOutOfRange(f"non-ascii byte in graph6 input: {exc}") from None
    if not raw:
        raise TruncatedPayload("empty graph6 input")
    for pos, byte in enumerate(raw):
        if byte < 63 or byte > 126:
            raise ByteOutOfRange(f"byte {byte} at position {pos} outside [63, 126]")
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise TooLarge(f"order beyond {MAX_GRAPH6_N} (8-byte form) not supported")
        if len(raw) < 4:
            raise TruncatedPayload("long order form needs 3 bytes after '~'")
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    if n < 1 or n > MAX_N:
        raise InvalidOrder(f"decoded order {n} outside [1, {MAX_N}]")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(body) < nbytes:
        raise TruncatedPayload(f"payload needs {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingData(f"{len(body) - nbytes} trailing bytes after payload")
    if nbytes:
        pad = nbytes * 6 - npairs
        if pad and (body[-1] - 63) & ((1 << pad) - 1):
            if strict:
                raise NonzeroPadding("padding bits are not zero")
            warnings.warn("graph6 padding bits are not zero", stacklevel=2)
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            bit = ((body[idx // 6] - 63) >> (5 - idx % 6)) & 1
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, rows, check=False)


# ---------------------------------------------------------------------------
# edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Read the fixture format: first non-blank line is n, then "u v" lines.

    Self-loops and duplicate lines are errors.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise EdgeListError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise EdgeListError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 1 or n > MAX_N:
        raise InvalidOrder(f"order {n} outside [1, {MAX_N}]")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer endpoint in {ln!r}") from None
        edges.append((u, v))
    try:
        return from_edges(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None
