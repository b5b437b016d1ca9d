"""Exact deciders for short-path factors and the isolated-vertex condition.

A path factor here is a spanning set of vertex-disjoint paths, each on 3,
4, or 5 vertices.  The isolated-vertex condition says every vertex subset
S satisfies 3 * i(G - S) <= 2 * |S|, where i counts isolated vertices of
G - S; a subset violating it is a witness.  The condition is sufficient
for a factor to exist; it is not necessary (P3 itself has both a witness
and a factor), so witness and factor reports are kept side by side and
never inferred from one another.

Both searches are exhaustive and therefore capped: witnesses at n <= 30
(2^n subset scan), factors at n <= 24 (cover-mask DP).  Both accept an
optional wall-clock deadline so callers can fail over to an "unknown"
verdict instead of a wrong one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graphs import Graph, _bits, _mask_of

WITNESS_CAP = 30
FACTOR_CAP = 24
PATH_ORDERS = (3, 4, 5)
_FAILED_CACHE_CAP = 1 << 22


class FactorError(ValueError):
    pass


class TooLargeForExhaustive(FactorError):
    pass


class TooLargeForExact(FactorError):
    pass


class SearchTimeout(RuntimeError):
    pass


@dataclass(frozen=True)
class WitnessReport:
    """A violating subset: 3 * isolated > 2 * size."""

    size: int
    isolated: int
    vertices: tuple

    def to_json(self) -> dict:
        return {"size": self.size, "isolated": self.isolated, "vertices": list(self.vertices)}


def isolated_count(g: Graph, s) -> int:
    """Number of isolated vertices of G - S.  s is a bitmask or an iterable."""
    smask = s if isinstance(s, int) else _mask_of(s)
    adj = g.adj
    count = 0
    for v in range(g.n):
        if not (smask >> v) & 1 and adj[v] & ~smask == 0:
            count += 1
    return count


def find_witness(g: Graph, max_n: int = WITNESS_CAP, deadline: float | None = None):
    """Exhaustive scan for a subset with 3 * i(G - S) > 2 * |S|.

    Subsets are visited in increasing size, tuples in lexicographic order,
    so the first (smallest) violator is returned deterministically; None
    means every subset passes.  S = {} violates exactly when the graph has
    an isolated vertex.  Sizes s with 3 * (n - s) <= 2 * s cannot violate
    (i <= n - s) and end the scan.
    """
    n = g.n
    if n > max_n:
        raise TooLargeForExhaustive(f"witness scan capped at n <= {max_n}, got {n}")
    adj = g.adj
    ticks = 0
    for size in range(n + 1):
        if 3 * (n - size) <= 2 * size:
            break
        threshold = 2 * size  # need 3*i > this
        for combo in combinations(range(n), size):
            if deadline is not None:
                ticks += 1
                if ticks & 0x3FF == 1 and time.monotonic() > deadline:
                    raise SearchTimeout("witness scan hit its deadline")
            smask = 0
            for v in combo:
                smask |= 1 << v
            iso = 0
            for v in range(n):
                if not (smask >> v) & 1 and adj[v] & ~smask == 0:
                    iso += 1
            if 3 * iso > threshold:
                return WitnessReport(size=size, isolated=iso, vertices=combo)
    return None


def _paths_through(adj, allowed: int, v: int) -> Iterator[tuple[tuple, int]]:
    """All simple paths on 3..5 vertices through v inside the allowed set.

    Each undirected path is yielded once, as (vertex tuple, vertex mask),
    oriented with the smaller endpoint first.  A path is split at v into
    two arms; enumerating arm-length pairs (l, r) with l <= r and, for
    l == r, requiring the left endpoint to be smaller kills reversals.
    """
    arm_allowed = allowed & ~(1 << v)
    max_arm = max(PATH_ORDERS) - 1
    arms = [[] for _ in range(max_arm + 1)]
    arms[0].append(((), 0))

    def grow(end, verts, mask, depth):
        for w in _bits(adj[end] & arm_allowed & ~mask):
            nverts = verts + (w,)
            nmask = mask | (1 << w)
            arms[depth + 1].append((nverts, nmask))
            if depth + 1 < max_arm:
                grow(w, nverts, nmask, depth + 1)

    grow(v, (), 0, 0)
    vbit = 1 << v
    for order in PATH_ORDERS:
        for left_len in range(0, (order - 1) // 2 + 1):
            right_len = order - 1 - left_len
            for lverts, lmask in arms[left_len]:
                for rverts, rmask in arms[right_len]:
                    if lmask & rmask:
                        continue
                    if left_len == right_len and lverts[-1] > rverts[-1]:
                        continue
                    seq = lverts[::-1] + (v,) + rverts
                    if seq[0] > seq[-1]:
                        seq = seq[::-1]
                    yield seq, lmask | rmask | vbit


def find_factor(g: Graph, max_n: int = FACTOR_CAP, deadline: float | None = None):
    """Exact decision: a factor as a list of path tuples, or None.

    Depth-first over covered-vertex masks.  Each state extends the
    minimum-index uncovered vertex by every path through it that fits in
    the uncovered set; cover masks that cannot be completed are memoized
    (the memo is cleared in bulk if it outgrows its cap, which only costs
    time).  Complete, so None is a proof of non-existence.
    """
    n = g.n
    if n > max_n:
        raise TooLargeForExact(f"factor search capped at n <= {max_n}, got {n}")
    full = (1 << n) - 1
    adj = g.adj
    failed: set = set()
    ticks = 0

    def solve(covered: int):
        nonlocal ticks
        if covered == full:
            return []
        if covered in failed:
            return None
        if deadline is not None:
            ticks += 1
            if ticks & 0xFF == 1 and time.monotonic() > deadline:
                raise SearchTimeout("factor search hit its deadline")
        uncovered = full & ~covered
        pivot = (uncovered & -uncovered).bit_length() - 1
        for seq, mask in _paths_through(adj, uncovered, pivot):
            rest = solve(covered | mask)
            if rest is not None:
                return [seq] + rest
        if len(failed) >= _FAILED_CACHE_CAP:
            failed.clear()
        failed.add(covered)
        return None

    return solve(0)


def check_factor(g: Graph, paths: Iterable[Iterable[int]]):
    """First violated factor invariant as a string, or None if valid.

    Independent of the search: adjacency is re-derived from the edge list.
    """
    edge_set = set()
    for u, v in g.edges():
        edge_set.add((u, v))
        edge_set.add((v, u))
    seen = set()
    count = 0
    for raw in paths:
        seq = tuple(raw)
        if len(seq) not in PATH_ORDERS:
            return f"component {seq} has order {len(seq)}, want one of {PATH_ORDERS}"
        for v in seq:
            if not isinstance(v, int) or not 0 <= v < g.n:
                return f"vertex {v!r} out of range"
            if v in seen:
                return f"vertex {v} covered twice"
            seen.add(v)
        if len(set(seq)) != len(seq):
            return f"component {seq} repeats a vertex"
        for a, b in zip(seq, seq[1:]):
            if (a, b) not in edge_set:
                return f"({a}, {b}) in component {seq} is not an edge"
        count += len(seq)
    if count != g.n or len(seen) != g.n:
        missing = sorted(set(range(g.n)) - seen)
        return f"vertices {missing} not covered"
    return None


def verify_factor(g: Graph, paths: Iterable[Iterable[int]]) -> bool:
    """True iff paths is a valid spanning set of disjoint 3-5 vertex paths."""
    return check_factor(g, paths) is None
