"""Spectral radius machinery.

spectral_radius runs power iteration on A + I (the shift keeps the dominant
eigenvalue simple on bipartite graphs and the iteration exact in integers
for as long as possible) from the all-ones vector, with a Rayleigh-quotient
polish on the converged iterate.  For a symmetric matrix the residual
||(A+I)x - mu x|| with normalized x bounds the distance from mu to the
nearest eigenvalue, so residual <= tol certifies |rho - lambda_1| <= tol.

Also here: the size-based upper bound sqrt(2m - n + 1), subgraph
monotonicity checking, and equitable-partition quotients whose largest real
root equals the spectral radius of the host graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import (
    Graph,
    adjacency_matrix,
    connected_components,
    induced_subgraph,
    is_connected,
    is_edge_subgraph,
)


class SpectralError(ValueError):
    pass


class NotConnected(SpectralError):
    pass


class NegativeRadicand(SpectralError):
    pass


class NotEquitable(SpectralError):
    pass


class NotSubgraph(SpectralError):
    pass


class NoConvergence(RuntimeError):
    def __init__(self, message, iterations, residual):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class NoRealRootInBracket(RuntimeError):
    """Root bracketing failed; cannot happen for valid quotient inputs."""


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    iterations: int
    residual: float


@dataclass(frozen=True)
class QuotientMatrix:
    """Equitable-partition quotient: entries[r][c] = neighbors in cell c of
    any vertex in cell r (integer for an equitable partition)."""

    entries: tuple
    cells: tuple


def spectral_radius(g: Graph, tol: float = 1e-10, max_iter: int = 100_000) -> SpectralResult:
    """Largest adjacency eigenvalue of a connected graph.

    Deterministic: all-ones start vector, no randomness.  Raises
    NotConnected for disconnected input and NoConvergence (carrying the
    final residual) if max_iter is exhausted.
    """
    if not is_connected(g):
        raise NotConnected(f"spectral_radius needs a connected graph, got {g!r}")
    n = g.n
    a = adjacency_matrix(g)
    x = np.full(n, 1.0 / math.sqrt(n))
    res = math.inf
    check_every = 4
    for it in range(1, max_iter + 1):
        y = a @ x
        y += x
        norm = float(np.linalg.norm(y))
        if it % check_every == 0 or it == 1:
            mu = float(x @ y)
            res = float(np.linalg.norm(y - mu * x))
            if res <= tol:
                x = y / norm
                rho = float(x @ (a @ x))
                return SpectralResult(rho=rho, iterations=it, residual=res)
        x = y / norm
    raise NoConvergence(
        f"power iteration did not reach tol={tol:g} in {max_iter} iterations "
        f"(residual {res:.3e})",
        iterations=max_iter,
        residual=res,
    )


def rho_max_component(g: Graph, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """max over components of the spectral radius; works on any graph."""
    best = 0.0
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub = induced_subgraph(g, comp)
        best = max(best, spectral_radius(sub, tol=tol, max_iter=max_iter).rho)
    return best


def hong_bound(g: Graph) -> float:
    """Size upper bound sqrt(2m - n + 1) on the spectral radius."""
    radicand = 2 * g.m - g.n + 1
    if radicand < 0:
        raise NegativeRadicand(f"2m - n + 1 = {radicand} < 0")
    return math.sqrt(radicand)


def monotonicity_check(g: Graph, h: Graph, tol: float = 1e-10) -> bool:
    """True iff rho(g) >= rho(h) - 2*tol for an edge-subgraph h of g.

    h may be disconnected (its rho is the component maximum); g must be
    connected.
    """
    if not is_edge_subgraph(h, g):
        raise NotSubgraph("h is not an edge subgraph of g under the identity embedding")
    rho_g = spectral_radius(g, tol=tol).rho
    rho_h = rho_max_component(h, tol=tol)
    return rho_g >= rho_h - 2 * tol


def quotient_from_cells(g: Graph, cells: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Build the quotient of an equitable partition.

    cells must partition the vertex set; every vertex of a cell must see
    the same number of neighbors in each cell, else NotEquitable names the
    first offending (vertex, cell) pair.
    """
    cell_lists = [sorted(c) for c in cells]
    masks = []
    covered = 0
    for c in cell_lists:
        if not c:
            raise SpectralError("empty cell")
        mask = 0
        for v in c:
            if not 0 <= v < g.n:
                raise SpectralError(f"vertex {v} out of range")
            mask |= 1 << v
        if mask & covered:
            raise SpectralError("cells overlap")
        covered |= mask
        masks.append(mask)
    if covered != (1 << g.n) - 1:
        raise SpectralError("cells do not cover the vertex set")
    entries = []
    for r, c in enumerate(cell_lists):
        counts = [(g.adj[c[0]] & masks[j]).bit_count() for j in range(len(masks))]
        for v in c[1:]:
            for j in range(len(masks)):
                if (g.adj[v] & masks[j]).bit_count() != counts[j]:
                    raise NotEquitable(
                        f"vertex {v} in cell {r} sees "
                        f"{(g.adj[v] & masks[j]).bit_count()} neighbors in cell {j}, "
                        f"expected {counts[j]}"
                    )
        entries.append(tuple(counts))
    return QuotientMatrix(entries=tuple(entries), cells=tuple(tuple(c) for c in cell_lists))


# ---------------------------------------------------------------------------
# largest real root of a small quotient matrix


def _char_poly(entries) -> list[int]:
    """Coefficients of det(xI - M), low degree first, exact integers."""
    k = len(entries)

    def det(rows):
        # rows: list of lists of polynomials (coefficient lists)
        if len(rows) == 1:
            return rows[0][0]
        total = [0]
        for j in range(len(rows)):
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = _poly_mul(rows[0][j], det(minor))
            if j % 2:
                term = [-c for c in term]
            total = _poly_add(total, term)
        return total

    mat = []
    for i in range(k):
        row = []
        for j in range(k):
            if i == j:
                row.append([-entries[i][j], 1])  # x - M_ii
            else:
                row.append([-entries[i][j]])
        mat.append(row)
    return det(mat)


def _poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def largest_root(q: QuotientMatrix, tol: float = 1e-10) -> float:
    """Largest real eigenvalue of a small (k <= 4) nonnegative quotient.

    Exact integer characteristic polynomial, then a descending scan on
    [0, max row sum] to bracket the top root (the polynomial is positive
    above it but its sign at 0 is not fixed, so the lower bracket end is
    searched), bisection to tol/10, and one Newton polish.
    """
    entries = q.entries if isinstance(q, QuotientMatrix) else tuple(map(tuple, q))
    k = len(entries)
    if not 1 <= k <= 4:
        raise SpectralError(f"largest_root supports 1 <= k <= 4 cells, got {k}")
    for row in entries:
        if len(row) != k:
            raise SpectralError("quotient matrix is not square")
        if any(e < 0 for e in row):
            raise SpectralError("quotient entries must be nonnegative")
    coeffs = _char_poly(entries)

    def p(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def dp(x: float) -> float:
        acc = 0.0
        deg = len(coeffs) - 1
        for i in range(deg, 0, -1):
            acc = acc * x + i * coeffs[i]
        return acc

    hi = float(max(sum(row) for row in entries)) + 1.0
    steps = 1024
    step = hi / steps
    upper = hi
    lower = None
    for i in range(1, steps + 1):
        x = hi - i * step
        if x < 0.0:
            x = 0.0
        v = p(x)
        if v == 0.0:
            lower = upper = x
            break
        if v < 0.0:
            lower = x
            break
        upper = x
        if x == 0.0:
            break
    if lower is None:
        raise NoRealRootInBracket(
            "no sign change in [0, max row sum]; invalid quotient input"
        )
    while upper - lower > tol / 10:
        mid = 0.5 * (lower + upper)
        if p(mid) < 0.0:
            lower = mid
        else:
            upper = mid
    root = 0.5 * (lower + upper)
    slope = dp(root)
    if slope != 0.0:
        root -= p(root) / slope
    return root
