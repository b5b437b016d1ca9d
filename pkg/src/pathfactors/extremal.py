"""The extremal family and the size/spectral thresholds built on it.

The family is parameterized by order n and a clique size s >= 1:

    H(n, s) = K_s  joined to  ( K_q  +  p * K_1 )

with q = n - floor(5s/3) - 1 and p = floor(2s/3) + 1, so s + q + p = n and
the minimum degree is exactly s.  Vertex layout is fixed: [0, s) is the
join clique, [s, s+q) the big clique, [s+q, n) the independent set.

Degree-threshold criteria (valid for delta not divisible by 3 and n at or
above the per-criterion minimum order):

  size:      m(G) >  m(H(n, delta))          forces a path factor
  spectral:  rho(G) > rho(H(n, delta))       forces a path factor

Edge counts come from a closed form kept in exact integers; rho of the
family comes from its 3-cell equitable quotient, whose largest real root
equals the spectral radius of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import MAX_N, Graph
from .spectral import QuotientMatrix, largest_root


class ExtremalError(ValueError):
    pass


class InvalidParams(ExtremalError):
    pass


class ParityViolation(ExtremalError):
    """The closed form's braced quantity must always be even."""


class DeltaDivisibleBy3(ExtremalError):
    pass


class OrderTooSmall(ExtremalError):
    def __init__(self, message, n_min_size, n_min_spectral):
        super().__init__(message)
        self.n_min_size = n_min_size
        self.n_min_spectral = n_min_spectral


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    s: int
    q: int
    p: int

    def to_json(self) -> dict:
        return {"n": self.n, "s": self.s, "q": self.q, "p": self.p}


@dataclass(frozen=True)
class Thresholds:
    """Size/spectral thresholds at (n, delta), with applicability flags.

    size_applicable / spectral_applicable say whether n clears the
    respective minimum order; the threshold values themselves are computed
    whenever the family is constructible.
    """

    n: int
    delta: int
    n_min_size: int
    n_min_spectral: int
    size_threshold: int
    rho_threshold: float
    size_applicable: bool
    spectral_applicable: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "n_min_size": self.n_min_size,
            "n_min_spectral": self.n_min_spectral,
            "size_threshold": self.size_threshold,
            "rho_threshold": self.rho_threshold,
            "size_applicable": self.size_applicable,
            "spectral_applicable": self.spectral_applicable,
        }


def extremal_params(n: int, s: int) -> ExtremalParams:
    """Validate (n, s) and derive q, p.  Needs q >= 1."""
    if not isinstance(s, int) or s < 1:
        raise InvalidParams(f"s must be a positive int, got {s!r}")
    if not isinstance(n, int) or n > MAX_N:
        raise InvalidParams(f"n must be an int <= {MAX_N}, got {n!r}")
    q = n - 5 * s // 3 - 1
    p = 2 * s // 3 + 1
    if q < 1:
        raise InvalidParams(
            f"n={n} too small for s={s}: need n >= {5 * s // 3 + 2} for a nonempty clique part"
        )
    assert s + q + p == n
    return ExtremalParams(n=n, s=s, q=q, p=p)


def build_extremal(n: int, s: int) -> Graph:
    """Construct H(n, s) with the fixed vertex layout."""
    par = extremal_params(n, s)
    q, p = par.q, par.p
    full = (1 << n) - 1
    join_mask = (1 << s) - 1
    clique_mask = ((1 << q) - 1) << s
    rows = []
    for v in range(s):
        rows.append(full & ~(1 << v))
    for v in range(s, s + q):
        rows.append((join_mask | clique_mask) & ~(1 << v))
    for v in range(s + q, n):
        rows.append(join_mask)
    m = s * (s - 1) // 2 + q * (q - 1) // 2 + s * (n - s)
    return Graph(n, rows, m=m, check=False)


def _edge_count_raw(n: int, s: int) -> int:
    # the closed form, applied without the q >= 1 constructibility check;
    # algebraically exact down to q = 0
    t = n - 5 * s // 3
    braced = t * (t - 3) - s * (s - 2 * n + 1) + 2
    if braced % 2:
        raise ParityViolation(f"braced quantity {braced} is odd at (n={n}, s={s})")
    return braced // 2


def edge_count_closed_form(n: int, s: int) -> int:
    """m(H(n, s)) in exact integer arithmetic."""
    extremal_params(n, s)
    return _edge_count_raw(n, s)


def extremal_quotient(n: int, s: int) -> QuotientMatrix:
    """The 3-cell equitable quotient of H(n, s): join clique / clique /
    independent set."""
    par = extremal_params(n, s)
    q, p = par.q, par.p
    entries = ((s - 1, q, p), (s, q - 1, 0), (s, 0, 0))
    cells = (
        tuple(range(s)),
        tuple(range(s, s + q)),
        tuple(range(s + q, n)),
    )
    return QuotientMatrix(entries=entries, cells=cells)


def rho_closed_form(n: int, s: int, tol: float = 1e-10) -> float:
    """rho(H(n, s)) via the largest real root of the 3-cell quotient."""
    return largest_root(extremal_quotient(n, s), tol=tol)


def _ceil(fr: Fraction) -> int:
    return -(-fr.numerator // fr.denominator)


def _check_delta(delta: int) -> None:
    if not isinstance(delta, int) or delta < 1:
        raise InvalidParams(f"delta must be a positive int, got {delta!r}")
    if delta % 3 == 0:
        raise DeltaDivisibleBy3(f"criteria require delta not divisible by 3, got {delta}")


def n_min_size(delta: int) -> int:
    """Smallest order where the size criterion applies: ceil((20*delta + 53) / 3)."""
    _check_delta(delta)
    return _ceil(Fraction(20 * delta + 53, 3))


def n_min_spectral(delta: int) -> int:
    """Smallest order for the spectral criterion:
    ceil(max((6*delta^2 + 22*delta + 31) / 6, (20*delta + 56) / 3))."""
    _check_delta(delta)
    return _ceil(max(Fraction(6 * delta * delta + 22 * delta + 31, 6),
                     Fraction(20 * delta + 56, 3)))


def thresholds(n: int, delta: int, tol: float = 1e-10) -> Thresholds:
    """Both thresholds at (n, delta).

    Raises DeltaDivisibleBy3 for excluded delta and OrderTooSmall (carrying
    both minimum orders) when n clears neither minimum.
    """
    _check_delta(delta)
    lo_size = n_min_size(delta)
    lo_spec = n_min_spectral(delta)
    if n < lo_size and n < lo_spec:
        raise OrderTooSmall(
            f"n={n} below both minimum orders (size {lo_size}, spectral {lo_spec})",
            n_min_size=lo_size,
            n_min_spectral=lo_spec,
        )
    return Thresholds(
        n=n,
        delta=delta,
        n_min_size=lo_size,
        n_min_spectral=lo_spec,
        size_threshold=edge_count_closed_form(n, delta),
        rho_threshold=rho_closed_form(n, delta, tol=tol),
        size_applicable=n >= lo_size,
        spectral_applicable=n >= lo_spec,
    )
