"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (visible under pytest -s) and
enforces its wall-clock budget.  Tolerances are stated inline; exact
checks use integer/rational arithmetic end to end.
"""

import random
import time

import pytest

from pathfactors.audit import contrapositive_sample, remark_audit, run_audit
from pathfactors.enumeration import (
    ALL_GRAPH_COUNTS,
    CONNECTED_GRAPH_COUNTS,
    all_graphs,
    connected_graphs,
)
from pathfactors.extremal import (
    build_extremal,
    edge_count_closed_form,
    extremal_params,
    n_min_spectral,
    rho_closed_form,
)
from pathfactors.factors import find_factor, find_witness, verify_factor
from pathfactors.graphs import (
    NonzeroPadding,
    complete,
    disjoint_union,
    empty_graph,
    emit_graph6,
    join,
    parse_graph6,
    path,
    without_edge,
)
from pathfactors.random_graphs import random_connected_graph, random_graph
from pathfactors.spectral import hong_bound, monotonicity_check, spectral_radius


def _run(num: int, label: str, budget: float, body) -> None:
    t0 = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"\nFAIL criterion {num}: {label}")
        raise
    dt = time.perf_counter() - t0
    print(f"\nPASS criterion {num} [{dt:.2f}s / budget {budget:.0f}s]: {label}")
    assert dt <= budget, f"criterion {num} exceeded its {budget}s budget ({dt:.2f}s)"


def test_criterion_01_edge_count_closed_form():
    def body():
        for s in range(1, 13):
            lo = 5 * s // 3 + 2
            for n in range(lo, lo + 61):
                q = n - 5 * s // 3 - 1
                p = 2 * s // 3 + 1
                built = join(complete(s),
                             disjoint_union(complete(q), empty_graph(p)))
                direct = sum(row.bit_count() for row in built.adj) // 2
                assert edge_count_closed_form(n, s) == direct, (n, s)

    _run(1, "closed-form edge count == independent structural count, exact, "
            "s in [1,12], 61 orders each", 1.0, body)


def test_criterion_02_quotient_rho_vs_power_iteration():
    def body():
        ss = (1, 2, 3, 4, 5, 7, 8, 10, 13, 16)
        worst = 0.0
        points = 0
        for s in ss:
            lo = 5 * s // 3 + 2
            for n in range(max(lo, 50), 501, (501 - max(lo, 50)) // 9 or 1):
                if points // len(ss) >= 10:
                    break
                a = rho_closed_form(n, s, tol=1e-12)
                b = spectral_radius(build_extremal(n, s), tol=1e-12).rho
                worst = max(worst, abs(a - b))
                points += 1
        assert points >= 100, points
        assert worst <= 1e-8, worst

    _run(2, "quotient-matrix spectral radius vs dense power iteration "
            "<= 1e-8 over a 100-point grid up to n=500", 30.0, body)


def test_criterion_03_hong_bound_and_monotonicity():
    def body():
        rng = random.Random(20260816)
        for _ in range(1000):
            n = rng.randrange(3, 51)
            g = random_connected_graph(n, rng, extra=rng.randrange(0, 3 * n))
            rho = spectral_radius(g, tol=1e-10).rho
            assert rho <= hong_bound(g) + 1e-9, (g.n, g.m)
        for _ in range(200):
            n = rng.randrange(4, 41)
            g = random_connected_graph(n, rng, extra=rng.randrange(2, 2 * n))
            u, v = rng.choice(list(g.edges()))
            h = without_edge(g, u, v)
            assert monotonicity_check(g, h, tol=1e-10)

    _run(3, "edge-count radicand bound holds on 1000 random connected graphs "
            "(tol 1e-9) and deletion monotonicity on 200 pairs", 60.0, body)


def test_criterion_04_sufficiency_sweep_corpus():
    def body():
        for n in range(1, 9):
            assert len(all_graphs(n)) == ALL_GRAPH_COUNTS[n], n
        stats = {"witness": 0, "no_witness": 0}
        for n in range(1, 9):
            conn = connected_graphs(n)
            assert len(conn) == CONNECTED_GRAPH_COUNTS[n], n
            for g in conn:
                w = find_witness(g)
                if w is not None:
                    stats["witness"] += 1
                    continue
                stats["no_witness"] += 1
                paths = find_factor(g)
                assert paths is not None, emit_graph6(g)
                assert verify_factor(g, paths), emit_graph6(g)
        assert stats["no_witness"] > 0 and stats["witness"] > 0

    _run(4, "isomorph-free connected corpus n<=8 matches published counts; "
            "every witness-free graph has a verified factor", 600.0, body)


def test_criterion_05_condition_not_necessary():
    def body():
        for k in (3, 4):
            g = path(k)
            w = find_witness(g)
            assert w is not None and 3 * w.isolated > 2 * w.size
            paths = find_factor(g)
            assert paths is not None and verify_factor(g, paths)

    _run(5, "3- and 4-vertex paths violate the condition yet have verified "
            "factors (condition sufficient, not necessary)", 5.0, body)


def test_criterion_06_claim_catalog_audit():
    def body():
        run = run_audit(max_n=200, max_delta=12)
        counts = run.counts()
        assert set(counts) <= {"verified", "typo-resolved"}, counts
        assert counts.get("mismatch", 0) == 0
        assert run.exceptions() == [("2.3", "difference_identity"),
                                    ("2.3", "factorization")]

    _run(6, "exact claim-catalog audit to n=200, delta=12: everything "
            "verified except the two known typo-resolved items", 300.0, body)


def test_criterion_07_spectral_radius_exceeds_clique_bound():
    def body():
        for delta in (1, 2, 4, 5, 7, 8):
            for n in range(n_min_spectral(delta), 301):
                bound = n - 2 * delta // 3 - 2
                assert rho_closed_form(n, delta) > bound, (n, delta)

    _run(7, "extremal spectral radius strictly exceeds n - floor(2*delta/3) - 2 "
            "for delta in {1,2,4,5,7,8} through n=300", 60.0, body)


def test_criterion_08_contrapositive_sampling():
    def body():
        for n, delta in ((25, 1), (31, 2)):
            out = contrapositive_sample(n, delta, trials=200, seed=20260816,
                                        tol=1e-8)
            assert out.ok, out.failures[:3]
            assert out.max_edges_seen <= out.size_threshold
            assert out.max_rho_seen <= out.rho_threshold + 1e-8
            assert out.min_isolated_seen >= extremal_params(n, delta).p

    _run(8, "200 seeded witness-keeping subgraphs each of (25,1) and (31,2) "
            "stay at or below both thresholds (rho tol 1e-8)", 120.0, body)


def test_criterion_09_remark_reports_definitive():
    def body():
        rep = remark_audit(7, 1)
        assert rep.witness_violates and rep.isolated == 1
        assert rep.factor_status == "found" and rep.factor_verified is True
        for delta in (1, 2):
            lo = 5 * delta // 3 + 2
            for n in range(lo, 15):
                r = remark_audit(n, delta)
                assert r.witness_violates, (n, delta)
                assert r.factor_status in ("found", "none"), (n, delta)
                if r.factor_status == "found":
                    assert r.factor_verified is True

    _run(9, "remark report at (7,1) carries both artifacts; all delta in "
            "{1,2}, n<=14 configurations get definitive factor verdicts",
         300.0, body)


def test_criterion_10_graph6_round_trip():
    def body():
        rng = random.Random(20260816)
        for _ in range(10000):
            n = rng.randrange(1, 31)
            g = random_graph(n, rng.random(), rng)
            assert parse_graph6(emit_graph6(g)) == g
        # nonzero padding bits must be rejected in strict mode:
        # a 2-vertex graph has a 1-bit payload; set a padding bit
        bad = "A" + chr(63 + 0b000001)
        with pytest.raises(NonzeroPadding):
            parse_graph6(bad)
        with pytest.warns(UserWarning):
            parse_graph6(bad, strict=False)

    _run(10, "graph6 round-trip on 10000 random graphs n<=30; strict parser "
             "rejects nonzero padding", 10.0, body)
