from dataclasses import replace
from fractions import Fraction

import pytest

from pathfactors.audit import (
    CLAIMS,
    AuditError,
    contrapositive_sample,
    remark_audit,
    run_audit,
    verify_difference_identity,
    verify_endpoint_value,
    verify_factorization,
    verify_minimum_location,
    verify_spectral_chain,
)
from pathfactors.extremal import DeltaDivisibleBy3, build_extremal, edge_count_closed_form


def test_catalog_shape():
    assert set(CLAIMS) == {"2.1", "2.2", "2.3", "2.4", "2.5", "2.6",
                           "3-2.1", "3-2.2", "3-2.3"}
    size = [c for c in CLAIMS.values() if c.section == "size"]
    spectral = [c for c in CLAIMS.values() if c.section == "spectral"]
    assert len(size) == 6 and len(spectral) == 3
    assert all(c.delta_mod in (1, 2) for c in size)
    assert all(c.delta_mod is None for c in spectral)
    assert CLAIMS["3-2.2"].eval_offset == 2
    assert all(CLAIMS[k].eval_offset == 1 for k in CLAIMS if k != "3-2.2")


def test_admissible_s_class_and_range():
    c = CLAIMS["2.1"]  # s == 0 (mod 3)
    ss = c.admissible_s(80, 7)
    assert all(s % 3 == 0 and s > 7 for s in ss)
    assert ss[0] == 9
    assert ss[-1] <= (3 * 80 - 3) // 5
    # spectral s == 1 claim: first admissible element above delta == 1 (mod 3)
    # is delta + 3, matching the catalogued range start delta + 2
    ss2 = CLAIMS["3-2.2"].admissible_s(80, 7)
    assert ss2[0] == 10


@pytest.mark.parametrize("n,delta", [(26, 1), (31, 1), (32, 2), (80, 7), (91, 11)])
def test_size_claims_verified(n, delta):
    for cid in ("2.1", "2.2", "2.3", "2.4", "2.5", "2.6"):
        c = CLAIMS[cid]
        if c.delta_mod != delta % 3:
            continue
        diff = verify_difference_identity(c, n, delta)
        fact = verify_factorization(c, n, delta)
        end = verify_endpoint_value(c, n, delta)
        loc = verify_minimum_location(c, n, delta)
        expect = "typo-resolved" if cid == "2.3" else "verified"
        assert diff.status == expect, diff.detail
        assert fact.status == expect, fact.detail
        assert end.status == "verified", end.detail
        assert loc.status == "verified", loc.detail


def test_typo_resolution_names_survivors():
    c = CLAIMS["2.3"]
    diff = verify_difference_identity(c, 31, 1)
    assert diff.status == "typo-resolved"
    assert diff.data["survivor"] == "defined"
    fact = verify_factorization(c, 31, 1)
    assert fact.status == "typo-resolved"
    assert fact.data["survivor"] == "20-digit"


@pytest.mark.parametrize("n,delta", [(26, 1), (32, 2), (80, 7), (99, 8)])
def test_spectral_claims_verified(n, delta):
    for cid in ("3-2.1", "3-2.2", "3-2.3"):
        c = CLAIMS[cid]
        chain = verify_spectral_chain(c, n, delta)
        assert chain.status == "verified", chain.detail
        assert "rho" in chain.detail
        assert chain.data["rho_margin"] > 0
        assert verify_factorization(c, n, delta).status == "verified"
        assert verify_endpoint_value(c, n, delta).status == "verified"
        assert verify_minimum_location(c, n, delta).status == "verified"


def test_difference_identity_against_built_graphs():
    # dual route: closed-form audit vs actual edge counts of built graphs
    c = CLAIMS["2.2"]
    n, delta = 40, 2
    e_delta = build_extremal(n, delta).m
    for s in c.admissible_s(n, delta):
        if n - 5 * s // 3 - 1 >= 1:
            assert 18 * (e_delta - build_extremal(n, s).m) == c.quad(n, delta, s)


def test_vacuous_and_domain_guards():
    c = CLAIMS["2.1"]
    tiny = verify_difference_identity(c, 3, 1)
    assert tiny.status == "verified" and tiny.data["vacuous"]
    below = verify_minimum_location(c, 10, 1)
    assert below.status == "verified" and below.data["vacuous"]
    with pytest.raises(AuditError):
        verify_difference_identity(c, 30, 2)  # wrong delta class
    with pytest.raises(AuditError):
        verify_difference_identity(CLAIMS["3-2.1"], 30, 1)  # spectral claim
    with pytest.raises(AuditError):
        verify_spectral_chain(c, 30, 1)  # size claim
    with pytest.raises(DeltaDivisibleBy3):
        verify_factorization(c, 30, 3)


def test_tampered_claims_are_caught():
    # negative controls: the ops must flag a wrong catalog, not rubber-stamp it
    c = CLAIMS["2.1"]
    # linear term broken: constant-term tampering would cancel in the
    # factorization's endpoint difference and go unnoticed there
    bad_coeffs = lambda n, d: (-16, 10 * n - 36,
                               12 * n - 12 * n * d + 16 * d * d + 16 * d - 14)
    tampered = replace(c, variants=(("printed", bad_coeffs),), coeffs=bad_coeffs)
    assert verify_difference_identity(tampered, 40, 1).status == "mismatch"
    assert verify_factorization(tampered, 40, 1).status == "mismatch"
    assert verify_endpoint_value(tampered, 40, 1).status == "mismatch"
    bad_end = replace(c, endpoint_form=lambda n, d: 0)
    assert verify_endpoint_value(bad_end, 40, 1).status == "mismatch"
    bad_fact = replace(c, fact_coeff=Fraction(1, 25))
    assert verify_factorization(bad_fact, 40, 1).status == "mismatch"
    # anchor moved to the interval's far end: no longer the minimum
    bad_anchor = replace(c, eval_offset=12)
    assert verify_minimum_location(bad_anchor, 60, 1).status == "mismatch"


def test_run_audit_small_sweep():
    run = run_audit(max_n=60, max_delta=5)
    s = run.summary()
    assert s["counts"].keys() <= {"verified", "typo-resolved"}
    assert s["exceptions"] == [["2.3", "difference_identity"], ["2.3", "factorization"]]
    assert s["entries"] == len(run.entries) > 0
    # deterministic: same sweep, same entries
    run2 = run_audit(max_n=60, max_delta=5)
    assert [e.to_json() for e in run2.entries] == [e.to_json() for e in run.entries]


def test_contrapositive_sample_smoke():
    out = contrapositive_sample(25, 1, trials=20, seed=7)
    assert out.ok, out.failures
    assert out.max_edges_seen <= out.size_threshold == edge_count_closed_form(25, 1)
    assert out.max_rho_seen <= out.rho_threshold + out.tol
    assert out.min_isolated_seen >= 1
    # seeded: reproducible
    again = contrapositive_sample(25, 1, trials=20, seed=7)
    assert again.to_json() == out.to_json()


def test_remark_audit_small_extremal_has_factor():
    rep = remark_audit(7, 1)
    assert rep.witness_violates and rep.isolated == rep.independent_part == 1
    assert rep.edge_count == 16
    assert rep.factor_status == "found"
    assert rep.factor_verified is True
    assert "not necessary" in rep.summary
    j = rep.to_json()
    assert j["factor"] is not None and j["witness_size"] == 1


def test_remark_audit_skips_above_cap():
    rep = remark_audit(31, 2, max_exact_n=24)
    assert rep.factor_status == "skipped"
    assert rep.factor is None and rep.factor_verified is None
    assert rep.witness_violates
