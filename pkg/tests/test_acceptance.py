"""
The ten acceptance criteria, each at its stated instance range and time budget.

Every test prints one line of the form ``[C<k>] PASS|FAIL ...`` before asserting, so
``pytest -v`` output doubles as the acceptance report.
"""
import time

import pytest

from cyclomackey import checks

SMALL = [(n, r) for n in range(1, 5) for r in range(1, 4)]          # n <= 4, r <= 3
TINY = [(n, r) for n in range(1, 4) for r in range(1, 4)]           # n <= 3, r <= 3
GENERIC = [(n, r) for n in range(1, 4) for r in (1, 2)] + [(2, 3)]  # n <= 3, r <= 2 and (2, 3)


def _report(capsys, tag, title, results, elapsed, limit=None):
    failed = [c for c in results if c.status != "pass"]
    over = limit is not None and elapsed >= limit
    ok = not failed and not over and results
    budget = f" (limit {limit:.0f}s)" if limit else ""
    with capsys.disabled():
        print(f"\n[{tag}] {'PASS' if ok else 'FAIL'}  {title}: {len(results) - len(failed)}/{len(results)} checks, "
              f"{elapsed:.1f}s{budget}")
    detail = "; ".join(f"{c.anchor} {c.instance} {c.status}: {c.detail}" for c in failed[:5])
    assert results, "no checks ran"
    assert not failed, detail
    assert not over, f"took {elapsed:.1f}s, limit {limit}s"


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _pairs(n):
    return checks.index_pairs(n)


def test_c1_group_correctness(capsys):
    res, dt = _timed(lambda: [c for n, r in SMALL for c in checks.group_checks(n, r)])
    _report(capsys, "C1", "group order and defining relations, n<=4 r<=3", res, dt, limit=10)


def test_c2_coset_representatives(capsys):
    res, dt = _timed(lambda: [c for n, r in SMALL for c in checks.coset_checks(n, r)])
    _report(capsys, "C2", "one-sided coset transversals and counts, n<=4 r<=3", res, dt)


def test_c3_double_cosets(capsys):
    res, dt = _timed(lambda: [c for n, r in SMALL for c in checks.double_coset_checks(n, r, _pairs(n))])
    _report(capsys, "C3", "double coset transversals and (w1,u,w2) bijection, n<=4 r<=3", res, dt)


def test_c4_parabolic_intersections(capsys):
    res, dt = _timed(lambda: [c for n, r in SMALL for c in checks.intersection_checks(n, r, _pairs(n))])
    _report(capsys, "C4", "W_a ∩ uW_bu^-1 = <Γ(u)> = W_(k,π), n<=4 r<=3", res, dt)


def test_c5_braid_identity(capsys):
    res, dt = _timed(lambda: [c for n, r in TINY for c in checks.braid_checks(n, r, _pairs(n))])
    _report(capsys, "C5", "ωσ_j ≡ σ_ψ(j)ω, zero failures and zero cap hits, n<=3 r<=3", res, dt, limit=120)


def test_c6_hecke_relations(capsys):
    res, dt = _timed(lambda: [c for n, r in GENERIC for c in checks.hecke_relation_checks(n, r, None, triples=200)])
    _report(capsys, "C6", "Hecke relations, L/T rules, associativity, generic ring", res, dt, limit=300)


@pytest.fixture(scope="module")
def bimodule_results():
    start = time.perf_counter()
    res = []
    for n, r in GENERIC:
        specs = checks.random_specs(r, 3, seed=0)
        res += checks.hecke_bimodule_checks(n, r, _pairs(n), specs)
    return res, time.perf_counter() - start


def test_c7_mackey_bimodule(capsys, bimodule_results):
    res, dt = bimodule_results
    picked = [c for c in res if c.anchor in ("mackey-bimodule", "tilde-basis-rank")]
    assert any(c.anchor == "tilde-basis-rank" for c in picked)
    _report(capsys, "C7", "Ψ∘Φ = id (generic) and T~ rank n!r^n at 3 specializations", picked, dt)


def test_c8_tu_commutation(capsys, bimodule_results):
    res, dt = bimodule_results
    picked = [c for c in res if c.anchor == "Tu-commutation"]
    _report(capsys, "C8", "L_i T_u = T_u L_i and T_z T_u = T_u T_(x^-1 z x), generic", picked, dt)


def test_c9_mackey_functor(capsys):
    def run():
        return [c for n, r in TINY for c in checks.mackey_functor_checks(n, r, _pairs(n), checks.random_specs(r, 2, 0))]
    res, dt = _timed(run)
    _report(capsys, "C9", "Mackey functor intertwiner, 3 modules x 2 specializations, n<=3 r<=3", res, dt, limit=600)


def test_c10_root_sets(capsys):
    res, dt = _timed(lambda: [c for n, r in TINY for c in checks.roots_checks(n, r)])
    anchors = {c.anchor for c in res}
    assert {"root-corollary", "root-remark", "root-omega-delta"} <= anchors
    _report(capsys, "C10", "R = W^(l,mu) iff mu = (1^(n-l)), counterexamples, Ω/Δ equivalence, n<=3 r<=3", res, dt)
