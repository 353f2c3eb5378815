import itertools
from fractions import Fraction

import pytest

from cyclomackey import hecke, linalg, modules, wgroup as W
from cyclomackey.wgroup import ParabolicIndex as P

SPEC = (3, (5, 7))


def alg(n=2, r=2, spec=SPEC):
    return hecke.algebra(n, r, spec)


def test_generic_rejected():
    with pytest.raises(modules.ModuleError):
        modules.regular_module(hecke.algebra(2, 2), P(2, ()))


@pytest.mark.parametrize("p", W.all_indices(3))
def test_standard_modules_satisfy_relations(p):
    H = alg(3, 2)
    for M in modules.standard_test_modules(H, p):
        assert M.relation_failures() == []
    assert modules.regular_module(H, p).dim == len(W.parabolic_elements(p, 2))


def test_bad_one_dim_module_detected():
    H = alg()
    M = modules.one_dim_module(H, P(2, ()), 2, 5)
    assert M.relation_failures()


def test_restriction_requires_subgroup():
    H = alg()
    M = modules.regular_module(H, P(1, (1,)))
    with pytest.raises(modules.ModuleError):
        modules.restrict_module(M, P(2, ()))
    assert modules.restrict_module(M, P(0, (1, 1))).dim == M.dim


@pytest.mark.parametrize("p", W.all_indices(2))
def test_induction_dimension_and_relations(p):
    H = alg()
    for M in modules.standard_test_modules(H, p):
        I = modules.induce_module(M)
        assert I.dim == M.dim * H.dim // len(W.parabolic_elements(p, 2))
        assert I.relation_failures() == []


def test_induced_regular_is_regular():
    H = alg()
    M = modules.regular_module(H, P(0, (1, 1)))
    I = modules.induce_module(M)
    assert I.dim == H.dim


def test_twist_requires_sharp_index():
    H = alg()
    a = b = P(1, (1,))
    d = W.double_coset_reps(a, b, 2)[0]
    M = modules.regular_module(H, P(2, ()))
    with pytest.raises(modules.ModuleError):
        modules.twist_by_Tu(M, d)


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3), (3, 1), (3, 2)])
def test_mackey_functor(n, r):
    spec = (3, (5, 7, 11)[:r])
    H = hecke.algebra(n, r, spec)
    for a, b in itertools.product(W.all_indices(n), repeat=2):
        for M in modules.standard_test_modules(H, b):
            res = modules.mackey_functor_check(M, a)
            assert res.ok, (a, b, M.label, res)


def test_wrong_twist_is_detected(monkeypatch):
    """Swapping q and -1 in the twisted one-dimensional modules must break the check."""
    H = hecke.algebra(3, 2, SPEC)
    orig = modules.twist_by_Tu

    def bad_twist(M, d):
        N = orig(M, d)
        gens = dict(N.gens)
        for j in gens:
            if j > 0:
                v = gens[j][0][0]
                gens[j] = [{0: Fraction(-1) if v == H.S.q else H.S.q}]
        return modules.HModule(N.alg, N.index, N.dim, gens, N.label)

    monkeypatch.setattr(modules, "twist_by_Tu", bad_twist)
    fails = sum(not modules.mackey_functor_check(M, a).ok
                for a, b in itertools.product(W.all_indices(3), repeat=2)
                for M in modules.standard_test_modules(H, b)[1:])
    assert fails > 0


def test_linalg_rank():
    from fractions import Fraction as F
    assert linalg.rank([{0: F(1)}, {1: F(2)}, {0: F(2), 1: F(4)}]) == 2
    assert linalg.rank([]) == 0
