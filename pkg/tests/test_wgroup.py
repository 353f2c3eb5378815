import itertools
import math

import pytest
from hypothesis import given, strategies as st

from cyclomackey import oracles, symm, wgroup as W
from cyclomackey.wgroup import ParabolicIndex as P


def elements(n, r):
    return st.builds(lambda x, a: W.WElem(tuple(x), tuple(a), r),
                     st.permutations(range(1, n + 1)), st.lists(st.integers(0, r - 1), min_size=n, max_size=n))


def test_conjugation_formula():
    n, r = 3, 3
    for x in symm.all_perms(n):
        xw = W.from_perm(x, r)
        for i in range(1, n + 1):
            assert xw * W.t(n, r, i) * xw.inverse() == W.t(n, r, x[i - 1])


def test_s0_order_and_t_commute():
    n, r = 3, 3
    assert W.product([W.s(n, r, 0)] * r, n, r) == W.identity(n, r)
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        assert W.t(n, r, i) * W.t(n, r, j) == W.t(n, r, j) * W.t(n, r, i)


@given(elements(3, 3), elements(3, 3), elements(3, 3))
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == W.identity(3, 3) == a.inverse() * a


def test_dimension_mismatch():
    with pytest.raises(W.DimensionMismatchError):
        W.identity(2, 2) * W.identity(3, 2)
    with pytest.raises(W.DimensionMismatchError):
        W.identity(2, 2) * W.identity(2, 3)


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 4)])
def test_group_order(n, r):
    assert len(set(W.all_elements(n, r))) == math.factorial(n) * r ** n


def test_parabolic_elements_examples():
    assert len(W.parabolic_elements(P(2, ()), 2)) == 8
    assert W.parabolic_elements(P(0, (1, 1)), 2) == [W.identity(2, 2)]
    assert set(W.parabolic_elements(P(1, (1,)), 2)) == {W.identity(2, 2), W.t(2, 2, 1)}


def test_index_parse_and_format():
    p = P.parse("1:[2,1]")
    assert (p.l, p.mu, p.n) == (1, (2, 1), 4)
    assert str(p) == "1:[2,1]"
    assert P.parse("2:[]") == P(2, ())
    assert P(1, (0, 2)) == P(1, (2,))
    for bad in ("1", "1:2", "-1:[1]"):
        with pytest.raises(ValueError):
            P.parse(bad)


def test_one_sided_examples():
    assert W.one_sided_reps(P(3, ()), 2) == [W.identity(3, 2)]
    assert len(W.one_sided_reps(P(1, (1,)), 2)) == 4
    assert len(W.one_sided_reps(P(0, (3,)), 2)) == 8


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_coset_decompositions(n, r):
    for p in W.all_indices(n):
        reps = set(W.one_sided_reps(p, r, "right"))
        lreps = set(W.one_sided_reps(p, r, "left"))
        for w in W.all_elements(n, r):
            v, h = W.coset_decompose(w, p)
            assert v in reps and p.contains(h) and v * h == w
            h2, v2 = W.left_coset_decompose(w, p)
            assert v2 in lreps and p.contains(h2) and h2 * v2 == w


def test_orbit_action_examples():
    a, b = P(0, (3,)), P(0, (1, 1, 1))
    d = W.double_coset_reps(a, b, 2)
    # ν = (1^n): every orbit is a singleton and output is ^aW ∩ W^b
    for datum in d:
        for z in symm.young_elements(symm.tau(datum.x, a.perm_composition, b.perm_composition)):
            assert W.orbit_action(z, datum.u, a, b) == datum.u
    both = set(W.one_sided_reps(a, 2, "left")) & set(W.one_sided_reps(b, 2, "right"))
    assert {x.u for x in d} == both


def test_orbit_action_moves_colors_within_double_coset():
    n, r = 3, 2
    a, b = P(0, (2, 1)), P(0, (2, 1))
    u = W.WElem((1, 2, 3), (1, 0, 0), r)
    z = (2, 1, 3)
    v = W.orbit_action(z, u, a, b)
    assert v == W.WElem((1, 2, 3), (0, 1, 0), r)
    classes = oracles.double_coset_partition(a, b, n, r)
    assert any(u in c and v in c for c in classes)
    with pytest.raises(ValueError):
        W.orbit_action((1, 3, 2), u, a, b)


def test_double_coset_examples():
    n, r = 2, 2
    full = P(2, ())
    for other in W.all_indices(n):
        assert [d.u for d in W.double_coset_reps(full, other, r)] == [W.identity(n, r)]
        assert [d.u for d in W.double_coset_reps(other, full, r)] == [W.identity(n, r)]
    a = P(1, (1,))
    data = W.double_coset_reps(a, a, r)
    assert len(data) == len(oracles.double_coset_partition(a, a, n, r))


def test_psi_examples():
    n, r = 3, 2
    for a, b in itertools.product(W.all_indices(n), repeat=2):
        for d in W.double_coset_reps(a, b, r):
            if d.u == W.identity(n, r):
                assert all(j == p for j, p in d.psi)
            if d.k >= 1:
                assert W.datum_psi(d, 0) == 0
            for j, _ in d.psi:
                W.datum_psi(d, j)
            with pytest.raises(ValueError):
                W.datum_psi(d, n + 5)


def test_intersection_examples():
    n, r = 3, 2
    full = P(3, ())
    d = W.double_coset_reps(full, full, r)[0]
    assert W.parabolic_intersection(full, d, full) == set(W.all_elements(n, r))
    triv = P(0, (1, 1, 1))
    for b in W.all_indices(n):
        for d in W.double_coset_reps(triv, b, r):
            assert W.parabolic_intersection(triv, d, b) == {W.identity(n, r)}
    a = P(1, (2,))
    for d in W.double_coset_reps(a, a, r):
        assert W.parabolic_intersection(a, d, a) == W.closure(d.gamma, n, r)


def test_triple_decompose_w_examples():
    n, r = 2, 2
    a = b = P(1, (1,))
    w1, d, w2 = W.triple_decompose_w(W.identity(n, r), a, b)
    assert w1 == w2 == d.u == W.identity(n, r)
    for w in W.parabolic_elements(b, r):
        w1, d, w2 = W.triple_decompose_w(w, a, b)
        assert w1 == d.u == W.identity(n, r) and w2 == w
    images = {W.triple_decompose_w(w, a, b) for w in W.all_elements(n, r)}
    assert len(images) == 8


def test_datum_json_round_trip_fields():
    d = W.double_coset_reps(P(1, (1,)), P(1, (1,)), 2)[-1]
    js = d.to_json()
    assert W.WElem.from_json(js["u"], 2) == d.u
    assert set(js) >= {"I_x", "c", "k", "Gamma", "pi", "pi_sharp", "psi"}
