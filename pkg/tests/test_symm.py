import itertools
import math

import pytest
from hypothesis import given, strategies as st

from cyclomackey import symm
from cyclomackey.wgroup import compositions


def brute_young(mu):
    n = sum(mu)
    return {x for x in symm.all_perms(n) if symm.in_young(x, mu)}


def test_length_examples():
    assert symm.perm_length((1, 2, 3)) == 0
    assert symm.perm_length((2, 1)) == 1
    assert symm.perm_length((3, 2, 1)) == 3


def test_reduced_word_examples():
    assert symm.reduced_word((1, 2, 3)) == []
    assert symm.reduced_word((2, 1, 3)) == [1]
    w = symm.reduced_word((3, 1, 2))
    assert len(w) == 2 and symm.from_word(3, w) == (3, 1, 2)


@given(st.permutations(range(1, 7)))
def test_reduced_word_is_reduced(x):
    x = tuple(x)
    w = symm.reduced_word(x)
    assert symm.from_word(6, w) == x
    assert len(w) == symm.perm_length(x)


def test_coset_reps_examples():
    assert symm.coset_reps((3,)) == [(1, 2, 3)]
    assert sorted(symm.coset_reps((1, 1))) == [(1, 2), (2, 1)]
    assert len(symm.coset_reps((2, 1))) == 3
    with pytest.raises(ValueError):
        symm.coset_reps((2, 1), "double", (1, 1))


def test_zero_parts_are_stripped():
    assert symm.composition([0, 2, 0, 1]) == (2, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_coset_partition_oracle(n):
    group = set(symm.all_perms(n))
    for mu in compositions(n):
        Smu = brute_young(mu)
        reps = symm.coset_reps(mu, "right")
        assert len(reps) == math.factorial(n) // len(Smu)
        cosets = [frozenset(symm.compose(x, y) for y in Smu) for x in reps]
        assert len(set(cosets)) == len(cosets)
        assert set().union(*cosets) == group
        # lengths add
        for x in reps:
            for y in Smu:
                assert symm.perm_length(symm.compose(x, y)) == symm.perm_length(x) + symm.perm_length(y)


def test_tau_examples():
    assert symm.tau((1, 2, 3), (2, 1), (2, 1)) == (2, 1)
    assert symm.tau((1, 2, 3), (2, 1), (1, 2)) == (1, 1, 1)
    for x in symm.coset_reps((2, 2), "double", (1, 1, 1, 1)):
        assert symm.tau(x, (2, 2), (1, 1, 1, 1)) == (1, 1, 1, 1)
    with pytest.raises(symm.NotDistinguishedError):
        symm.tau((2, 1, 3), (2, 1), (2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_tau_intersection_oracle(n):
    for mu, nu in itertools.product(compositions(n), repeat=2):
        Smu, Snu = brute_young(mu), brute_young(nu)
        for x in symm.coset_reps(mu, "double", nu):
            xi = symm.inverse(x)
            conj = {symm.compose(symm.compose(x, y), xi) for y in Snu}
            assert Smu & conj == brute_young(symm.tau(x, mu, nu))


def test_triple_decompose_examples():
    w = (3, 1, 4, 2)
    assert symm.triple_decompose(w, (1, 1, 1, 1), (1, 1, 1, 1)) == ((1, 2, 3, 4), w, (1, 2, 3, 4))
    z = (2, 1, 3, 4)
    assert symm.triple_decompose(z, (2, 2), (2, 2)) == ((1, 2, 3, 4), (1, 2, 3, 4), z)


@pytest.mark.parametrize("n", range(1, 6))
def test_triple_decompose_is_bijection(n):
    for mu, nu in itertools.product(compositions(n), repeat=2):
        images = {}
        for w in symm.all_perms(n):
            y, x, z = symm.triple_decompose(w, mu, nu)
            assert symm.compose(symm.compose(y, x), z) == w
            assert symm.in_young(z, nu) and symm.is_distinguished_right(y, symm.tau(x, mu, nu))
            images[(y, x, z)] = w
        assert len(images) == math.factorial(n)
        Smu, Snu = brute_young(mu), brute_young(nu)
        expected = sum(len(Smu) // len(brute_young(symm.tau(x, mu, nu))) * len(Snu)
                       for x in symm.coset_reps(mu, "double", nu))
        assert expected == math.factorial(n)


def test_lemma_constants():
    assert symm.lemma_constants((1, 2, 3, 4), 2, 3) == (4, 2)
    assert symm.lemma_constants((1, 2, 3), 0, 2)[1] == 0
    count = 0
    for mu in compositions(2):
        for nu in compositions(2):
            for x in symm.coset_reps((2, *mu), "double", (2, *nu)):
                c, k = symm.lemma_constants(x, 2, 2)
                assert all(x[i] == i + 1 for i in range(k))
                count += 1
    assert count > 0
    with pytest.raises(symm.NotDistinguishedError):
        symm.lemma_constants((2, 1, 3), 2, 2)
