import itertools

from hypothesis import given, strategies as st

from cyclomackey import braid, symm, wgroup as W
from cyclomackey.wgroup import ParabolicIndex as P


def test_gamma_words():
    assert braid.gamma_word(1) == (0,)
    assert braid.gamma_word(2) == (1, 0, 1)
    assert braid.gamma_word(3) == (2, 1, 0, 1, 2)
    assert braid.image(braid.gamma_word(3), 3, 3) == W.t(3, 3, 3)


def test_omega_words():
    a = b = P(0, (1, 1))
    data = {d.u: d for d in W.double_coset_reps(a, b, 2)}
    assert braid.omega_word(data[W.identity(2, 2)]) == ()
    assert braid.omega_word(data[W.t(2, 2, 2)]) == (1, 0, 1)
    for u, d in data.items():
        assert braid.image(braid.omega_word(d), 2, 2) == u


def test_equiv_examples():
    assert braid.braid_equiv([0, 1, 0, 1], [1, 0, 1, 0]).equivalent
    assert braid.braid_equiv([0, 2], [2, 0]).equivalent
    res = braid.braid_equiv([0, 1], [1, 0])
    assert res.equivalent is False and not res.exhausted
    assert braid.braid_equiv([0, 1], [0, 1, 0]).equivalent is False


def test_trace_replays():
    w1, w2 = (0, 1, 0, 1, 2, 1), (1, 0, 1, 0, 1, 2)
    res = braid.braid_equiv(w1, w2, n=3)
    if res.equivalent:
        assert braid.apply_trace(w1, res.trace, 3) == w2


def test_cap_is_distinct_from_false():
    d = max((d for a, b in itertools.product(W.all_indices(3), repeat=2) for d in W.double_coset_reps(a, b, 3)),
            key=lambda d: len(braid.omega_word(d)))
    omega = braid.omega_word(d)
    j, p = d.psi[-1] if d.psi else (1, 1)
    res = braid.braid_equiv(omega + (2,), (1,) + omega, n=3, cap=5)
    assert res.equivalent in (None, False)


words = st.lists(st.integers(0, 2), min_size=1, max_size=7).map(tuple)


@given(words, words)
def test_image_reverses_products(w1, w2):
    assert braid.image(w1 + w2, 3, 3) == braid.image(w2, 3, 3) * braid.image(w1, 3, 3)


@given(words)
def test_equivalent_words_have_equal_images(w):
    res = braid.braid_equiv(w, tuple(reversed(w)), n=3)
    if res.equivalent:
        assert braid.image(w, 3, 2) == braid.image(tuple(reversed(w)), 3, 2)
    assert braid.braid_equiv(w, w).equivalent


@given(words, words, words)
def test_equivalence_relation(a, b, c):
    ab = braid.braid_equiv(a, b, n=3).equivalent
    assert braid.braid_equiv(b, a, n=3).equivalent == ab
    if ab and braid.braid_equiv(b, c, n=3).equivalent:
        assert braid.braid_equiv(a, c, n=3).equivalent


def test_reduced_words_are_equivalent():
    for x in symm.all_perms(4):
        w = tuple(symm.reduced_word(x))
        alt = tuple(symm.reduced_word(symm.inverse(x)))[::-1]
        assert symm.from_word(4, alt) == x
        assert braid.braid_equiv(w, alt, n=4).equivalent


def test_check_datum_small():
    for a, b in itertools.product(W.all_indices(2), repeat=2):
        for d in W.double_coset_reps(a, b, 3):
            for j, p, res in braid.check_datum(d):
                assert res.equivalent
