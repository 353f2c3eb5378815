"""
Symmetric group combinatorics.

Permutations are tuples in one-line notation on {1, ..., n}: ``x[i-1] == x(i)``.
Products compose right to left, ``compose(x, y)(i) == x(y(i))``, and s_i is the
adjacent transposition (i, i+1). Compositions are tuples of positive integers; any
zero parts are stripped on construction since the Young subgroup only depends on
the partial sums.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

Perm = tuple[int, ...]
Composition = tuple[int, ...]


class NotDistinguishedError(ValueError):
    """A permutation was required to be a distinguished double coset representative."""


def composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be non-negative: {parts}")
    return tuple(p for p in parts if p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(x: Sequence[int]) -> bool:
    return sorted(x) == list(range(1, len(x) + 1))


def compose(x: Perm, y: Perm) -> Perm:
    return tuple(x[j - 1] for j in y)


def inverse(x: Perm) -> Perm:
    inv = [0] * len(x)
    for i, xi in enumerate(x, start=1):
        inv[xi - 1] = i
    return tuple(inv)


def simple(n: int, i: int) -> Perm:
    """The adjacent transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    x = list(range(1, n + 1))
    x[i - 1], x[i] = x[i], x[i - 1]
    return tuple(x)


def perm_length(x: Perm) -> int:
    """Number of inversions, which is the Coxeter length."""
    n = len(x)
    return sum(1 for i in range(n) for j in range(i + 1, n) if x[i] > x[j])


def reduced_word(x: Perm) -> list[int]:
    """
    A reduced word [i_1, ..., i_k] with x = s_{i_1} ... s_{i_k}.

    Strips right descents one at a time, always taking the leftmost one.

    >>> reduced_word((3, 1, 2))
    [2, 1]
    """
    y = list(x)
    word = []
    while True:
        for i in range(len(y) - 1):
            if y[i] > y[i + 1]:
                y[i], y[i + 1] = y[i + 1], y[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return word


def from_word(n: int, word: Iterable[int]) -> Perm:
    x = list(range(1, n + 1))
    for i in word:
        # right multiplication by s_i swaps positions i, i+1
        x[i - 1], x[i] = x[i], x[i - 1]
    return tuple(x)


def all_perms(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


# -- Young subgroups ----------------------------------------------------------

def blocks(mu: Composition) -> list[range]:
    """Consecutive position ranges [a, b] of the rows of mu, as 1-indexed ranges."""
    out = []
    start = 1
    for part in mu:
        out.append(range(start, start + part))
        start += part
    return out


def generators(mu: Composition) -> frozenset[int]:
    """Indices of S_mu: all i in [1, n-1] that are not a partial sum of mu."""
    n = sum(mu)
    cuts = set(itertools.accumulate(mu))
    return frozenset(i for i in range(1, n) if i not in cuts)


def composition_from_generators(n: int, gens: Iterable[int], start: int = 0) -> Composition:
    """
    The composition of n - start whose Young subgroup, shifted by ``start``, is generated
    by the given s_i (only indices i > start are looked at).
    """
    gens = set(gens)
    parts = []
    prev = start
    for i in range(start + 1, n):
        if i not in gens:
            parts.append(i - prev)
            prev = i
    if n > prev:
        parts.append(n - prev)
    return tuple(parts)


def in_young(x: Perm, mu: Composition) -> bool:
    for block in blocks(mu):
        if any(x[i - 1] not in block for i in block):
            return False
    return True


def young_elements(mu: Composition) -> list[Perm]:
    """All elements of the Young subgroup S_mu, sorted."""
    per_block = []
    for block in blocks(mu):
        per_block.append(list(itertools.permutations(block)))
    out = []
    for choice in itertools.product(*per_block):
        out.append(tuple(v for part in choice for v in part))
    return sorted(out)


# -- tableaux and distinguished representatives -------------------------------

@dataclass(frozen=True)
class Tableau:
    """A filling of the diagram of ``shape``; ``rows[i][j]`` is the entry in box (i+1, j+1)."""

    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def initial(cls, mu: Composition) -> "Tableau":
        """t^mu: 1..n entered left to right, top to bottom."""
        return cls(mu, tuple(tuple(b) for b in blocks(mu)))

    def act(self, x: Perm) -> "Tableau":
        return Tableau(self.shape, tuple(tuple(x[v - 1] for v in row) for row in self.rows))

    def is_row_standard(self) -> bool:
        return all(row[j] < row[j + 1] for row in self.rows for j in range(len(row) - 1))


def is_distinguished_right(x: Perm, mu: Composition) -> bool:
    """x in S^mu, i.e. x . t^mu is row-standard."""
    return Tableau.initial(mu).act(x).is_row_standard()


def is_distinguished_left(x: Perm, mu: Composition) -> bool:
    """x in ^mu S, i.e. x^-1 . t^mu is row-standard."""
    return Tableau.initial(mu).act(inverse(x)).is_row_standard()


def coset_reps(
    mu: Composition,
    side: Literal["left", "right", "double"] = "right",
    nu: Composition | None = None,
) -> list[Perm]:
    """
    Distinguished representatives: ``right`` gives S^mu (for S_n / S_mu), ``left`` gives
    ^mu S (for S_mu \\ S_n) and ``double`` gives ^mu S^nu.
    """
    n = sum(mu)
    if side == "double":
        if nu is None or sum(nu) != n:
            raise ValueError(f"double cosets need |nu| = {n}")
        return [x for x in all_perms(n) if is_distinguished_left(x, mu) and is_distinguished_right(x, nu)]
    if nu is not None:
        raise ValueError("nu is only used for double cosets")
    test = is_distinguished_right if side == "right" else is_distinguished_left
    return [x for x in all_perms(n) if test(x, mu)]


def right_decompose(w: Perm, mu: Composition) -> tuple[Perm, Perm]:
    """w = x * y with x in S^mu and y in S_mu (sort each block of positions)."""
    x = list(w)
    for block in blocks(mu):
        lo, hi = block.start - 1, block.stop - 1
        x[lo:hi] = sorted(x[lo:hi])
    x = tuple(x)
    return x, compose(inverse(x), w)


def left_decompose(w: Perm, mu: Composition) -> tuple[Perm, Perm]:
    """w = y * x with y in S_mu and x in ^mu S."""
    xi, yi = right_decompose(inverse(w), mu)
    return inverse(yi), inverse(xi)


def conjugate_simple(x: Perm, j: int) -> int | None:
    """If x s_j x^-1 is a simple transposition s_i, return i."""
    a, b = x[j - 1], x[j]
    if abs(a - b) == 1:
        return min(a, b)
    return None


def tau(x: Perm, mu: Composition, nu: Composition) -> Composition:
    """The composition with S_tau = S_mu ∩ x S_nu x^-1, for x in ^mu S^nu."""
    if not (is_distinguished_left(x, mu) and is_distinguished_right(x, nu)):
        raise NotDistinguishedError(f"{x} is not in ^{mu}S^{nu}")
    gens_mu = generators(mu)
    common = set()
    for j in generators(nu):
        i = conjugate_simple(x, j)
        if i is not None and i in gens_mu:
            common.add(i)
    return composition_from_generators(len(x), common)


def triple_decompose(w: Perm, mu: Composition, nu: Composition) -> tuple[Perm, Perm, Perm]:
    """
    The unique w = y x z with x in ^mu S^nu, y in (S_mu)^tau(x), z in S_nu; lengths add.
    """
    if sum(mu) != len(w) or sum(nu) != len(w):
        raise ValueError("compositions must have size n")
    v, z = right_decompose(w, nu)
    y, x = left_decompose(v, mu)
    t = tau(x, mu, nu)
    assert in_young(y, mu) and is_distinguished_right(y, t), (w, y, x, z)
    assert perm_length(w) == perm_length(y) + perm_length(x) + perm_length(z)
    return y, x, z


def lemma_constants(x: Perm, l: int, m: int) -> tuple[int, int]:
    """
    c = min{i >= 0 : x(i+1) != i+1 or i = n} and k = min(c, l, m).

    Asserts the two conclusions: x fixes 1..k and [1, l] ∩ {x(1), ..., x(m)} = [1, k].
    """
    n = len(x)
    c = 0
    while c < n and x[c] == c + 1:
        c += 1
    k = min(c, l, m)
    if any(x[i] != i + 1 for i in range(k)) or {v for v in x[:m] if v <= l} != set(range(1, k + 1)):
        raise NotDistinguishedError(f"{x} violates the conclusions for l={l}, m={m}")
    return c, k
