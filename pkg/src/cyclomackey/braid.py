"""
Positive braid words for B(n, r) and equivalence under the length-preserving braid relations

    σ0 σ1 σ0 σ1 = σ1 σ0 σ1 σ0,   σi σi+1 σi = σi+1 σi σi+1 (i >= 1),   σi σj = σj σi (|i - j| > 1).

Words are tuples of generator indices. The map to W(n, r) sends σ_j to s_j and reverses
the order of products, ``image(w1 + w2) == image(w2) * image(w1)``: with this orientation
the word ω attached to a double coset representative u has image exactly u.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import symm, wgroup
from .wgroup import DoubleCosetDatum, WElem

BraidWord = tuple[int, ...]

DEFAULT_NODE_CAP = 5_000_000


class CapExceeded(RuntimeError):
    """Raised by callers that treat a resource-exhausted search as an error."""


def gamma_word(i: int, n: int | None = None) -> BraidWord:
    """γ_i = σ_{i-1} ... σ_1 σ_0 σ_1 ... σ_{i-1}."""
    if i < 1 or (n is not None and i > n):
        raise ValueError(f"gamma_{i} is out of range")
    down = tuple(range(i - 1, -1, -1))
    return down + down[-2::-1] if i > 1 else (0,)


def omega_word(d: DoubleCosetDatum) -> BraidWord:
    """
    ω = (∏_{i ∈ I(x)} γ_i^{a_i}) σ_{i_l} ... σ_{i_1} for a reduced expression x = s_{i_1} ... s_{i_l}.
    """
    u = d.u
    word: list[int] = []
    for i in d.I_x:
        word.extend(gamma_word(i) * u.colors[i - 1])
    word.extend(reversed(symm.reduced_word(u.perm)))
    omega = tuple(word)
    assert image(omega, u.n, u.r) == u, (omega, u)
    return omega


def image(word: Sequence[int], n: int, r: int) -> WElem:
    """The element of W(n, r) represented by the word (read right to left)."""
    return wgroup.from_word(n, r, reversed(tuple(word)))


def _relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    rels = []
    if n >= 2:
        rels.append(("b4", (0, 1, 0, 1), (1, 0, 1, 0)))
    for i in range(1, n - 1):
        rels.append((f"b3[{i}]", (i, i + 1, i), (i + 1, i, i + 1)))
    for i in range(n):
        for j in range(i + 2, n):
            rels.append((f"c[{i},{j}]", (i, j), (j, i)))
    return rels


def _neighbours(word: BraidWord, rels) -> Iterable[tuple[BraidWord, tuple[int, str, str]]]:
    L = len(word)
    for name, lhs, rhs in rels:
        k = len(lhs)
        for p in range(L - k + 1):
            piece = word[p:p + k]
            if piece == lhs:
                yield word[:p] + rhs + word[p + k:], (p, name, "fwd")
            elif piece == rhs:
                yield word[:p] + lhs + word[p + k:], (p, name, "rev")


@dataclass
class EquivResult:
    """``equivalent`` is None when the node cap was hit before a decision."""

    equivalent: bool | None
    trace: list[tuple[int, str, str]] = field(default_factory=list)
    explored: int = 0

    @property
    def exhausted(self) -> bool:
        return self.equivalent is None

    def __bool__(self):
        return bool(self.equivalent)


def braid_equiv(w1: Sequence[int], w2: Sequence[int], n: int | None = None,
                cap: int = DEFAULT_NODE_CAP) -> EquivResult:
    """
    Decide whether two positive words are related by the braid relations.

    Searches breadth first from both ends; since every relation preserves length and
    the alphabet the closure is finite. The trace lists (position, relation, direction)
    steps rewriting ``w1`` into ``w2``.
    """
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != len(w2):
        return EquivResult(False)
    if sorted(set(w1)) != sorted(set(w2)):
        # the set of letters occurring is a braid invariant
        return EquivResult(False)
    if n is None:
        n = max(w1 + w2, default=0) + 1
    if w1 == w2:
        return EquivResult(True, [], 1)
    rels = _relations(n)
    # parent maps: word -> (previous word, step)
    sides = [{w1: None}, {w2: None}]
    frontiers = [deque([w1]), deque([w2])]
    explored = 2
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        seen, other = sides[side], sides[1 - side]
        nxt = deque()
        for word in frontiers[side]:
            for nb, step in _neighbours(word, rels):
                if nb in seen:
                    continue
                seen[nb] = (word, step)
                if nb in other:
                    return EquivResult(True, _join(sides, nb), explored)
                explored += 1
                if explored > cap:
                    return EquivResult(None, [], explored)
                nxt.append(nb)
        frontiers[side] = nxt
    return EquivResult(False, [], explored)


def _invert(step):
    p, name, direction = step
    return p, name, "rev" if direction == "fwd" else "fwd"


def _join(sides, meet) -> list[tuple[int, str, str]]:
    head = []
    word = meet
    while sides[0][word] is not None:
        word, step = sides[0][word]
        head.append(step)
    head.reverse()
    tail = []
    word = meet
    while sides[1][word] is not None:
        prev, step = sides[1][word]
        tail.append(_invert(step))
        word = prev
    return head + tail


def apply_trace(word: Sequence[int], trace, n: int) -> BraidWord:
    """Replay a trace; used to certify witnesses."""
    rels = {name: (lhs, rhs) for name, lhs, rhs in _relations(n)}
    word = tuple(word)
    for p, name, direction in trace:
        lhs, rhs = rels[name]
        src, dst = (lhs, rhs) if direction == "fwd" else (rhs, lhs)
        if word[p:p + len(src)] != src:
            raise ValueError(f"step {(p, name, direction)} does not apply to {word}")
        word = word[:p] + dst + word[p + len(src):]
    return word


def check_datum(d: DoubleCosetDatum, cap: int = DEFAULT_NODE_CAP) -> list[tuple[int, int, EquivResult]]:
    """For each s_j in X_(k(u), π(u)): is ω σ_j ≡ σ_ψ(j) ω?"""
    omega = omega_word(d)
    n = d.u.n
    out = []
    for j, p in d.psi:
        res = braid_equiv(omega + (j,), (p,) + omega, n=n, cap=cap)
        if res.equivalent:
            assert apply_trace(omega + (j,), res.trace, n) == (p,) + omega
        out.append((j, p, res))
    return out
