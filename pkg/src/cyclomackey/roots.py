"""
A symbolic root system for G(r,1,n) and the sets R_(l,mu), R*_(l,mu) cut out by it.

Symbols e_i^(a) (1 <= i <= n, a mod r) carry two W-actions,

    dot:  (x t^a) . e_i^(c) = e_{x(i)}^(c + a_i),     star: (x t^a) * e_i^(c) = e_{x(i)}^(c - a_i),

extended to formal differences e_i^(a) - e_j^(b) componentwise.
"""
from __future__ import annotations

import cmath
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

from . import symm, wgroup
from .wgroup import ParabolicIndex, WElem

Mode = Literal["dot", "star"]


@dataclass(frozen=True, order=True)
class Root:
    """``e(i,a)`` when j is None, otherwise ``e(i,a) - e(j,b)``."""

    i: int
    a: int
    j: int | None = None
    b: int | None = None

    @property
    def kind(self) -> str:
        return "single" if self.j is None else "difference"

    def __str__(self):
        head = f"e({self.i},{self.a})"
        return head if self.j is None else f"{head}-e({self.j},{self.b})"

    @classmethod
    def parse(cls, text: str) -> "Root":
        parts = text.replace(" ", "").split("-e(")
        i, a = map(int, parts[0].removeprefix("e(").rstrip(")").split(","))
        if len(parts) == 1:
            return cls(i, a)
        j, b = map(int, parts[1].rstrip(")").split(","))
        return cls(i, a, j, b)


def single(i: int, a: int, r: int) -> Root:
    return Root(i, a % r)


def diff(i: int, a: int, j: int, b: int, r: int) -> Root:
    if i == j:
        raise ValueError("a difference root needs i != j")
    return Root(i, a % r, j, b % r)


def act(w: WElem, root: Root, mode: Mode = "dot") -> Root:
    sign = 1 if mode == "dot" else -1
    x, col, r = w.perm, w.colors, w.r
    i, a = x[root.i - 1], (root.a + sign * col[root.i - 1]) % r
    if root.j is None:
        return Root(i, a)
    return Root(i, a, x[root.j - 1], (root.b + sign * col[root.j - 1]) % r)


def act_set(w: WElem, roots: Iterable[Root], mode: Mode = "dot") -> set[Root]:
    return {act(w, rho, mode) for rho in roots}


# -- the sets ---------------------------------------------------------------------

@dataclass(frozen=True)
class RootSets:
    n: int
    r: int
    index: ParabolicIndex | None
    Phi: frozenset
    Omega: frozenset
    Delta: frozenset
    Omega_tilde: frozenset | None = None


def phi0(n: int, r: int) -> frozenset:
    out = set()
    for i in range(1, n + 1):
        out.add(Root(i, 0))
        for j in range(1, n + 1):
            if i == j:
                continue
            for a in range(r):
                for b in range(r):
                    if (i > j and a == 0) or (i < j and b != 0):
                        out.add(Root(i, a, j, b))
    return frozenset(out)


def _segments(p: ParabolicIndex) -> list[range]:
    """Position ranges of the mu-blocks, shifted by l."""
    return [range(block.start + p.l, block.stop + p.l) for block in symm.blocks(p.mu)]


def build_sets(n: int, r: int, p: ParabolicIndex | None = None) -> RootSets:
    if p is None:
        Phi = {Root(i, a) for i in range(1, n + 1) for a in range(r)}
        Phi |= {Root(i, a, j, b) for i in range(1, n + 1) for j in range(1, n + 1) if i != j
                for a in range(r) for b in range(r)}
        Omega = {Root(i, 0, j, b) for i in range(1, n + 1) for j in range(1, i) for b in range(r)}
        Omega |= {Root(i, 0) for i in range(1, n + 1)}
        Delta = {Root(i + 1, 0, i, 0) for i in range(1, n)} | {Root(1, 0)}
        assert len(Phi) == r * r * n * (n - 1) + r * n
        return RootSets(n, r, None, frozenset(Phi), frozenset(Omega), frozenset(Delta))
    if p.n != n:
        raise ValueError(f"index {p} is not for n={n}")
    l = p.l
    Phi = {Root(i, a, j, b) for i in range(1, l + 1) for j in range(1, l + 1) if i != j
           for a in range(r) for b in range(r)}
    Phi |= {Root(i, a) for i in range(1, l + 1) for a in range(r)}
    Omega = {Root(i, 0, j, b) for i in range(1, l + 1) for j in range(1, i) for b in range(r)}
    Omega |= {Root(i, 0) for i in range(1, l + 1)}
    Omega_t = set(Omega)
    Delta = {Root(i + 1, 0, i, 0) for i in range(1, l)}
    if l:
        Delta.add(Root(1, 0))
    for seg in _segments(p):
        for i in seg:
            for j in seg:
                if i != j:
                    Phi.add(Root(i, 0, j, 0))
                if j < i:
                    Omega.add(Root(i, 0, j, 0))
                    Omega_t.update(Root(i, 0, j, b) for b in range(r))
        Delta.update(Root(i + 1, 0, i, 0) for i in seg[:-1])
    assert Omega <= Omega_t
    return RootSets(n, r, p, frozenset(Phi), frozenset(Omega), frozenset(Delta), frozenset(Omega_t))


def is_all_ones(p: ParabolicIndex) -> bool:
    return all(part == 1 for part in p.mu)


# -- R-sets ---------------------------------------------------------------------

@dataclass(frozen=True)
class RSets:
    R: frozenset
    R_star: frozenset
    R0: frozenset
    R_star0: frozenset
    # elements where the Ω- and Δ-conditions disagree (dot, star); expected empty
    omega_delta_mismatch: tuple[tuple[WElem, str], ...]


def r_sets(p: ParabolicIndex, r: int) -> RSets:
    n = p.n
    sets = build_sets(n, r, p)
    P0 = phi0(n, r)
    R, Rs, R0, Rs0, bad = set(), set(), set(), set(), []
    for w in wgroup.all_elements(n, r):
        wi = w.inverse()
        om = act_set(w, sets.Omega) <= P0
        de = act_set(w, sets.Delta) <= P0
        oms = act_set(wi, sets.Omega, "star") <= P0
        des = act_set(wi, sets.Delta, "star") <= P0
        if om != de:
            bad.append((w, "dot"))
        if oms != des:
            bad.append((w, "star"))
        if om:
            R.add(w)
        if oms:
            Rs.add(w)
        if act_set(w, sets.Omega_tilde) <= P0:
            R0.add(w)
        if act_set(wi, sets.Omega_tilde, "star") <= P0:
            Rs0.add(w)
    assert R0 <= R and Rs0 <= Rs
    return RSets(frozenset(R), frozenset(Rs), frozenset(R0), frozenset(Rs0), tuple(bad))


@lru_cache(maxsize=None)
def word_lengths(n: int, r: int) -> dict[WElem, int]:
    """ℓ(w): distance from 1 in the Cayley graph of {s_0, ..., s_{n-1}}."""
    gens = [wgroup.s(n, r, j) for j in range(n)]
    start = wgroup.identity(n, r)
    dist = {start: 0}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for g in gens:
            v = w * g
            if v not in dist:
                dist[v] = dist[w] + 1
                todo.append(v)
    return dist


def remark_counterexamples(p: ParabolicIndex, r: int, rs: RSets | None = None) -> dict[str, list[WElem]]:
    """Elements of W^(l,mu) outside R_(l,mu), and of ^(l,mu)W outside R*_(l,mu)."""
    rs = rs or r_sets(p, r)
    right = [w for w in wgroup.one_sided_reps(p, r, "right") if w not in rs.R]
    left = [w for w in wgroup.one_sided_reps(p, r, "left") if w not in rs.R_star]
    return {"right": right, "left": left}


# -- the complex realization ---------------------------------------------------------

def phi_vector(root: Root, n: int, r: int) -> list[complex]:
    zeta = cmath.exp(2j * cmath.pi / r)
    v = [0j] * n
    v[root.i - 1] += zeta ** root.a
    if root.j is not None:
        v[root.j - 1] -= zeta ** root.b
    return v


def reflection_action(w: WElem, v: list[complex]) -> list[complex]:
    """(x t^a) . ε_i = ζ^{a_i} ε_{x(i)}."""
    zeta = cmath.exp(2j * cmath.pi / w.r)
    out = [0j] * len(v)
    for i, c in enumerate(v, start=1):
        out[w.perm[i - 1] - 1] += zeta ** w.colors[i - 1] * c
    return out


def phi_compatibility_error(n: int, r: int) -> float:
    """max |φ(w . ρ) - w . φ(ρ)| over all w and ρ."""
    roots = build_sets(n, r).Phi
    worst = 0.0
    for w in wgroup.all_elements(n, r):
        for rho in roots:
            lhs = phi_vector(act(w, rho), n, r)
            rhs = reflection_action(w, phi_vector(rho, n, r))
            worst = max(worst, max(abs(x - y) for x, y in zip(lhs, rhs)))
    return worst
