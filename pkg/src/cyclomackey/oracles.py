"""
Brute-force references that share no logic with the constructions they check:
orbit partitions come from union-find over generator edges of the whole group.
"""
from __future__ import annotations

from typing import Iterable

from . import wgroup
from .wgroup import ParabolicIndex, WElem


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self) -> list[frozenset]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return sorted((frozenset(g) for g in groups.values()), key=min)


def _generators(p: ParabolicIndex, r: int) -> list[WElem]:
    return [wgroup.s(p.n, r, j) for j in p.generators]


def double_coset_partition(a: ParabolicIndex | None, b: ParabolicIndex | None, n: int, r: int) -> list[frozenset]:
    """Classes of W under w ~ g w (g ∈ gens of W_a) and w ~ w h (h ∈ gens of W_b); None means trivial."""
    elems = wgroup.all_elements(n, r)
    uf = _UnionFind(elems)
    left = _generators(a, r) if a is not None else []
    right = _generators(b, r) if b is not None else []
    for w in elems:
        for g in left:
            uf.union(w, g * w)
        for h in right:
            uf.union(w, w * h)
    return uf.classes()


def left_cosets(p: ParabolicIndex, r: int) -> list[frozenset]:
    """The cosets w W_p."""
    return double_coset_partition(None, p, p.n, r)


def right_cosets(p: ParabolicIndex, r: int) -> list[frozenset]:
    """The cosets W_p w."""
    return double_coset_partition(p, None, p.n, r)


def is_transversal(reps: Iterable[WElem], classes: list[frozenset]) -> bool:
    """Each class contains exactly one of ``reps`` and every rep lies in some class."""
    reps = list(reps)
    if len(set(reps)) != len(reps) or len(reps) != len(classes):
        return False
    where = {}
    for k, cls in enumerate(classes):
        for w in cls:
            where[w] = k
    return sorted(where[w] for w in reps) == list(range(len(classes)))


def brute_intersection(a: ParabolicIndex, u: WElem, b: ParabolicIndex) -> set[WElem]:
    """W_a ∩ u W_b u^-1, by testing every element of W."""
    ui = u.inverse()
    return {w for w in wgroup.all_elements(a.n, u.r) if a.contains(w) and b.contains(ui * w * u)}


def subgroup_closure(gens: Iterable[WElem], n: int, r: int) -> set[WElem]:
    return wgroup.closure(gens, n, r)
