"""
Small exact linear algebra over a field of Python rationals.

Vectors are sparse ``dict[key, Fraction]`` and a linear map is stored by columns:
``cols[k]`` is the image of the k-th basis vector. Only what the module checks need.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Vector = dict
LinMap = list  # list of Vector, one per source basis vector


def vadd(acc: dict, vec: Mapping, scale=1) -> dict:
    """acc += scale * vec, in place, dropping zeros."""
    for k, v in vec.items():
        s = acc.get(k, 0) + scale * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def apply(cols: Sequence[Mapping], vec: Mapping) -> dict:
    out: dict = {}
    for k, c in vec.items():
        vadd(out, cols[k], c)
    return out


def compose(a: Sequence[Mapping], b: Sequence[Mapping]) -> list[dict]:
    """The map a ∘ b."""
    return [apply(a, col) for col in b]


def identity(dim: int) -> list[dict]:
    return [{k: Fraction(1)} for k in range(dim)]


def scale(cols: Sequence[Mapping], c) -> list[dict]:
    return [{k: c * v for k, v in col.items() if c * v} for col in cols]


def add(a: Sequence[Mapping], b: Sequence[Mapping], sb=1) -> list[dict]:
    return [vadd(dict(x), y, sb) for x, y in zip(a, b)]


def is_zero(cols: Iterable[Mapping]) -> bool:
    return all(not col for col in cols)


def rank(vectors: Iterable[Mapping[Hashable, Fraction]]) -> int:
    """Rank of a family of sparse vectors by fraction-exact Gaussian elimination."""
    pivots: dict[Hashable, dict] = {}
    r = 0
    for vec in vectors:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            key = min(v, key=_sort_key)
            piv = pivots.get(key)
            if piv is None:
                c = v[key]
                pivots[key] = {k: x / c for k, x in v.items()}
                r += 1
                break
            vadd(v, piv, -v[key])
    return r


def _sort_key(k):
    return (type(k).__name__, k)


def to_dense(cols: Sequence[Mapping], dim: int) -> list[list[Fraction]]:
    """Row-major dense matrix of the map (entry [i][k] = coefficient of e_i in image of e_k)."""
    rows = [[Fraction(0)] * len(cols) for _ in range(dim)]
    for k, col in enumerate(cols):
        for i, c in col.items():
            rows[i][k] = Fraction(c)
    return rows
