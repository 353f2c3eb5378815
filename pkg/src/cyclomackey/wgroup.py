"""
The complex reflection group W(n, r) = S_n ⋉ (Z/rZ)^n of type G(r, 1, n).

Every element is stored in the normal form x t_1^{a_1} ... t_n^{a_n} as a permutation
in one-line notation and a color vector. With x t_i x^-1 = t_{x(i)} the product is

    (x, a) (y, b) = (x y, c),   c_j = a_{y(j)} + b_j  (mod r).

Standard parabolic subgroups W_(l, mu) are generated by all of s_0, ..., s_{n-1}
except s_l, s_{l + mu_1}, s_{l + mu_1 + mu_2}, ...; as sets they are
{x t_1^{a_1} ... t_l^{a_l} : x in S_(l, mu)}.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Literal

from . import symm
from .symm import Composition, Perm


class DimensionMismatchError(ValueError):
    """Raised when elements of different groups W(n, r) are combined."""


@dataclass(frozen=True, order=True)
class WElem:
    perm: Perm
    colors: tuple[int, ...]
    r: int = field(compare=True)

    def __post_init__(self):
        if len(self.perm) != len(self.colors):
            raise DimensionMismatchError("perm and colors must have the same length")

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "WElem") -> "WElem":
        return w_multiply(self, other)

    def inverse(self) -> "WElem":
        x, a, r = self.perm, self.colors, self.r
        xi = symm.inverse(x)
        return WElem(xi, tuple((-a[xi[j] - 1]) % r for j in range(len(x))), r)

    def is_identity(self) -> bool:
        return self.perm == symm.identity(self.n) and not any(self.colors)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict, r: int) -> "WElem":
        return cls(tuple(data["perm"]), tuple(c % r for c in data["colors"]), r)

    def __str__(self):
        parts = []
        if self.perm != symm.identity(self.n):
            parts.append("[" + ",".join(map(str, self.perm)) + "]")
        for i, a in enumerate(self.colors, start=1):
            if a:
                parts.append(f"t{i}" + (f"^{a}" if a > 1 else ""))
        return "*".join(parts) or "1"


def w_multiply(a: WElem, b: WElem) -> WElem:
    if a.n != b.n or a.r != b.r:
        raise DimensionMismatchError(f"W({a.n},{a.r}) vs W({b.n},{b.r})")
    x, ac = a.perm, a.colors
    y, bc = b.perm, b.colors
    r = a.r
    return WElem(
        tuple(x[j - 1] for j in y),
        tuple((ac[y[j] - 1] + bc[j]) % r for j in range(len(y))),
        r,
    )


def identity(n: int, r: int) -> WElem:
    return WElem(symm.identity(n), (0,) * n, r)


def from_perm(x: Perm, r: int) -> WElem:
    return WElem(tuple(x), (0,) * len(x), r)


def t(n: int, r: int, i: int, power: int = 1) -> WElem:
    colors = [0] * n
    colors[i - 1] = power % r
    return WElem(symm.identity(n), tuple(colors), r)


def s(n: int, r: int, j: int) -> WElem:
    """The standard generator s_j; s_0 = t_1."""
    if j == 0:
        return t(n, r, 1)
    return from_perm(symm.simple(n, j), r)


def from_word(n: int, r: int, word: Iterable[int]) -> WElem:
    out = identity(n, r)
    for j in word:
        out = out * s(n, r, j)
    return out


def product(elems: Iterable[WElem], n: int, r: int) -> WElem:
    out = identity(n, r)
    for e in elems:
        out = out * e
    return out


def all_elements(n: int, r: int) -> list[WElem]:
    return [WElem(x, a, r) for x in symm.all_perms(n) for a in itertools.product(range(r), repeat=n)]


def closure(gens: Iterable[WElem], n: int, r: int) -> set[WElem]:
    """The subgroup generated by ``gens`` (breadth first over right multiplication)."""
    gens = list(gens)
    start = identity(n, r)
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for g in gens:
            v = w * g
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


# -- standard parabolic subgroups ---------------------------------------------

@dataclass(frozen=True, order=True)
class ParabolicIndex:
    """The pair (l, mu) with l + |mu| = n; zero parts of mu are dropped."""

    l: int
    mu: Composition

    def __init__(self, l: int, mu: Iterable[int] = ()):
        object.__setattr__(self, "l", int(l))
        object.__setattr__(self, "mu", symm.composition(mu))
        if self.l < 0:
            raise ValueError("l must be non-negative")

    @property
    def n(self) -> int:
        return self.l + sum(self.mu)

    @cached_property
    def perm_composition(self) -> Composition:
        """(l, mu) as a composition of n, the Young subgroup S_(l, mu)."""
        return symm.composition((self.l, *self.mu))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Indices j with s_j in X_(l, mu), in increasing order."""
        cuts = {self.l + p for p in itertools.accumulate((0, *self.mu))}
        return tuple(j for j in range(self.n) if j not in cuts)

    @cached_property
    def s_generators(self) -> frozenset[int]:
        """S_(l, mu) = X_(l, mu) ∩ S."""
        return frozenset(j for j in self.generators if j > 0)

    def contains(self, w: WElem) -> bool:
        if w.n != self.n:
            raise DimensionMismatchError(f"element of W({w.n}) vs index for n={self.n}")
        return symm.in_young(w.perm, self.perm_composition) and not any(w.colors[self.l:])

    def is_sub(self, other: "ParabolicIndex") -> bool:
        """True if W_self is a standard parabolic subgroup of W_other."""
        return self.n == other.n and set(self.generators) <= set(other.generators)

    @classmethod
    def full(cls, n: int) -> "ParabolicIndex":
        return cls(n, ())

    @classmethod
    def parse(cls, text: str) -> "ParabolicIndex":
        """Parse ``l:[mu_1,mu_2,...]``."""
        head, sep, tail = text.partition(":")
        if not sep:
            raise ValueError(f"expected l:[mu,...], got {text!r}")
        tail = tail.strip()
        if not (tail.startswith("[") and tail.endswith("]")):
            raise ValueError(f"expected l:[mu,...], got {text!r}")
        body = tail[1:-1].strip()
        mu = [int(p) for p in body.split(",")] if body else []
        return cls(int(head), mu)

    def __str__(self):
        return f"{self.l}:[{','.join(map(str, self.mu))}]"


def all_indices(n: int) -> list[ParabolicIndex]:
    out = []
    for l in range(n + 1):
        for mu in compositions(n - l):
            out.append(ParabolicIndex(l, mu))
    return out


def compositions(m: int) -> list[Composition]:
    if m == 0:
        return [()]
    out = []
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            out.append((first, *rest))
    return out


def parabolic_elements(p: ParabolicIndex, r: int) -> list[WElem]:
    n = p.n
    out = []
    for x in symm.young_elements(p.perm_composition):
        for a in itertools.product(range(r), repeat=p.l):
            out.append(WElem(x, (*a, *(0,) * (n - p.l)), r))
    return sorted(out)


def one_sided_reps(p: ParabolicIndex, r: int, side: Literal["left", "right"] = "right") -> list[WElem]:
    """
    ``right``: W^(l,mu) = {x t_{l+1}^{a_{l+1}} ... t_n^{a_n} : x in S^(l,mu)} for W / W_(l,mu).
    ``left``: ^(l,mu)W = {t_n^{a_n} ... t_{l+1}^{a_{l+1}} x : x in ^(l,mu)S} for W_(l,mu) \\ W.
    """
    n, l = p.n, p.l
    comp = p.perm_composition
    out = []
    for tail in itertools.product(range(r), repeat=n - l):
        a = (0,) * l + tail
        if side == "right":
            for x in symm.coset_reps(comp, "right"):
                out.append(WElem(x, a, r))
        else:
            for x in symm.coset_reps(comp, "left"):
                # t^a x = x prod t_{x^-1(i)}^{a_i}: color at j is a_{x(j)}
                out.append(WElem(x, tuple(a[x[j] - 1] for j in range(n)), r))
    return sorted(out)


def coset_decompose(w: WElem, p: ParabolicIndex) -> tuple[WElem, WElem]:
    """w = rep * h with rep in W^(l,mu) and h in W_(l,mu)."""
    n, l, r = w.n, p.l, w.r
    x1, x2 = symm.right_decompose(w.perm, p.perm_composition)
    # w = x1 x2 t^b = (x1 prod_{j>l} t_{x2(j)}^{b_j}) (x2 t_1^{b_1}..t_l^{b_l})
    c = [0] * n
    for j in range(l, n):
        c[x2[j] - 1] = w.colors[j]
    rep = WElem(x1, tuple(c), r)
    h = WElem(x2, (*w.colors[:l], *(0,) * (n - l)), r)
    assert rep * h == w
    return rep, h


def left_coset_decompose(w: WElem, p: ParabolicIndex) -> tuple[WElem, WElem]:
    """w = h * rep with h in W_(l,mu) and rep in ^(l,mu)W."""
    rep, h = coset_decompose(w.inverse(), p)
    return h.inverse(), rep.inverse()


def sub_coset_reps(outer: ParabolicIndex, inner: ParabolicIndex, r: int) -> list[WElem]:
    """
    (W_outer)^inner: representatives x t_{k+1}^{a_{k+1}} ... t_l^{a_l} of W_outer / W_inner,
    with x distinguished in S_outer / S_inner.
    """
    if not inner.is_sub(outer):
        raise ValueError(f"{inner} is not a parabolic subgroup of {outer}")
    n, l, k = outer.n, outer.l, inner.l
    out = []
    for x in symm.young_elements(outer.perm_composition):
        if not symm.is_distinguished_right(x, inner.perm_composition):
            continue
        for mid in itertools.product(range(r), repeat=l - k):
            out.append(WElem(x, (0,) * k + mid + (0,) * (n - l), r))
    return sorted(out)


# -- double cosets -------------------------------------------------------------

@dataclass(frozen=True)
class DoubleCosetDatum:
    """A representative u of W_a \\ W / W_b together with its structure data."""

    a: ParabolicIndex
    b: ParabolicIndex
    u: WElem
    I_x: tuple[int, ...]
    c: int
    k: int
    gamma_s: tuple[int, ...]
    pi: Composition
    pi_sharp: Composition
    psi: tuple[tuple[int, int], ...]

    @property
    def x(self) -> Perm:
        return self.u.perm

    @property
    def colors(self) -> tuple[int, ...]:
        return self.u.colors

    @property
    def gamma(self) -> list[WElem]:
        """Γ(u) as group elements: the simple s_j it contains, then t_1, ..., t_k."""
        n, r = self.u.n, self.u.r
        return [s(n, r, j) for j in self.gamma_s] + [t(n, r, i) for i in range(1, self.k + 1)]

    @property
    def inter_index(self) -> ParabolicIndex:
        """(k(u), π(u)), so that W_a ∩ u W_b u^-1 = W_(k, π)."""
        return ParabolicIndex(self.k, self.pi)

    @property
    def sharp_index(self) -> ParabolicIndex:
        """(k(u), π♯(u)), so that u^-1 W_(k, π) u = W_(k, π♯)."""
        return ParabolicIndex(self.k, self.pi_sharp)

    @property
    def psi_map(self) -> dict[int, int]:
        return dict(self.psi)

    def to_json(self) -> dict:
        return {
            "u": self.u.to_json(),
            "x": list(self.x),
            "I_x": list(self.I_x),
            "c": self.c,
            "k": self.k,
            "Gamma": {"s": list(self.gamma_s), "t": list(range(1, self.k + 1))},
            "pi": list(self.pi),
            "pi_sharp": list(self.pi_sharp),
            "psi": {str(j): p for j, p in self.psi},
        }


def index_set(x: Perm, a: ParabolicIndex, b: ParabolicIndex) -> tuple[int, ...]:
    """I(x) = [m+1, n] ∩ {x^-1(l+1), ..., x^-1(n)}."""
    n, l, m = len(x), a.l, b.l
    return tuple(i for i in range(m + 1, n + 1) if x[i - 1] > l)


def tau_generators(x: Perm, a: ParabolicIndex, b: ParabolicIndex) -> list[int]:
    """The j with x s_j x^-1 in S_(l,mu) ∩ x S_(m,nu) x^-1, i.e. generators of x^-1 S_tau(x) x."""
    out = []
    for j in sorted(b.s_generators):
        i = symm.conjugate_simple(x, j)
        if i is not None and i in a.s_generators:
            out.append(j)
    return out


def orbit_action(z: Perm, u: WElem, a: ParabolicIndex, b: ParabolicIndex) -> WElem:
    """
    z ⊙ (x prod t_i^{a_i}) = x prod t_{y(i)}^{a_i} for z = x y x^-1 in S_tau(x).

    The permutation part is unchanged; only the colors on I(x) move.
    """
    x = u.perm
    comp_tau = symm.tau(x, a.perm_composition, b.perm_composition)
    if not symm.in_young(z, comp_tau):
        raise ValueError(f"{z} is not in S_tau(x) = S_{comp_tau}")
    y = symm.compose(symm.compose(symm.inverse(x), z), x)
    new = [0] * u.n
    for i, c in enumerate(u.colors, start=1):
        new[y[i - 1] - 1] = c
    return WElem(x, tuple(new), u.r)


def _orbit(colors: tuple[int, ...], swaps: list[int]) -> dict[tuple[int, ...], Perm]:
    """⊙-orbit of a color vector under adjacent swaps; maps each vector to a y producing it."""
    n = len(colors)
    seen = {colors: symm.identity(n)}
    todo = deque([colors])
    while todo:
        a = todo.popleft()
        y = seen[a]
        for j in swaps:
            if a[j - 1] == a[j]:
                continue
            b = list(a)
            b[j - 1], b[j] = b[j], b[j - 1]
            b = tuple(b)
            if b not in seen:
                seen[b] = symm.compose(symm.simple(n, j), y)
                todo.append(b)
    return seen


def make_datum(u: WElem, a: ParabolicIndex, b: ParabolicIndex) -> DoubleCosetDatum:
    x, colors, n = u.perm, u.colors, u.n
    I_x = index_set(x, a, b)
    c, k = symm.lemma_constants(x, a.l, b.l)
    gamma_s = []
    for j in sorted(b.s_generators):
        if colors[j - 1] != colors[j]:
            continue
        i = symm.conjugate_simple(x, j)
        if i is not None and i in a.s_generators:
            gamma_s.append(i)
    gamma_s.sort()
    pi = symm.composition_from_generators(n, gamma_s, k)
    xi = symm.inverse(x)
    sharp_gens = sorted(symm.conjugate_simple(xi, i) for i in gamma_s)
    pi_sharp = symm.composition_from_generators(n, sharp_gens, k)
    psi = []
    for j in ParabolicIndex(k, pi).generators:
        psi.append((j, 0 if j == 0 else symm.conjugate_simple(xi, j)))
    return DoubleCosetDatum(a, b, u, I_x, c, k, tuple(gamma_s), pi, pi_sharp, tuple(psi))


@lru_cache(maxsize=None)
def double_coset_reps(a: ParabolicIndex, b: ParabolicIndex, r: int) -> tuple[DoubleCosetDatum, ...]:
    """
    ^(l,mu)W^(m,nu): for each x in ^(l,mu)S^(m,nu) the lexicographically minimal color
    vector in each ⊙-orbit on {x prod_{i in I(x)} t_i^{a_i}}.
    """
    if a.n != b.n:
        raise DimensionMismatchError("indices for different n")
    n = a.n
    out = []
    for x in symm.coset_reps(a.perm_composition, "double", b.perm_composition):
        I_x = index_set(x, a, b)
        swaps = tau_generators(x, a, b)
        done: set[tuple[int, ...]] = set()
        for vals in itertools.product(range(r), repeat=len(I_x)):
            colors = [0] * n
            for i, v in zip(I_x, vals):
                colors[i - 1] = v
            colors = tuple(colors)
            if colors in done:
                continue
            orbit = _orbit(colors, swaps)
            done.update(orbit)
            out.append(make_datum(WElem(x, min(orbit), r), a, b))
    out.sort(key=lambda d: (d.u.perm, d.u.colors))
    return tuple(out)


def datum_psi(d: DoubleCosetDatum, j: int) -> int:
    """ψ(j) with s_j = u s_ψ(j) u^-1, for s_j in X_(k(u), π(u))."""
    psi = d.psi_map
    if j not in psi:
        raise ValueError(f"s_{j} is not in X_{d.inter_index}")
    p = psi[j]
    n, r = d.u.n, d.u.r
    assert s(n, r, j) == d.u * s(n, r, p) * d.u.inverse()
    return p


def parabolic_intersection(a: ParabolicIndex, d: DoubleCosetDatum, b: ParabolicIndex) -> set[WElem]:
    """Brute force W_a ∩ u W_b u^-1."""
    u, ui = d.u, d.u.inverse()
    return {u * w * ui for w in parabolic_elements(b, u.r) if a.contains(u * w * ui)}


def find_datum(data: Iterable[DoubleCosetDatum], u: WElem) -> DoubleCosetDatum:
    for d in data:
        if d.u == u:
            return d
    raise LookupError(f"{u} is not a representative")


@lru_cache(maxsize=None)
def _datum_table(a: ParabolicIndex, b: ParabolicIndex, r: int) -> dict[WElem, DoubleCosetDatum]:
    return {d.u: d for d in double_coset_reps(a, b, r)}


def triple_decompose_w(w: WElem, a: ParabolicIndex, b: ParabolicIndex) -> tuple[WElem, DoubleCosetDatum, WElem]:
    """
    The unique w = w1 u w2 with u a representative, w1 in (W_a)^(k(u), π(u)), w2 in W_b.
    """
    n, r = w.n, w.r
    table = _datum_table(a, b, r)
    x1, x2, x3 = symm.triple_decompose(w.perm, a.perm_composition, b.perm_composition)
    m = b.l
    # w = x1 x2 x3 t^a: pull the colors on [m+1, n] through x3
    I_x2 = set(index_set(x2, a, b))
    v_colors = [0] * n
    for i in range(m + 1, n + 1):
        j = x3[i - 1]
        if j in I_x2:
            v_colors[j - 1] = w.colors[i - 1]
    v_colors = tuple(v_colors)
    orbit = _orbit(v_colors, tau_generators(x2, a, b))
    best = min(orbit)
    y = symm.compose(orbit[best], symm.inverse(orbit[v_colors]))
    u = WElem(x2, best, r)
    d = table.get(u)
    if d is None:
        raise LookupError(f"{u} is not a representative")
    w2p = from_perm(symm.compose(y, x3), r) * WElem(symm.identity(n), (*w.colors[:m], *(0,) * (n - m)), r)
    w1p = w * (u * w2p).inverse()
    assert a.contains(w1p) and b.contains(w2p), (w, w1p, u, w2p)
    w1, h = coset_decompose(w1p, d.inter_index)
    w2 = u.inverse() * h * u * w2p
    assert b.contains(w2) and w1 * u * w2 == w
    return w1, d, w2


def a_vector(u: WElem) -> tuple[int, ...]:
    """𝐚(u), compared lexicographically for the order ≽."""
    return u.colors


def lemma_ai_holds(d: DoubleCosetDatum) -> bool:
    """Items (i)-(v) on u t_j u^-1, u y u^-1 and the vanishing of colors, for every y in S_(m,nu)."""
    u, a, b = d.u, d.a, d.b
    n, r, x, col = u.n, u.r, u.perm, u.colors
    ui = u.inverse()
    for j in range(1, n + 1):
        if u * t(n, r, j) * ui != t(n, r, x[j - 1]):
            return False
    for yp in symm.young_elements(b.perm_composition):
        y = from_perm(yp, r)
        xyx = symm.compose(symm.compose(x, yp), symm.inverse(x))
        expect_colors = [0] * n
        for i in range(1, n + 1):
            expect_colors[x[i - 1] - 1] = (col[yp[i - 1] - 1] - col[i - 1]) % r
        if u * y * ui != WElem(xyx, tuple(expect_colors), r):
            return False
        for i in range(1, n + 1):
            if i <= b.l and (col[yp[i - 1] - 1] or col[i - 1]):
                return False
            if x[i - 1] <= a.l and col[i - 1]:
                return False
            if x[i - 1] <= a.l and symm.in_young(xyx, a.perm_composition) and col[yp[i - 1] - 1]:
                return False
    return True
