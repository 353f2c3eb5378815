"""
Finite-dimensional modules of parabolic subalgebras H_(l,mu) at a rational specialization,
with restriction, induction and the twist by T_u, and the explicit check of

    Res_{H_a} Ind^{H}_{H_b} M  ≅  ⊕_u Ind^{H_a}_{H_(k,π)} T_u( Res_{H_(k,π♯)} M ).

A module stores, for each generator T_g of its algebra, the images of the basis vectors
(see :mod:`cyclomackey.linalg`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg, wgroup
from .hecke import HeckeAlgebra, ParabolicSplitting, relation_words
from .wgroup import DoubleCosetDatum, ParabolicIndex


class ModuleError(ValueError):
    pass


@dataclass
class HModule:
    alg: HeckeAlgebra
    index: ParabolicIndex
    dim: int
    gens: dict[int, list[dict]]
    label: str = ""
    _basis_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.alg.S.generic:
            raise ModuleError("modules live at a rational specialization")
        if set(self.gens) != set(self.index.generators):
            raise ModuleError(f"need exactly the generators {self.index.generators}")

    @property
    def spec(self):
        return (self.alg.S.q_val, self.alg.S.Q_vals)

    def act_gen(self, g: int, vec: Mapping) -> dict:
        return linalg.apply(self.gens[g], vec)

    def act_basis(self, idx: int, vec: Mapping) -> dict:
        """T_w v for a basis element w of the module's algebra."""
        mat = self._basis_cache.get(idx)
        if mat is None:
            c, letters = self.alg.word(idx)
            mat = linalg.scale(linalg.identity(self.dim), Fraction(c))
            for g in letters:
                if g not in self.gens:
                    raise ModuleError(f"T_{g} does not act on this module")
                mat = linalg.compose(mat, self.gens[g])
            self._basis_cache[idx] = mat
        return linalg.apply(mat, vec)

    def act_elem(self, vec_h: Mapping[int, object], vec: Mapping) -> dict:
        out: dict = {}
        for idx, c in vec_h.items():
            linalg.vadd(out, self.act_basis(idx, vec), c)
        return out

    def relation_failures(self) -> list[str]:
        S, r = self.alg.S, self.alg.r
        gens = set(self.gens)
        fails = []
        ident = linalg.identity(self.dim)
        for g in sorted(gens):
            A = self.gens[g]
            if g == 0:
                acc = [dict() for _ in range(self.dim)]
                powers = [ident]
                for _ in range(r):
                    powers.append(linalg.compose(A, powers[-1]))
                for j in range(r + 1):
                    acc = linalg.add(acc, powers[r - j], (-1) ** j * S.e[j])
                if not linalg.is_zero(acc):
                    fails.append("prod_k (T0-Qk) = 0")
            else:
                A2 = linalg.compose(A, A)
                rel = linalg.add(linalg.add(A2, A, -(S.q - 1)), ident, -S.q)
                if not linalg.is_zero(rel):
                    fails.append(f"(T{g}+1)(T{g}-q) = 0")
        for name, lhs, rhs in relation_words(self.alg.n):
            if set(lhs) <= gens:
                if self._word(lhs) != self._word(rhs):
                    fails.append(name)
        return fails

    def _word(self, word):
        mat = linalg.identity(self.dim)
        for g in word:
            mat = linalg.compose(mat, self.gens[g])
        return mat


# -- constructions ---------------------------------------------------------------------

def regular_module(alg: HeckeAlgebra, p: ParabolicIndex) -> HModule:
    """H_p acting on itself by left multiplication, in the basis {T_h : h ∈ W_p}."""
    if alg.S.generic:
        raise ModuleError("modules live at a rational specialization")
    subs = [alg.index[w] for w in wgroup.parabolic_elements(p, alg.r)]
    pos = {k: i for i, k in enumerate(subs)}
    gens = {}
    for g in p.generators:
        cols = []
        for k in subs:
            img = alg.left_gen(g, k)
            cols.append({pos[j]: Fraction(c) for j, c in img.items()})
        gens[g] = cols
    return HModule(alg, p, len(subs), gens, label="regular")


def one_dim_module(alg: HeckeAlgebra, p: ParabolicIndex, t_val, t0_val, label: str = "") -> HModule:
    gens = {g: [{0: Fraction(t0_val if g == 0 else t_val)}] for g in p.generators}
    return HModule(alg, p, 1, gens, label=label or f"T_i->{t_val},T_0->{t0_val}")


def standard_test_modules(alg: HeckeAlgebra, p: ParabolicIndex) -> list[HModule]:
    """The regular module and two one-dimensional modules (T_i -> q, T_0 -> Q1) and (T_i -> -1, T_0 -> Q2)."""
    S = alg.S
    Q2 = S.Q[1] if alg.r >= 2 else S.Q[0]
    return [
        regular_module(alg, p),
        one_dim_module(alg, p, S.q, S.Q[0], label="trivial(q,Q1)"),
        one_dim_module(alg, p, -1, Q2, label="sign(-1,Q2)"),
    ]


def restrict_module(M: HModule, sub: ParabolicIndex) -> HModule:
    if not sub.is_sub(M.index):
        raise ModuleError(f"{sub} is not a parabolic subgroup of {M.index}")
    return HModule(M.alg, sub, M.dim, {g: M.gens[g] for g in sub.generators}, label=M.label)


_SPLITTERS: dict = {}


def splitting(alg: HeckeAlgebra, inner: ParabolicIndex, outer: ParabolicIndex) -> ParabolicSplitting:
    key = (id(alg), inner, outer)
    if key not in _SPLITTERS:
        _SPLITTERS[key] = ParabolicSplitting(alg, inner, outer)
    return _SPLITTERS[key]


@dataclass
class InducedModule:
    module: HModule
    reps: list[int]  # algebra indices of the coset representatives
    base: HModule

    def position(self, rep_idx: int, k: int) -> int:
        return self._pos[rep_idx] * self.base.dim + k

    def __post_init__(self):
        self._pos = {v: i for i, v in enumerate(self.reps)}

    def embed(self, split: Mapping[tuple[int, int], object], vec: Mapping) -> dict:
        """Σ c T_v ⊗ T_h vec for a splitting {(v, h): c}."""
        out: dict = {}
        for (v, h), c in split.items():
            img = self.base.act_basis(h, vec)
            off = self._pos[v] * self.base.dim
            linalg.vadd(out, {off + k: x for k, x in img.items()}, c)
        return out


def induce(M: HModule, outer: ParabolicIndex | None = None) -> InducedModule:
    """H_outer ⊗_{H_M} M with basis T_v ⊗ e_k, v ∈ (W_outer)^{M.index}."""
    alg = M.alg
    outer = outer if outer is not None else ParabolicIndex.full(alg.n)
    sp = splitting(alg, M.index, outer)
    reps = sp.reps
    ind = InducedModule(None, reps, M)
    dim = len(reps) * M.dim
    gens = {}
    for g in outer.generators:
        gv = alg.gen_vec(g)
        cols = []
        for v in reps:
            split = sp.split(alg.mul_vec(gv, {v: alg.S.one}))
            for k in range(M.dim):
                cols.append(ind.embed(split, {k: Fraction(1)}))
        gens[g] = cols
    ind.module = HModule(alg, outer, dim, gens, label=f"Ind({M.label})")
    return ind


def induce_module(M: HModule, outer: ParabolicIndex | None = None) -> HModule:
    return induce(M, outer).module


def twist_by_Tu(M: HModule, d: DoubleCosetDatum) -> HModule:
    """
    The H_(k,π)-module T_u(M) for an H_(k,π♯)-module M: T_j acts as T_ψ(j) does on M.
    """
    if M.index != d.sharp_index:
        raise ModuleError(f"expected a module over {d.sharp_index}, got {M.index}")
    gens = {j: M.gens[p] for j, p in d.psi}
    return HModule(M.alg, d.inter_index, M.dim, gens, label=f"T_u({M.label})")


@dataclass
class MackeyFunctorResult:
    a: ParabolicIndex
    b: ParabolicIndex
    label: str
    dim_lhs: int
    dim_rhs: int
    rank: int
    equivariant: bool
    relations_ok: bool

    @property
    def bijective(self) -> bool:
        return self.dim_lhs == self.dim_rhs == self.rank

    @property
    def ok(self) -> bool:
        return self.bijective and self.equivariant and self.relations_ok


def mackey_functor_check(M: HModule, a: ParabolicIndex) -> MackeyFunctorResult:
    """
    Build Res_a Ind M and ⊕_u Ind T_u Res M, map the basis vector T_{w1} ⊗ e_k of the
    u-summand to T_{w1} T_u ⊗ e_k, and test bijectivity and equivariance under H_a.
    """
    alg, b = M.alg, M.index
    full = ParabolicIndex.full(alg.n)
    lhs_ind = induce(M, full)
    lhs = restrict_module(lhs_ind.module, a)
    outer_split = splitting(alg, b, full)
    blocks = []
    rel_ok = not lhs.relation_failures()
    for d in wgroup.double_coset_reps(a, b, alg.r):
        N = twist_by_Tu(restrict_module(M, d.sharp_index), d)
        rel_ok = rel_ok and not N.relation_failures()
        blocks.append((d, induce(N, a)))
    # block-diagonal action on the right-hand side, and the intertwiner
    F: list[dict] = []
    rhs_gens: dict[int, list[dict]] = {g: [] for g in a.generators}
    offset = 0
    for d, ind in blocks:
        u = alg.index[d.u]
        for w1 in ind.reps:
            split = outer_split.split(alg.mul_basis(w1, u))
            for k in range(M.dim):
                F.append(lhs_ind.embed(split, {k: Fraction(1)}))
        for g in a.generators:
            for col in ind.module.gens[g]:
                rhs_gens[g].append({offset + i: c for i, c in col.items()})
        offset += ind.module.dim
    equivariant = True
    for g in a.generators:
        left = linalg.compose(F, rhs_gens[g])
        right = linalg.compose(lhs.gens[g], F)
        if left != right:
            equivariant = False
            break
    return MackeyFunctorResult(a, b, M.label, lhs.dim, offset, linalg.rank(F), equivariant, rel_ok)
