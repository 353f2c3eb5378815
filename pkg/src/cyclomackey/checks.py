"""
Verification routines shared by the command line and the acceptance suite.

Every routine returns a list of :class:`Check` records. A record names the statement
being tested (``anchor``), the instance, and the outcome. Outcomes are ``pass``,
``fail``, or ``cap`` when a search limit was reached first.
"""
from __future__ import annotations

import itertools
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import braid, hecke, modules, oracles, roots, symm, wgroup
from .wgroup import ParabolicIndex, WElem

Spec = tuple[Fraction, tuple[Fraction, ...]]


@dataclass
class Check:
    anchor: str
    claim: str
    instance: str
    status: str  # pass | fail | cap
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return asdict(self)


def _check(anchor, claim, instance, ok, detail="") -> Check:
    return Check(anchor, claim, instance, "pass" if ok else "fail", "" if ok else detail)


def _inst(n, r, *extra) -> str:
    return " ".join([f"n={n}", f"r={r}", *map(str, extra)])


def default_spec(r: int) -> Spec:
    return Fraction(2), tuple(Fraction(v) for v in hecke.default_Q(r))


def random_specs(r: int, count: int, seed: int) -> list[Spec]:
    """``count`` distinct specializations: the default one, then seeded random ones."""
    rng = random.Random(seed)
    out = [default_spec(r)]
    while len(out) < count:
        q = Fraction(rng.choice([-1, 1]) * rng.randint(2, 9), rng.randint(1, 4))
        Q = tuple(Fraction(v) for v in rng.sample(range(-20, 21), r))
        cand = (q, Q)
        if cand not in out:
            out.append(cand)
    return out


def parse_spec(text: str, r: int) -> Spec:
    vals = [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    if len(vals) != r + 1:
        raise ValueError(f"--spec needs q and {r} values of Q, got {len(vals)} numbers")
    if vals[0] == 0:
        raise ValueError("q must be non-zero")
    return vals[0], tuple(vals[1:])


def index_pairs(n: int, a: ParabolicIndex | None = None, b: ParabolicIndex | None = None):
    """All (a, b) pairs, or only those matching the fixed sides."""
    As = [a] if a is not None else wgroup.all_indices(n)
    Bs = [b] if b is not None else wgroup.all_indices(n)
    return [(x, y) for x in As for y in Bs]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CM_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map; fans out over CM_THREADS worker processes when > 1."""
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- the group ----------------------------------------------------------------

def group_checks(n: int, r: int) -> list[Check]:
    out = []
    inst = _inst(n, r)
    elems = wgroup.all_elements(n, r)
    gens = [wgroup.s(n, r, j) for j in range(n)]
    closed = wgroup.closure(gens, n, r)
    out.append(_check("group-order", "|W| = n! r^n and s_0..s_{n-1} generate W", inst,
                      len(set(elems)) == math.factorial(n) * r ** n and closed == set(elems),
                      f"|W|={len(elems)}, |<S>|={len(closed)}"))
    one = wgroup.identity(n, r)
    fails = []

    def power(w, k):
        return wgroup.product([w] * k, n, r)

    if power(gens[0], r) != one:
        fails.append("s0^r")
    for i in range(1, n):
        if power(gens[i], 2) != one:
            fails.append(f"s{i}^2")
    if n >= 2 and wgroup.from_word(n, r, [0, 1, 0, 1]) != wgroup.from_word(n, r, [1, 0, 1, 0]):
        fails.append("s0s1s0s1")
    for i in range(1, n - 1):
        if wgroup.from_word(n, r, [i, i + 1, i]) != wgroup.from_word(n, r, [i + 1, i, i + 1]):
            fails.append(f"s{i}s{i+1}s{i}")
    for i in range(n):
        for j in range(i + 2, n):
            if gens[i] * gens[j] != gens[j] * gens[i]:
                fails.append(f"s{i}s{j}")
    ts = [wgroup.t(n, r, i) for i in range(1, n + 1)]
    for i, j in itertools.product(range(n), repeat=2):
        if ts[i] * ts[j] != ts[j] * ts[i]:
            fails.append(f"t{i+1}t{j+1}")
    for x in symm.all_perms(n):
        xw = wgroup.from_perm(x, r)
        for i in range(1, n + 1):
            if xw * ts[i - 1] * xw.inverse() != ts[x[i - 1] - 1]:
                fails.append(f"x t{i} x^-1")
    out.append(_check("group-relations", "defining relations of W(n,r), t_i t_j = t_j t_i, x t_i x^-1 = t_x(i)",
                      inst, not fails, ", ".join(fails[:10])))
    # associativity and inverses on all pairs would be quadratic; sample deterministically
    rng = random.Random(n * 1000 + r)
    bad = 0
    for _ in range(200):
        a, b, c = (rng.choice(elems) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * a.inverse() != one:
            bad += 1
    out.append(_check("group-axioms", "associativity and inverses (200 sampled triples)", inst, bad == 0, f"{bad} failures"))
    return out


def coset_checks(n: int, r: int, indices: Iterable[ParabolicIndex] | None = None) -> list[Check]:
    out = []
    indices = list(indices) if indices is not None else wgroup.all_indices(n)
    for p in indices:
        inst = _inst(n, r, f"index={p}")
        expected = len(symm.coset_reps(p.perm_composition, "right")) * r ** (n - p.l)
        right = wgroup.one_sided_reps(p, r, "right")
        left = wgroup.one_sided_reps(p, r, "left")
        ok_r = oracles.is_transversal(right, oracles.left_cosets(p, r)) and len(right) == expected
        ok_l = oracles.is_transversal(left, oracles.right_cosets(p, r)) and len(left) == expected
        out.append(_check("coset-representatives", "W^(l,mu) is a transversal of W/W_(l,mu) of size |S^(l,mu)| r^(n-l)",
                          inst, ok_r, f"{len(right)} reps, expected {expected}"))
        out.append(_check("coset-representatives", "^(l,mu)W is a transversal of W_(l,mu)\\W of size |S^(l,mu)| r^(n-l)",
                          inst, ok_l, f"{len(left)} reps, expected {expected}"))
        closed = wgroup.closure([wgroup.s(n, r, j) for j in p.generators], n, r)
        elems = set(wgroup.parabolic_elements(p, r))
        out.append(_check("parabolic-subgroup", "W_(l,mu) = <X_(l,mu)> has |S_(l,mu)| r^l elements", inst,
                          closed == elems and len(elems) == len(symm.young_elements(p.perm_composition)) * r ** p.l))
    return out


def double_coset_checks(n: int, r: int, pairs) -> list[Check]:
    out = []
    N = math.factorial(n) * r ** n
    for a, b in pairs:
        inst = _inst(n, r, f"a={a}", f"b={b}")
        data = wgroup.double_coset_reps(a, b, r)
        reps = [d.u for d in data]
        classes = oracles.double_coset_partition(a, b, n, r)
        out.append(_check("double-coset-representatives",
                          "orbit minima form a transversal of the brute-force double cosets", inst,
                          oracles.is_transversal(reps, classes), f"{len(reps)} reps vs {len(classes)} classes"))
        # bijection (w1, u, w2) -> w1 u w2
        seen = {}
        bad = []
        Wb = set(wgroup.parabolic_elements(b, r))
        ranges = {d: set(wgroup.sub_coset_reps(a, d.inter_index, r)) for d in data}
        for w in wgroup.all_elements(n, r):
            w1, d, w2 = wgroup.triple_decompose_w(w, a, b)
            if w1 not in ranges[d] or w2 not in Wb or w1 * d.u * w2 != w:
                bad.append(str(w))
            seen[(w1, d.u, w2)] = w
        total = sum(len(ranges[d]) * len(Wb) for d in data)
        out.append(_check("double-coset-bijection",
                          "(w1, u, w2) -> w1 u w2 is a bijection onto W", inst,
                          not bad and len(seen) == N == total, f"bad={bad[:3]}, images={len(seen)}, count={total}"))
        # per-datum invariants
        bad = []
        for d in data:
            why = datum_problems(d)
            if why:
                bad.append(f"{d.u}: {why}")
        out.append(_check("double-coset-data", "I(x), k(u), Γ(u), π(u), π♯(u) invariants, orbit minimality, "
                          "conjugation formulas for u", inst, not bad, "; ".join(bad[:3])))
    return out


def datum_problems(d: wgroup.DoubleCosetDatum) -> str:
    u, a, b = d.u, d.a, d.b
    n, r = u.n, u.r
    if not (symm.is_distinguished_left(u.perm, a.perm_composition) and symm.is_distinguished_right(u.perm, b.perm_composition)):
        return "x not distinguished"
    if d.k != min(d.c, a.l, b.l) or any(u.colors[: d.k]):
        return "k(u) or a_1..a_k"
    if any(u.colors[i - 1] for i in range(1, n + 1) if i not in d.I_x):
        return "colors outside I(x)"
    gam = set(d.gamma_s)
    if not set(range(1, d.k)) <= gam or (1 <= d.k < n and d.k in gam):
        return "s_1..s_{k-1} in Γ(u), s_k not in Γ(u)"
    tau = symm.tau(u.perm, a.perm_composition, b.perm_composition)
    for z in symm.young_elements(tau):
        if wgroup.orbit_action(z, u, a, b).colors < u.colors:
            return "not minimal in its orbit"
    if not wgroup.lemma_ai_holds(d):
        return "conjugation formulas"
    return ""


def intersection_checks(n: int, r: int, pairs) -> list[Check]:
    out = []
    for a, b in pairs:
        inst = _inst(n, r, f"a={a}", f"b={b}")
        bad = []
        for d in wgroup.double_coset_reps(a, b, r):
            u, ui = d.u, d.u.inverse()
            brute = {w for w in wgroup.parabolic_elements(a, r) if b.contains(ui * w * u)}
            gen = oracles.subgroup_closure(d.gamma, n, r)
            para = set(wgroup.parabolic_elements(d.inter_index, r))
            sharp = set(wgroup.parabolic_elements(d.sharp_index, r))
            if not (brute == gen == para):
                bad.append(f"{u}: intersection")
            elif {ui * w * u for w in para} != sharp:
                bad.append(f"{u}: conjugate is not W_(k,π♯)")
            else:
                try:
                    images = [wgroup.datum_psi(d, j) for j, _ in d.psi]
                except AssertionError:
                    bad.append(f"{u}: ψ")
                    continue
                if sorted(images) != list(d.sharp_index.generators):
                    bad.append(f"{u}: ψ not a bijection onto X_(k,π♯)")
        out.append(_check("parabolic-intersection",
                          "W_a ∩ u W_b u^-1 = <Γ(u)> = W_(k(u),π(u)), u^-1 W_(k,π) u = W_(k,π♯), ψ bijective",
                          inst, not bad, "; ".join(bad[:3])))
    return out


# -- braids -------------------------------------------------------------------

def _braid_pair(task):
    n, r, a, b, cap = task
    fails, caps, worst, count = [], [], 0, 0
    for d in wgroup.double_coset_reps(a, b, r):
        for j, p, res in braid.check_datum(d, cap=cap):
            count += 1
            worst = max(worst, res.explored)
            if res.exhausted:
                caps.append(f"{d.u} j={j}")
            elif not res.equivalent:
                fails.append(f"{d.u} j={j}")
    return fails, caps, worst, count


def braid_checks(n: int, r: int, pairs, cap: int = braid.DEFAULT_NODE_CAP) -> list[Check]:
    out = []
    results = parallel_map(_braid_pair, [(n, r, a, b, cap) for a, b in pairs])
    for (a, b), (fails, caps, worst, count) in zip(pairs, results):
        inst = _inst(n, r, f"a={a}", f"b={b}")
        status = "fail" if fails else ("cap" if caps else "pass")
        detail = "; ".join((fails or caps)[:3])
        out.append(Check("braid-identity", f"ω σ_j ≡ σ_ψ(j) ω by braid relations ({count} identities)",
                         inst, status, detail))
    # the image map on γ_i and a Matsumoto-type sanity check on reduced words
    bad = []
    for i in range(1, n + 1):
        if braid.image(braid.gamma_word(i), n, r) != wgroup.t(n, r, i):
            bad.append(f"γ{i}")
    for x in symm.all_perms(n):
        w1 = tuple(symm.reduced_word(x))
        # a second reduced word: strip the rightmost descent first
        w2 = tuple(_rightmost_reduced_word(x))
        if not braid.braid_equiv(w1, w2, n=n, cap=cap).equivalent:
            bad.append(f"reduced words of {x}")
    out.append(_check("braid-words", "image of γ_i is t_i; distinct reduced words are braid equivalent",
                      _inst(n, r), not bad, ", ".join(bad)))
    return out


def _rightmost_reduced_word(x):
    y = list(x)
    word = []
    while True:
        for i in range(len(y) - 2, -1, -1):
            if y[i] > y[i + 1]:
                y[i], y[i + 1] = y[i + 1], y[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


# -- Hecke algebra --------------------------------------------------------------

def hecke_relation_checks(n: int, r: int, spec: Spec | None = None, triples: int = 200, seed: int = 0) -> list[Check]:
    alg = hecke.algebra(n, r, spec)
    where = "generic" if spec is None else f"spec={_fmt_spec(spec)}"
    inst = _inst(n, r, where)
    out = []
    for side in ("left", "right"):
        fails = hecke.operator_relation_failures(alg, side)
        out.append(_check("hecke-relations", f"defining relations hold as {side}-multiplication operators",
                          inst, not fails, ", ".join(fails)))
    fails = hecke.lemma_LT_failures(alg)
    out.append(_check("hecke-L-T-commutation", "L_i = q^(1-i) T_{i-1}..T_0..T_{i-1} and the T_i / L_j commutation rules",
                      inst, not fails, ", ".join(fails[:5])))
    rng = random.Random(seed)
    bad = 0
    for _ in range(triples):
        i, j, k = (rng.randrange(alg.dim) for _ in range(3))
        left = alg.mul_vec(alg.mul_basis(i, j), {k: alg.S.one})
        right = alg.mul_vec({i: alg.S.one}, alg.mul_basis(j, k))
        if left != right:
            bad += 1
    out.append(_check("hecke-associativity", f"(T_a T_b) T_c = T_a (T_b T_c) on {triples} random basis triples",
                      inst, bad == 0, f"{bad} failures"))
    return out


def hecke_bimodule_checks(n: int, r: int, pairs, rank_specs: Sequence[Spec] = (),
                          spec: Spec | None = None) -> list[Check]:
    alg = hecke.algebra(n, r, spec)
    where = "generic" if spec is None else f"spec={_fmt_spec(spec)}"
    out = []
    for a, b in pairs:
        inst = _inst(n, r, f"a={a}", f"b={b}", where)
        try:
            M = hecke.mackey(alg, a, b)
        except hecke.NotTriangularError as exc:
            out.append(Check("mackey-bimodule", "T~ basis is unitriangular", inst, "fail", str(exc)))
            continue
        bad = []
        for w in alg.elements:
            try:
                M.phi(alg.basis(w))
            except AssertionError:
                bad.append(str(w))
        out.append(_check("mackey-bimodule", "Ψ∘Φ = id on every basis element T_w (exact)",
                          inst, not bad, ", ".join(bad[:3])))
        bad = [str(d.u) for d in M.data if not hecke.bimodule_commutation_check(alg, d)]
        out.append(_check("Tu-commutation", "L_i T_u = T_u L_i (i <= k(u)) and T_z T_u = T_u T_{x^-1 z x}",
                          inst, not bad, ", ".join(bad[:3])))
        for spec in rank_specs:
            salg = hecke.algebra(n, r, spec)
            rk = hecke.mackey(salg, a, b).change_of_basis_rank()
            out.append(_check("tilde-basis-rank", "T~ change of basis has full rank n! r^n",
                              _inst(n, r, f"a={a}", f"b={b}", f"spec={_fmt_spec(spec)}"), rk == alg.dim,
                              f"rank {rk} of {alg.dim}"))
    return out


def _mackey_pair(task):
    n, r, a, b, spec = task
    alg = hecke.algebra(n, r, spec)
    results = []
    for M in modules.standard_test_modules(alg, b):
        res = modules.mackey_functor_check(M, a)
        results.append((M.label, res.ok, res.dim_lhs, res.dim_rhs, res.rank, res.equivariant, res.relations_ok))
    return results


def mackey_functor_checks(n: int, r: int, pairs, specs: Sequence[Spec]) -> list[Check]:
    tasks = [(n, r, a, b, spec) for spec in specs for a, b in pairs]
    out = []
    for (_, _, a, b, spec), results in zip(tasks, parallel_map(_mackey_pair, tasks)):
        for label, ok, dl, dr, rk, eq, rel in results:
            inst = _inst(n, r, f"a={a}", f"b={b}", f"M={label}", f"spec={_fmt_spec(spec)}")
            out.append(_check("mackey-functor", "Res_a Ind M ≅ ⊕_u Ind T_u Res M via T_{w1} ⊗ m -> T_{w1} T_u ⊗ m",
                              inst, ok, f"dims {dl}/{dr}, rank {rk}, equivariant={eq}, relations={rel}"))
    return out


def _fmt_spec(spec: Spec) -> str:
    q, Q = spec
    return ",".join(str(v) for v in (q, *Q))


# -- roots ----------------------------------------------------------------------

def roots_checks(n: int, r: int, indices: Iterable[ParabolicIndex] | None = None) -> list[Check]:
    out = []
    indices = list(indices) if indices is not None else wgroup.all_indices(n)
    full = roots.build_sets(n, r)
    out.append(_check("root-system", "|Φ| = r^2 n(n-1) + r n", _inst(n, r),
                      len(full.Phi) == r * r * n * (n - 1) + r * n))
    err = roots.phi_compatibility_error(n, r)
    out.append(_check("root-realization", "φ intertwines the dot action with the reflection representation (tol 1e-12)",
                      _inst(n, r), err <= 1e-12, f"max error {err:.3e}"))
    lengths = roots.word_lengths(n, r)
    for p in indices:
        inst = _inst(n, r, f"index={p}")
        sets = roots.build_sets(n, r, p)
        ones = roots.is_all_ones(p)
        # Ω = Ω~ iff mu = (1^{n-l}); for r = 1 the two always agree
        expect_eq = ones or r == 1
        out.append(_check("root-omega-tilde", "Ω_(l,mu) = Ω~_(l,mu) exactly when mu = (1^(n-l)) (r >= 2)",
                          inst, (sets.Omega == sets.Omega_tilde) == expect_eq))
        rs = roots.r_sets(p, r)
        out.append(_check("root-omega-delta", "w(Ω) ⊂ Φ0 ⇔ w(Δ) ⊂ Φ0, and the same for w^-1 * (−), for all w",
                          inst, not rs.omega_delta_mismatch, f"{len(rs.omega_delta_mismatch)} mismatches"))
        right = set(wgroup.one_sided_reps(p, r, "right"))
        left = set(wgroup.one_sided_reps(p, r, "left"))
        if ones:
            out.append(_check("root-corollary", "R_(l,mu) = W^(l,mu) and R*_(l,mu) = ^(l,mu)W for mu = (1^(n-l))",
                              inst, rs.R == right and rs.R_star == left,
                              f"|R|={len(rs.R)} |W^|={len(right)} |R*|={len(rs.R_star)}"))
        else:
            ce = roots.remark_counterexamples(p, r, rs)
            if r >= 2:
                ok = bool(ce["right"]) and bool(ce["left"])
                claim = "some element of W^(l,mu) lies outside R_(l,mu), and of ^(l,mu)W outside R*_(l,mu)"
            else:
                # every color is 0, so the counterexample construction is unavailable
                ok = rs.R == right and rs.R_star == left
                claim = "r = 1: R_(l,mu) = S^(l,mu) and R*_(l,mu) = ^(l,mu)S"
            out.append(_check("root-remark", claim, inst, ok,
                              f"{len(ce['right'])} right / {len(ce['left'])} left counterexamples"))
        # R = R0 forces R to be a transversal; lengths add on R0 x W_(l,mu)
        Wp = wgroup.parabolic_elements(p, r)
        if rs.R == rs.R0:
            ok = oracles.is_transversal(rs.R, oracles.left_cosets(p, r))
            out.append(_check("root-R-transversal", "if R = R0 then R is a transversal of W/W_(l,mu)", inst, ok))
        if rs.R_star == rs.R_star0:
            ok = oracles.is_transversal(rs.R_star, oracles.right_cosets(p, r))
            out.append(_check("root-R-transversal", "if R* = R*0 then R* is a transversal of W_(l,mu)\\W", inst, ok))
        bad = sum(1 for w in rs.R0 for v in Wp if lengths[w * v] != lengths[w] + lengths[v])
        bad += sum(1 for w in rs.R_star for v in Wp if lengths[v * w] != lengths[v] + lengths[w])
        out.append(_check("root-length-additivity", "ℓ(w w') = ℓ(w) + ℓ(w') on R0 x W_(l,mu), ℓ(w' w) = ℓ(w') + ℓ(w) on W_(l,mu) x R*",
                          inst, bad == 0, f"{bad} failures"))
        bad = 0
        for cls in oracles.left_cosets(p, r):
            m = min(lengths[w] for w in cls)
            bad += sum(1 for w in cls if lengths[w] == m and w not in rs.R)
        for cls in oracles.right_cosets(p, r):
            m = min(lengths[w] for w in cls)
            bad += sum(1 for w in cls if lengths[w] == m and w not in rs.R_star)
        out.append(_check("root-minimal-length", "minimal length coset elements lie in R (resp. R*)", inst, bad == 0,
                          f"{bad} failures"))
    return out
