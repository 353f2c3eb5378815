"""
Command line front end.

    cyclomackey double-cosets --n 2 --r 2 --a "1:[1]" --b "1:[1]"
    cyclomackey verify-mackey --n 2 --r 3 --format text
    cyclomackey all --n 3 --r 2 --out report.json

Exit status: 0 when every check passes, 1 when some check fails, 2 for invalid
arguments, 3 when a search cap was reached before a decision.
"""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import click

from . import braid, checks, roots, wgroup
from .checks import Check, Spec
from .wgroup import ParabolicIndex

SCHEMA = "cyclomackey.report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
# generic-ring computations are limited to algebras of this dimension
GENERIC_LIMIT = 48


@dataclass
class RunConfig:
    n: int
    r: int
    a: ParabolicIndex | None = None
    b: ParabolicIndex | None = None
    spec: Spec | None = None
    seed: int = 0
    cap: int = braid.DEFAULT_NODE_CAP
    fmt: str = "json"
    out: str | None = None

    @property
    def pairs(self):
        return checks.index_pairs(self.n, self.a, self.b)

    @property
    def indices(self):
        if self.a is not None or self.b is not None:
            return sorted({p for p in (self.a, self.b) if p is not None})
        return wgroup.all_indices(self.n)

    @property
    def generic_ok(self) -> bool:
        return math.factorial(self.n) * self.r ** self.n <= GENERIC_LIMIT

    def specs(self, count: int) -> list[Spec]:
        if self.spec is not None:
            return [self.spec]
        return checks.random_specs(self.r, count, self.seed)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "a": str(self.a) if self.a else None,
            "b": str(self.b) if self.b else None,
            "spec": None if self.spec is None else [str(v) for v in (self.spec[0], *self.spec[1])],
            "seed": self.seed,
            "cap": self.cap,
        }


@dataclass
class Report:
    command: str
    cfg: RunConfig
    checks: list[Check] = field(default_factory=list)
    data: dict | list | None = None

    def status(self) -> int:
        if any(c.status == "fail" for c in self.checks):
            return EXIT_FAIL
        if any(c.status == "cap" for c in self.checks):
            return EXIT_CAP
        return EXIT_OK

    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(c.status == "pass" for c in self.checks),
            "failed": sum(c.status == "fail" for c in self.checks),
            "capped": sum(c.status == "cap" for c in self.checks),
        }

    def to_json(self) -> dict:
        out = {"schema": SCHEMA, "command": self.command, "config": self.cfg.to_json(),
               "summary": self.summary(), "checks": [c.to_json() for c in self.checks]}
        if self.data is not None:
            out["data"] = self.data
        return out

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"
        lines = [f"# {self.command}  n={self.cfg.n} r={self.cfg.r}"]
        if self.data is not None:
            lines.append(json.dumps(self.data, ensure_ascii=False))
        for c in self.checks:
            tail = f"  -- {c.detail}" if c.detail else ""
            lines.append(f"{c.status.upper():4}  [{c.anchor}] {c.instance}: {c.claim}{tail}")
        s = self.summary()
        lines.append(f"# {s['passed']}/{s['total']} passed, {s['failed']} failed, {s['capped']} capped")
        return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------------

def run_cosets(cfg: RunConfig) -> Report:
    data = []
    for p in cfg.indices:
        data.append({
            "index": str(p),
            "right": [w.to_json() for w in wgroup.one_sided_reps(p, cfg.r, "right")],
            "left": [w.to_json() for w in wgroup.one_sided_reps(p, cfg.r, "left")],
        })
    return Report("cosets", cfg, checks.coset_checks(cfg.n, cfg.r, cfg.indices), data)


def run_double_cosets(cfg: RunConfig) -> Report:
    data = []
    for a, b in cfg.pairs:
        reps = wgroup.double_coset_reps(a, b, cfg.r)
        data.append({"a": str(a), "b": str(b), "representatives": [d.to_json() for d in reps]})
    cs = checks.double_coset_checks(cfg.n, cfg.r, cfg.pairs) + checks.intersection_checks(cfg.n, cfg.r, cfg.pairs)
    return Report("double-cosets", cfg, cs, data)


def run_verify_group(cfg: RunConfig) -> Report:
    cs = checks.group_checks(cfg.n, cfg.r)
    cs += checks.coset_checks(cfg.n, cfg.r, cfg.indices)
    cs += checks.double_coset_checks(cfg.n, cfg.r, cfg.pairs)
    cs += checks.intersection_checks(cfg.n, cfg.r, cfg.pairs)
    return Report("verify-group", cfg, cs)


def run_verify_hecke(cfg: RunConfig) -> Report:
    spec = None if cfg.generic_ok and cfg.spec is None else (cfg.spec or checks.default_spec(cfg.r))
    cs = checks.hecke_relation_checks(cfg.n, cfg.r, spec, seed=cfg.seed)
    return Report("verify-hecke", cfg, cs)


def run_verify_mackey(cfg: RunConfig) -> Report:
    spec = None if cfg.generic_ok and cfg.spec is None else (cfg.spec or checks.default_spec(cfg.r))
    rank_specs = [] if spec is not None else cfg.specs(3)
    cs = checks.hecke_bimodule_checks(cfg.n, cfg.r, cfg.pairs, rank_specs, spec=spec)
    cs += checks.mackey_functor_checks(cfg.n, cfg.r, cfg.pairs, cfg.specs(2))
    return Report("verify-mackey", cfg, cs)


def run_verify_braid(cfg: RunConfig) -> Report:
    return Report("verify-braid", cfg, checks.braid_checks(cfg.n, cfg.r, cfg.pairs, cap=cfg.cap))


def run_roots_compare(cfg: RunConfig) -> Report:
    data = []
    for p in cfg.indices:
        rs = roots.r_sets(p, cfg.r)
        ce = roots.remark_counterexamples(p, cfg.r, rs)
        data.append({
            "index": str(p),
            "mu_all_ones": roots.is_all_ones(p),
            "R_size": len(rs.R), "R0_size": len(rs.R0),
            "R_star_size": len(rs.R_star), "R_star0_size": len(rs.R_star0),
            "right_reps_outside_R": [w.to_json() for w in ce["right"]],
            "left_reps_outside_R_star": [w.to_json() for w in ce["left"]],
        })
    return Report("roots-compare", cfg, checks.roots_checks(cfg.n, cfg.r, cfg.indices), data)


def run_all(cfg: RunConfig) -> Report:
    parts = [run_verify_group, run_verify_braid, run_verify_hecke, run_verify_mackey, run_roots_compare]
    cs: list[Check] = []
    for fn in parts:
        cs += fn(cfg).checks
    return Report("all", cfg, cs)


COMMANDS: dict[str, Callable[[RunConfig], Report]] = {
    "cosets": run_cosets,
    "double-cosets": run_double_cosets,
    "verify-group": run_verify_group,
    "verify-hecke": run_verify_hecke,
    "verify-mackey": run_verify_mackey,
    "verify-braid": run_verify_braid,
    "roots-compare": run_roots_compare,
    "all": run_all,
}


def run_command(cmd: str, cfg: RunConfig) -> tuple[int, Report]:
    report = COMMANDS[cmd](cfg)
    return report.status(), report


# -- click wiring ----------------------------------------------------------------------

def _index(ctx, param, value):
    if value is None:
        return None
    try:
        return ParabolicIndex.parse(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc


def _common(fn):
    opts = [
        click.option("--n", "n", type=click.IntRange(min=1), default=2, show_default=True, help="rank n"),
        click.option("--r", "r", type=click.IntRange(min=1), default=2, show_default=True, help="order r of the colors"),
        click.option("--a", "a", callback=_index, help='left parabolic index, "l:[mu1,mu2,...]"'),
        click.option("--b", "b", callback=_index, help='right parabolic index, "l:[mu1,mu2,...]"'),
        click.option("--spec", "spec", help="specialization q,Q1,...,Qr (rationals)"),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option("--cap", type=click.IntRange(min=1), default=braid.DEFAULT_NODE_CAP, show_default=True,
                     help="node cap for braid-word searches"),
        click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True),
        click.option("--out", "out", type=click.Path(dir_okay=False, writable=True), help="write the report here"),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _make_config(n, r, a, b, spec, seed, cap, fmt, out) -> RunConfig:
    for name, p in (("--a", a), ("--b", b)):
        if p is not None and p.n != n:
            raise click.BadParameter(f"{p} has size {p.n}, expected n={n}", param_hint=name)
    parsed = None
    if spec is not None:
        try:
            parsed = checks.parse_spec(spec, r)
        except (ValueError, ZeroDivisionError) as exc:
            raise click.BadParameter(str(exc), param_hint="--spec") from exc
    return RunConfig(n, r, a, b, parsed, seed, cap, fmt, out)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Cosets, double cosets, Hecke algebra and Mackey checks for G(r,1,n)."""


def _register(name: str):
    @main.command(name=name, help=(COMMANDS[name].__doc__ or f"Run {name}."))
    @_common
    def _cmd(**kwargs):
        cfg = _make_config(**kwargs)
        code, report = run_command(name, cfg)
        text = report.render(cfg.fmt)
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            click.echo(text, nl=False)
        sys.exit(code)
    return _cmd


run_cosets.__doc__ = "List W^(l,mu) and ^(l,mu)W and check them against brute-force cosets."
run_double_cosets.__doc__ = "List double coset representatives with their data, checked by oracle."
run_verify_group.__doc__ = "Group order, relations, cosets, double cosets and intersections."
run_verify_hecke.__doc__ = "Hecke relations as operators, L/T commutation rules, associativity."
run_verify_mackey.__doc__ = "Bimodule decomposition (Phi, Psi, T~ rank) and the Mackey functor isomorphism."
run_verify_braid.__doc__ = "Braid identities for every representative and generator."
run_roots_compare.__doc__ = "Root-system sets R, R* compared with the coset representatives."
run_all.__doc__ = "Every verification above for one (n, r)."

for _name in COMMANDS:
    _register(_name)


if __name__ == "__main__":  # pragma: no cover
    main()
