"""Command-line front end.

    sl2hilb info 1 3 2
    sl2hilb lambda-table 1 3 2 --n 0..2 --d 0
    sl2hilb verify 1 3 2 I --s 0,1,3/7 --n -4..4 --D 12 --jobs 4
    sl2hilb tangent 1 3 2 --D 10
    sl2hilb borel 1 3 2
    sl2hilb translate 1 3 2 J --t 2
    sl2hilb orbit-vanish 1 2 3

Exit codes: 0 success, 2 invalid input, 3 inconclusive (bound too small),
4 falsified / check failed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import lambda_grading as lg
from .grading import render_monomial, render_polynomial, weight_of
from .group_action import b_stability, translate_check
from .ideals import ideal_generators, verify_hilbert_window, verify_orbit_vanishing
from .params import ParamsError, make_params
from .report import FORMATS, Table, hilbert_table, rational, render
from .semigroup import embedding_vector, invariant_generators, minimal_generators, sufficient_bound
from .tangent import render_constraint, tangent_report

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_FALSIFIED = 0, 2, 3, 4


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    p: int
    q: int
    m: int
    command: str
    n_range: tuple | None = None
    D: int | None = None
    s_values: tuple = ()
    fmt: str = "tsv"
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def echo(self) -> dict:
        out = {"command": self.command, "p": self.p, "q": self.q, "m": self.m, "format": self.fmt}
        if self.n_range is not None:
            out["n"] = f"{self.n_range[0]}..{self.n_range[1]}"
        if self.D is not None:
            out["D"] = self.D
        if self.s_values:
            out["s"] = [rational(s) for s in self.s_values]
        out.update(self.extra)
        return out


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r} (use forms like 0, 1, 3/7)") from None


def parse_rational_list(text: str) -> tuple:
    return tuple(parse_rational(t) for t in text.split(",") if t.strip())


def parse_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like A..B, got {text!r}") from None
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return (lo_i, hi_i)


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


# ---------------------------------------------------------------------------


def _default_bound(params) -> int:
    need = sufficient_bound(params)
    # no completeness bound is known off the toric locus; search generously and say so
    return need if need is not None else params.m * params.q * params.diff


def cmd_info(cfg: RunConfig, params) -> tuple:
    t = Table("invariants", ["key", "value"])
    t.add("l", params.height)
    t.add("k", params.k)
    t.add("a", params.a)
    t.add("b", params.b)
    t.add("toric", params.toric)
    t.add("open_orbit", f"SL(2)/C_{params.m}")
    if params.smooth:
        t.add("notice", "smooth case l = 1: semigroup, grading, ideal and tangent commands are disabled")
        return [t], EXIT_OK
    t.add("two_dim_orbit", f"SL(2)/U_{params.a * (params.q + params.p)}")
    bound = cfg.extra.get("bound") or _default_bound(params)
    gens = minimal_generators(params, bound)
    t.add("generators", [f"({g.i},{g.j})" for g in gens])
    t.add("generator_bound", bound)
    t.add("generators_complete", gens.complete)
    t.add("embedding_vector", [e.monomial for e in embedding_vector(params, bound)])
    t.add("highest_weights", [e.highest_weight for e in embedding_vector(params, bound)])
    if params.toric:
        t.add("invariants_X1_X4", [render_monomial(u) for u in invariant_generators(params, 1, 4)])
    else:
        t.add("notice", f"non-toric: q - p = {params.diff} does not divide m = {params.m}; J-dependent commands disabled")
    for w in gens.warnings:
        t.add("warning", w)
    return [t], EXIT_OK


def cmd_semigroup(cfg: RunConfig, params) -> tuple:
    params.require_singular()
    bound = cfg.extra.get("bound") or _default_bound(params)
    gens = minimal_generators(params, bound)
    t = Table("minimal generators", ["i", "j", "monomial", "highest_weight"],
              meta={"i_bound": bound, "complete": gens.complete, "warnings": list(gens.warnings)})
    for e in embedding_vector(params, bound):
        t.add(e.i, e.j, e.monomial, e.highest_weight)
    return [t], EXIT_OK


def cmd_lambda_table(cfg: RunConfig, params) -> tuple:
    params.require_singular()
    d = cfg.extra["d"] % params.m
    j = cfg.extra["j"]
    lo, hi = cfg.n_range
    t = Table(f"lambda table d={d}", ["n", "c", "omega", "f_lambda", "minimal"],
              meta={"c_values_per_n": cfg.extra["classes"], "second_variable": f"X{j}"})
    mins = {}
    for lam, f in lg.lambda_table(params, range(lo, hi + 1), d, cfg.extra["classes"], j):
        if lam.n not in mins:
            mins[lam.n] = lg.lambda_min(params, lam.n, d, j)
        t.add(lam.n, lam.c, lam.omega, render_monomial(f), lam == mins[lam.n])
    return [t], EXIT_OK


def cmd_verify(cfg: RunConfig, params) -> tuple:
    variant = cfg.extra["variant"]
    if variant == "J":
        params.require_toric()
    params.require_singular()
    tables, verdicts = [], []
    for s in cfg.s_values:
        rep = verify_hilbert_window(params, variant, s, cfg.n_range, cfg.D, jobs=cfg.jobs)
        tables.append(hilbert_table(rep))
        verdicts.append(rep.verdict)
    if "FALSIFIED" in verdicts:
        return tables, EXIT_FALSIFIED
    if "inconclusive" in verdicts:
        return tables, EXIT_INCONCLUSIVE
    return tables, EXIT_OK


def cmd_tangent(cfg: RunConfig, params) -> tuple:
    params.require_toric()
    rep = tangent_report(params, cfg.D)
    sys_ = rep.system
    t = Table("tangent space at J_0", ["generator", "target", "weight"],
              meta={
                  "dimension": rep.dimension,
                  "stable_at_D_plus_1": rep.stable,
                  "constraints": [render_constraint(r) for r in sys_.constraints],
                  "solution_basis": ["(" + ",".join(rational(x) for x in v) + ")" for v in sys_.solution_basis],
              })
    for g, tgt in zip(sys_.generators, sys_.targets):
        w = weight_of(params, g.leading_monomial())
        t.add(render_polynomial(g), render_monomial(tgt), f"({w.n},{w.d})")
    return [t], EXIT_OK if rep.stable else EXIT_INCONCLUSIVE


def cmd_borel(cfg: RunConfig, params) -> tuple:
    params.require_toric()
    t = Table("Borel stability", ["ideal", "stable", "torus_homogeneous", "first_failure"], meta={"D": cfg.D})
    stable = []
    for variant in ("J", "I"):
        for s in cfg.s_values:
            ideal = ideal_generators(params, variant, s)
            res = b_stability(params, ideal, cfg.D)
            name = f"{variant}_{rational(s)}"
            if res.stable:
                stable.append(name)
            fail = "-" if not res.failures else "{}@{} on g{}".format(res.failures[0][0], rational(res.failures[0][1]), res.failures[0][2])
            t.add(name, res.stable, res.torus_homogeneous, fail)
    t.meta["stable_ideals"] = stable
    expected = ["J_0"] if Fraction(0) in cfg.s_values else []
    return [t], EXIT_OK if stable == expected else EXIT_FALSIFIED


def cmd_translate(cfg: RunConfig, params) -> tuple:
    variant = cfg.extra["variant"]
    params.require_singular()
    if variant == "J":
        params.require_toric()
    t = Table(f"translate of {variant}_1 by diag(t, 1/t)", ["t", "s", "predicted_s", "pass"])
    ok = True
    for tv in cfg.extra["t"]:
        if tv == 0:
            raise UsageError("t must be nonzero")
        res = translate_check(params, variant, tv)
        t.add(res.t, res.s, res.predicted_s, res.passed)
        ok &= res.passed
    return [t], EXIT_OK if ok else EXIT_FALSIFIED


def cmd_orbit_vanish(cfg: RunConfig, params) -> tuple:
    params.require_singular()
    gens = ideal_generators(params, "I", 1).generators
    t = Table("I_1 on the G0 x G_m orbit of (1,1,0,0,1)", ["generator", "vanishes"])
    ok = True
    for g in gens:
        v = verify_orbit_vanishing(params, [g])
        ok &= v
        t.add(render_polynomial(g), v)
    return [t], EXIT_OK if ok else EXIT_FALSIFIED


COMMANDS = {
    "info": cmd_info,
    "semigroup": cmd_semigroup,
    "lambda-table": cmd_lambda_table,
    "verify": cmd_verify,
    "tangent": cmd_tangent,
    "borel": cmd_borel,
    "translate": cmd_translate,
    "orbit-vanish": cmd_orbit_vanish,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2hilb", description="Exact checks for the SL(2)-threefolds E_{p/q,m}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.add_argument("m", type=int)
        sp.add_argument("--format", choices=FORMATS, default="tsv")
        return sp

    sp = add("info", "invariants, orbits, semigroup generators")
    sp.add_argument("--bound", type=positive_int, help="generator search bound on i")

    sp = add("semigroup", "minimal generators of the semigroup and the embedding vector")
    sp.add_argument("--bound", type=positive_int)

    sp = add("lambda-table", "rows (n, c, omega, f_lambda) of the Lambda-grading")
    sp.add_argument("--n", type=parse_range, default=(0, 2))
    sp.add_argument("--d", type=int, default=0)
    sp.add_argument("--classes", type=positive_int, default=2, help="how many c values per n, from c_min upward")
    sp.add_argument("--j", type=int, choices=(3, 4), default=3)

    sp = add("verify", "Hilbert function h = 1 on a weight window")
    sp.add_argument("variant", choices=("I", "J"))
    sp.add_argument("--s", type=parse_rational_list, default=(Fraction(0), Fraction(1)))
    sp.add_argument("--n", type=parse_range, default=(-4, 4))
    sp.add_argument("--D", type=positive_int, default=None, help="degree bound (default 2(max|n| + q + m))")
    sp.add_argument("--jobs", type=positive_int, default=1)

    sp = add("tangent", "dimension of equivariant Hom(J_0, A/J_0)")
    sp.add_argument("--D", type=positive_int, default=10)

    sp = add("borel", "stability of I_s, J_s under the upper triangular subgroup")
    sp.add_argument("--D", type=positive_int, default=8)
    sp.add_argument("--s", type=parse_rational_list, default=(Fraction(0), Fraction(1)))

    sp = add("translate", "diag(t, 1/t) moves I_1 / J_1 to I_s / J_s")
    sp.add_argument("variant", choices=("I", "J"))
    sp.add_argument("--t", type=parse_rational_list, default=(Fraction(2),))

    add("orbit-vanish", "I_1 vanishes on the orbit of (1,1,0,0,1)")
    return parser


def make_config(args) -> RunConfig:
    cfg = RunConfig(args.p, args.q, args.m, args.command, fmt=args.format)
    cfg.n_range = getattr(args, "n", None)
    cfg.D = getattr(args, "D", None)
    cfg.s_values = tuple(getattr(args, "s", ()) or ())
    cfg.jobs = getattr(args, "jobs", 1)
    for key in ("variant", "d", "j", "classes", "bound"):
        if getattr(args, key, None) is not None:
            cfg.extra[key] = getattr(args, key)
    if getattr(args, "t", None) is not None:
        cfg.extra["t"] = list(args.t)
    return cfg


def _glue_negative_values(argv: list) -> list:
    """Turn "--n -4..4" into "--n=-4..4" so argparse does not read -4..4 as a flag."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--n", "--d", "--t") and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    cfg = make_config(args)
    if cfg.command == "verify" and not cfg.s_values:
        print("error: --s needs at least one value", file=sys.stderr)
        return EXIT_INVALID
    try:
        params = make_params(cfg.p, cfg.q, cfg.m)
        tables, code = COMMANDS[cfg.command](cfg, params)
    except (ParamsError, UsageError, lg.EmptyWeightSpace) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(render(tables, cfg.echo(), cfg.fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
