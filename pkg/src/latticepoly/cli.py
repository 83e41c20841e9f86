"""Command-line front end.

Exit codes: 0 success, 1 property or theorem violation, 2 input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import classes, normal_forms
from .errors import BudgetError, LatticePolyError, NotDistributiveError, ParseError
from .formats import (
    format_coefficients,
    format_expression,
    format_measure,
    load_lattice,
    parse_function,
    read_header,
    resolve_lattice,
)
from .gallery import FIXTURES
from .properties import LEVEL_MODES, PROPERTIES, level_set, replay
from .table import DEFAULT_TABLE_BUDGET
from .theorems import DEFAULT_UNIVERSE_BUDGET, verify_theorem

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    lattice: str | None = None
    function: str | None = None
    level_set: str = "hull"
    table_budget: int = DEFAULT_TABLE_BUDGET
    enum_budget: int = DEFAULT_UNIVERSE_BUDGET
    samples: int = 0
    seed: int = 0
    output: str = "human"
    # command-specific switches
    form: str | None = None          # dnf | cnf | median
    property: str | None = None
    theorem: str | None = None       # main | sugeno
    arity: int | None = None

    def __post_init__(self):
        if self.table_budget <= 0 or self.enum_budget <= 0:
            raise ValueError("budgets must be positive")
        if self.samples < 0:
            raise ValueError("--samples must be nonnegative")

    @classmethod
    def from_args(cls, args):
        form = next((k for k in ("dnf", "cnf", "median") if getattr(args, k, False)), None)
        theorem = next((k for k in ("main", "sugeno") if getattr(args, k, False)), None)
        return cls(
            command=args.command,
            lattice=getattr(args, "lattice", None) or getattr(args, "lattice_file", None),
            function=getattr(args, "function_file", None),
            level_set=getattr(args, "level_set", "hull"),
            table_budget=args.table_budget,
            enum_budget=args.enum_budget,
            samples=getattr(args, "samples", 0),
            seed=getattr(args, "seed", 0),
            output=args.format,
            form=form,
            property=getattr(args, "property", None),
            theorem=theorem,
            arity=getattr(args, "arity", None),
        )


class Output:
    """Collects ``key=value`` pairs for machine mode, free text for human mode."""

    def __init__(self, mode, stream=None):
        self.mode = mode
        self.stream = stream or sys.stdout

    def kv(self, key, value, human=None):
        """Machine mode prints ``key=value``; human mode prints ``human`` (skipped when empty)."""
        if isinstance(value, bool):
            value = "true" if value else "false"
        if self.mode == "machine":
            print(f"{key}={value}", file=self.stream)
        elif human is None:
            print(f"{key}: {value}", file=self.stream)
        elif human:
            print(human, file=self.stream)

    def text(self, block):
        if self.mode == "human":
            print(block, end="" if block.endswith("\n") else "\n", file=self.stream)


def _yes(b):
    return "yes" if b else "no"


def _load_function(cfg):
    path = Path(cfg.function)
    text = path.read_text()
    _, _, _, lattice_name = read_header(text)
    L = resolve_lattice(cfg.lattice or lattice_name, base_dir=path.parent)
    return parse_function(text, L, budget=cfg.table_budget)


def _names(L, elements):
    return " ".join(L.names[e] for e in elements)


def cmd_validate(cfg, out):
    try:
        L = load_lattice(cfg.lattice)
    except NotDistributiveError as exc:
        out.kv("valid", False, f"invalid: {exc}")
        out.kv("error", "not-distributive", "")
        if exc.names is not None:
            out.kv("witness", ",".join(exc.names), f"  witness triple: {' '.join(exc.names)}")
        return EXIT_INPUT
    out.kv("valid", True, f"valid lattice {L.name}")
    out.kv("name", L.name)
    out.kv("size", L.size)
    out.kv("bottom", L.names[L.bottom])
    out.kv("top", L.names[L.top])
    out.kv("chain", L.is_chain())
    out.kv("distributive", True)
    return EXIT_OK


def cmd_classify(cfg, out):
    f = _load_function(cfg)
    L = f.lattice
    out.kv("function", f.name)
    out.kv("arity", f.arity)
    out.kv("lattice", L.name)
    poly = normal_forms.is_polynomial(f)
    out.kv("polynomial", poly.holds, f"polynomial: {_yes(poly.holds)}")
    if not poly.holds:
        out.kv("polynomial_witness", poly.witness.describe(L), f"  witness: {poly.witness.describe(L)}")
        out.kv("symmetric", classes.is_symmetric(f), f"symmetric: {_yes(classes.is_symmetric(f))}")
        return EXIT_OK
    sugeno = classes.is_sugeno(f)
    out.kv("sugeno", sugeno, f"sugeno integral: {_yes(sugeno)}")
    out.kv("term", classes.is_term_function(f), f"term function: {_yes(classes.is_term_function(f))}")
    out.kv("conservative", classes.is_conservative(f),
           f"conservative: {_yes(classes.is_conservative(f))}")
    out.kv("weakly_conservative", classes.is_weakly_conservative(f),
           f"weakly conservative: {_yes(classes.is_weakly_conservative(f))}")
    sym = classes.is_symmetric(f)
    if sym:
        sw = classes.symmetric_os_form(f)
        out.kv("symmetric", True, f"symmetric: yes (w = {_names(L, sw.w)}; v = {_names(L, sw.v)})")
        out.kv("symmetric_w", _names(L, sw.w).replace(" ", ","), "")
        out.kv("symmetric_v", _names(L, sw.v).replace(" ", ","), "")
        consts = classes.symmetric_median_form(f, sugeno=sugeno)
        out.kv("median_constants", ",".join(L.names[c] for c in consts),
               f"  median form constants: {_names(L, consts) or '(none)'}")
    else:
        out.kv("symmetric", False, "symmetric: no")
    for kind, extract, decide in (("inf", classes.extract_inf_weights, classes.is_weighted_infimum),
                                  ("sup", classes.extract_sup_weights, classes.is_weighted_supremum)):
        wv = extract(f)
        holds = decide(f)
        word = "infimum" if kind == "inf" else "supremum"
        label = "w" if kind == "inf" else "v"
        out.kv(f"weighted_{word}", holds,
               f"weighted {word}: {_yes(holds)} ({label}0={L.names[wv.w0]}, "
               f"{label}1..n={_names(L, wv.weights)})")
        out.kv(f"weighted_{word}_{label}0", L.names[wv.w0], "")
        out.kv(f"weighted_{word}_{label}", ",".join(L.names[w] for w in wv.weights), "")
    mu, (lo, hi) = classes.measure_from_polynomial(f)
    out.kv("clamp_low", L.names[lo], f"measure (clamped to [{L.names[lo]}, {L.names[hi]}]):")
    out.kv("clamp_high", L.names[hi], "")
    text = format_measure(mu, L, name=f"mu_{f.name}")
    if out.mode == "machine":
        for line in text.splitlines()[1:]:
            subset, _, value = line.partition(" -> ")
            out.kv(f"mu[{subset}]", value)
    else:
        out.text(text)
    return EXIT_OK


def cmd_normal_form(cfg, out):
    f = _load_function(cfg)
    L = f.lattice
    if cfg.form == "median":
        e = classes.median_normal_form(f)
        text = format_expression(e, L, f.arity, name=f.name)
        out.kv("median", text.splitlines()[1], text)
        return EXIT_OK
    if cfg.form == "cnf":
        coeffs, pruned, unique = normal_forms.beta(f), normal_forms.beta_star(f), normal_forms.unique_cnf(f)
        names = ("beta", "beta_star")
    else:
        coeffs, pruned, unique = normal_forms.alpha(f), normal_forms.alpha_star(f), normal_forms.unique_dnf(f)
        names = ("alpha", "alpha_star")
    for name, cm in zip(names, (coeffs, pruned)):
        text = format_coefficients(cm, L, name=f"{name}_{f.name}")
        if out.mode == "machine":
            for line in text.splitlines()[1:]:
                subset, _, value = line.partition(" -> ")
                out.kv(f"{name}[{subset}]", value)
        else:
            out.text(text)
    out.kv("unique", unique, f"unique representation: {_yes(unique)}")
    return EXIT_OK


def cmd_check(cfg, out):
    f = _load_function(cfg)
    prop = PROPERTIES[cfg.property]
    S = level_set(f, cfg.level_set) if prop.uses_levels else None
    report = prop(f, S)
    out.kv("property", prop.name)
    if prop.uses_levels:
        out.kv("level_set", cfg.level_set)
        out.kv("levels", ",".join(f.lattice.names[c] for c in sorted(S)))
    out.kv("holds", report.holds)
    if not report.holds:
        out.kv("witness", report.witness.describe(f.lattice))
        out.kv("witness_replays", replay(report, f, S))
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify_theorem(cfg, out):
    L = resolve_lattice(cfg.lattice)
    if cfg.samples:
        result = verify_theorem(L, cfg.arity, cfg.theorem, exhaustive=False,
                                samples=cfg.samples, seed=cfg.seed, budget=cfg.enum_budget)
    else:
        result = verify_theorem(L, cfg.arity, cfg.theorem, exhaustive=True,
                                budget=cfg.enum_budget)
    for line in result.lines():
        key, _, value = line.partition("=")
        out.kv(key, value)
    for f, profile in result.disagreements[:10]:
        vec = "".join("1" if c else "0" for c in profile.conditions)
        out.kv("disagreement", f"{f.name}:{vec}")
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_gallery(cfg, out):
    failures = 0
    for fx in FIXTURES:
        mismatches = fx.replay()
        status = "ok" if not mismatches else "FAIL"
        out.kv(f"fixture[{fx.name}]", status, f"{status:4} {fx.name}: {fx.source}")
        for check, want, got in mismatches:
            failures += 1
            out.kv(f"mismatch[{fx.name}]", f"{check}:expected={want}:observed={got}",
                   f"     {check}: expected {want}, observed {got}")
    out.kv("fixtures", len(FIXTURES))
    out.kv("mismatches", failures)
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def build_parser():
    p = argparse.ArgumentParser(prog="latticepoly",
                                description="Polynomial functions on finite distributive lattices.")
    p.add_argument("--format", choices=("human", "machine"), default="human",
                   help="machine prints stable key=value lines")
    p.add_argument("--table-budget", type=int, default=DEFAULT_TABLE_BUDGET,
                   help="maximum entries in one function table")
    p.add_argument("--enum-budget", type=int, default=DEFAULT_UNIVERSE_BUDGET,
                   help="maximum number of tables in an exhaustive universe")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a lattice file")
    v.add_argument("lattice_file")
    v.set_defaults(run=cmd_validate)

    c = sub.add_parser("classify", help="classify a function or expression file")
    c.add_argument("function_file")
    c.add_argument("--lattice", help="lattice file or shorthand (default: from the header)")
    c.set_defaults(run=cmd_classify)

    nf = sub.add_parser("normal-form", help="emit DNF/CNF coefficients or a nested median form")
    group = nf.add_mutually_exclusive_group(required=True)
    group.add_argument("--dnf", action="store_true")
    group.add_argument("--cnf", action="store_true")
    group.add_argument("--median", action="store_true")
    nf.add_argument("function_file")
    nf.add_argument("--lattice")
    nf.set_defaults(run=cmd_normal_form)

    ch = sub.add_parser("check", help="check one property")
    ch.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    ch.add_argument("--level-set", choices=LEVEL_MODES, default="hull")
    ch.add_argument("function_file")
    ch.add_argument("--lattice")
    ch.set_defaults(run=cmd_check)

    vt = sub.add_parser("verify-theorem", help="check a characterisation over many tables")
    which = vt.add_mutually_exclusive_group(required=True)
    which.add_argument("--main", action="store_true")
    which.add_argument("--sugeno", action="store_true")
    vt.add_argument("--lattice", required=True)
    vt.add_argument("--arity", type=int, required=True)
    mode = vt.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int, default=0)
    vt.add_argument("--seed", type=int, default=0)
    vt.set_defaults(run=cmd_verify_theorem)

    g = sub.add_parser("gallery", help="replay the built-in counterexamples")
    g.set_defaults(run=cmd_gallery)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = Output(cfg.output)
    if cfg.output == "machine" and cfg.command != "verify-theorem":
        # verify-theorem reports its own seed line
        out.kv("command", cfg.command)
        out.kv("seed", "none")
    try:
        return args.run(cfg, out)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        if cfg.command == "verify-theorem":
            print("hint: use --samples N --seed S for large universes", file=sys.stderr)
        return EXIT_BUDGET
    except (LatticePolyError, OSError) as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "input error"
        print(f"{kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
