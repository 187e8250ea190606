"""Command-line front end.

    polarix validate FAMILY.json
    polarix enumerate --m 3 --n 2 [--iso]
    polarix dual FAMILY.json [--format json|m2]
    polarix certify FAMILY.json|IDEAL.json
    polarix render FAMILY.json [--out fig.svg]

Exit codes: 0 verdict true, 1 verdict false, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from typing import Iterator

from . import io
from .alexander import alexander_dual_from_family, alexander_dual_oracle, binary_words
from .degree_two import J_of_tree, MAX_TREE_M, enumerate_trees, tree_dot
from .errors import BudgetExceeded, FamilyError
from .isotone import (
    IsotoneFamily,
    canonical_form,
    enumerate_families,
    enumerate_isotone_maps,
    is_valid_polarization,
    polarization_witness,
    random_family,
)
from .monomials import MonomialIdeal
from .polarization import family_from_ideal, generators_from_family, is_polarization, is_polarization_oracle
from .simplicial import (
    ball_or_sphere_verdict,
    complex_from_ideal,
    linear_quotients_check,
    lq_order_m3,
    shelling_from_dual_order,
)

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "POLARIX_BUDGET_OVERRIDE"

DEFAULT_BUDGETS = {
    "group": 10**6,  # orbit-search steps for canonical forms
    "subsets": 200_000,  # partial transversals / faces
    "facets": 12,  # facets for the shelling search
    "hilbert": 20,  # generators for inclusion-exclusion
    "families": 200_000,  # candidate families in an exhaustive enumeration
}


@dataclass
class RunConfig:
    command: str
    m: int | None = None
    n: int | None = None
    input: str | None = None
    out: str | None = None
    fmt: str = "json"
    iso: bool = False
    sample: int = 0
    seed: int = 0
    budgets: dict = field(default_factory=lambda: dict(DEFAULT_BUDGETS))


class InputError(Exception):
    pass


class NotAPolarization(Exception):
    """Well-formed input whose verdict is false."""


def _require_valid(f: IsotoneFamily) -> None:
    witness = polarization_witness(f)
    if witness is not None:
        raise NotAPolarization(f"LS-edges do not span the down-graph at {list(witness)}")


def _budgets(args) -> dict:
    budgets = dict(DEFAULT_BUDGETS)
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            override = int(raw)
        except ValueError:
            raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if override <= 0:
            raise InputError(f"{BUDGET_ENV} must be positive")
        budgets = {k: override for k in budgets}
    for k in budgets:
        v = getattr(args, f"budget_{k}", None)
        if v is not None:
            if v <= 0:
                raise InputError(f"--budget-{k} must be positive")
            budgets[k] = v
    return budgets


def config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        m=getattr(args, "m", None),
        n=getattr(args, "n", None),
        input=getattr(args, "input", None),
        out=args.out,
        fmt=args.format or "json",
        iso=getattr(args, "iso", False),
        sample=getattr(args, "sample", 0) or 0,
        seed=args.seed,
        budgets=_budgets(args),
    )


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise io.FormatError(exc.msg, f"{path} line {exc.lineno} column {exc.colno}") from None


def load_family(path: str) -> IsotoneFamily:
    return io.family_from_json(_read(path))


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_format(cfg: RunConfig, allowed: tuple) -> None:
    if cfg.fmt not in allowed:
        raise InputError(f"{cfg.command} supports --format {'/'.join(allowed)}, not {cfg.fmt}")


# --- commands ---------------------------------------------------------------------


def cmd_validate(cfg: RunConfig) -> int:
    _require_format(cfg, ("json",))
    f = load_family(cfg.input)
    witness = polarization_witness(f)
    thm = witness is None
    oracle = is_polarization_oracle(generators_from_family(f), f.m, f.n, cfg.budgets["hilbert"])
    report = {"thm": thm, "oracle": oracle, "agree": thm == oracle}
    if witness is not None:
        report["witness"] = list(witness)
    if thm != oracle:
        report["bug"] = True
    _emit(cfg, json.dumps(report) + "\n")
    return EXIT_TRUE if thm else EXIT_FALSE


def _tree_families(m: int, group_budget: int) -> Iterator[IsotoneFamily]:
    """One canonical family per unlabelled tree on m + 1 vertices."""
    if m > MAX_TREE_M:
        raise BudgetExceeded(f"tree enumeration limited to m <= {MAX_TREE_M}")
    forms = {canonical_form(family_from_ideal(J_of_tree(t), m, 2), group_budget).key() for t in enumerate_trees(m, True)}
    for key in sorted(forms):
        yield IsotoneFamily.from_maps(m, 2, key)


def iter_enumeration(cfg: RunConfig) -> Iterator[IsotoneFamily]:
    """Valid families at (m, n): exhaustive when the search fits the family budget.

    Past that budget, iso mode at n = 2 goes through the tree classification.
    """
    m, n = cfg.m, cfg.n
    if m is None or n is None or m < 1 or n < 1:
        raise InputError("enumerate needs --m >= 1 and --n >= 1")
    if cfg.sample:
        yield from _sampled(cfg)
        return
    size = 1
    for i in range(1, m + 1):
        size *= sum(1 for _ in enumerate_isotone_maps(m, n, i))
        if size > cfg.budgets["families"]:
            break
    if size <= cfg.budgets["families"]:
        families = enumerate_families(m, n, valid_only=True)
        if not cfg.iso:
            yield from families
            return
        forms = {canonical_form(f, cfg.budgets["group"]).key() for f in families}
        for key in sorted(forms):
            yield IsotoneFamily.from_maps(m, n, key)
        return
    if n == 2 and cfg.iso:
        yield from _tree_families(m, cfg.budgets["group"])
        return
    raise BudgetExceeded(
        f"exhaustive search at (m, n) = ({m}, {n}) exceeds {cfg.budgets['families']} families; use --sample"
    )


def _sampled(cfg: RunConfig) -> Iterator[IsotoneFamily]:
    """Random valid families by rejection; at most 1000 draws per emitted family."""
    rng = random.Random(cfg.seed)
    maps = [list(enumerate_isotone_maps(cfg.m, cfg.n, i)) for i in range(1, cfg.m + 1)]
    emitted = 0
    for _ in range(1000 * cfg.sample):
        f = random_family(cfg.m, cfg.n, rng, maps)
        if is_valid_polarization(f):
            yield canonical_form(f, cfg.budgets["group"]) if cfg.iso else f
            emitted += 1
            if emitted == cfg.sample:
                return
    raise BudgetExceeded(f"found {emitted} of {cfg.sample} valid families in {1000 * cfg.sample} draws")


def cmd_enumerate(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "m2", "dot"))
    if cfg.fmt == "dot":
        if cfg.n != 2:
            raise InputError("--format dot lists trees and needs --n 2")
        trees = enumerate_trees(cfg.m, up_to_iso=cfg.iso)
        _emit(cfg, "".join(tree_dot(t) for t in trees))
        return EXIT_TRUE
    out = open(cfg.out, "w", encoding="utf-8") if cfg.out else sys.stdout
    try:
        for f in iter_enumeration(cfg):
            if cfg.fmt == "m2":
                out.write(io.ideal_to_m2(generators_from_family(f)) + "\n")
            else:
                out.write(json.dumps(io.family_to_json(f)) + "\n")
            out.flush()
    finally:
        if cfg.out:
            out.close()
    return EXIT_TRUE


def cmd_dual(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "m2"))
    f = load_family(cfg.input)
    _require_valid(f)
    dual = alexander_dual_from_family(f)
    if dual != alexander_dual_oracle(generators_from_family(f), cfg.budgets["subsets"]):
        raise RuntimeError("up-graph dual disagrees with the transversal dual")
    if cfg.fmt == "m2":
        _emit(cfg, io.ideal_to_m2(dual, name="D"))
        return EXIT_TRUE
    doc = io.ideal_to_json(dual)
    if f.n == 2:
        doc["binary_words"] = binary_words(dual, {i: (1, 2) for i in range(1, f.m + 1)})
    _emit(cfg, json.dumps(doc) + "\n")
    return EXIT_TRUE


def certify_ideal(ideal: MonomialIdeal, lq_order=None, facet_budget: int = 12) -> dict:
    """Ball/sphere verdict for the Stanley-Reisner complex of a squarefree ideal."""
    c = complex_from_ideal(ideal)
    report: dict = {"facets": len(c.facets)}
    hint = None
    if lq_order is not None:
        report["linear_quotients"] = linear_quotients_check(lq_order)
        if report["linear_quotients"]:
            hint = shelling_from_dual_order(lq_order, c.vertices)
    verdict = ball_or_sphere_verdict(c, shelling_hint=hint, budget=facet_budget)
    report["verdict"] = verdict.kind
    report["evidence"] = {k: v for k, v in verdict.evidence.items() if k != "order"}
    if "order" in verdict.evidence:
        report["shelling"] = verdict.evidence["order"]
    return report


def cmd_certify(cfg: RunConfig) -> int:
    _require_format(cfg, ("json",))
    data = _read(cfg.input)
    if isinstance(data, dict) and "generators" in data:
        ideal = io.ideal_from_json(data)
        if not is_polarization(ideal, cfg.budgets["hilbert"]):
            raise NotAPolarization("ideal is not squarefree or not a polarization of its collapse")
        order = None
    else:
        f = io.family_from_json(data)
        _require_valid(f)
        ideal = generators_from_family(f)
        order = lq_order_m3(f) if f.m == 3 else None
    report = certify_ideal(ideal, order, cfg.budgets["facets"])
    if report.get("shelling") is not None:
        report["shelling"] = [[list(v) for v in facet] for facet in report["shelling"]]
    _emit(cfg, json.dumps(report) + "\n")
    return EXIT_TRUE if report["verdict"] in ("ball", "sphere") else EXIT_FALSE


def cmd_render(cfg: RunConfig) -> int:
    _require_format(cfg, ("json", "svg"))
    f = load_family(cfg.input)
    if f.m != 3:
        raise InputError("render supports m = 3 only")
    _emit(cfg, io.render_svg(f))
    return EXIT_TRUE


COMMANDS = {
    "validate": cmd_validate,
    "enumerate": cmd_enumerate,
    "dual": cmd_dual,
    "certify": cmd_certify,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polarix", description="Polarizations of powers of the maximal ideal.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "m2", "svg", "dot"), default=None)
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    for k in DEFAULT_BUDGETS:
        common.add_argument(f"--budget-{k}", type=int, default=None, metavar="N")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("validate", "dual", "certify", "render"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input", help="family JSON file, or - for stdin")
    sp = sub.add_parser("enumerate", parents=[common])
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--iso", action="store_true", help="one family per isomorphism class")
    sp.add_argument("--sample", type=int, default=0, help="draw this many random valid families")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except NotAPolarization as exc:
        print(f"not a polarization: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, FamilyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_TRUE


if __name__ == "__main__":
    sys.exit(main())
