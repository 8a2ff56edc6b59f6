"""Command-line surface: solve, verify, gap, gen, export-dot.

Machine-readable JSON goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 input error, 2 resource cap exceeded, 3 verification failure.
Identical invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import cover as cover_mod
from . import oracle as oracle_mod
from .errors import CapExceeded, ValidationError
from .generate import random_instance
from .graph import bipartite_dot, build_cross_neighbor_graph, derived_dot
from .instance import Instance, dedup, parse_instance, serialize_instance, split_groupcast
from .scheme import (
    CodingScheme,
    DEFAULT_WORD_WIDTH,
    assign_transmissions,
    parse_scheme,
    scheme_from_cover,
    verify_scheme_random,
    verify_scheme_symbolic,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


@dataclass(frozen=True)
class SolveConfig:
    solver: str = "auto"
    dedup: bool = True
    strict_cross_neighbor: bool = False
    word_width: int = DEFAULT_WORD_WIDTH
    seed: int = 0
    exact_cap: int = cover_mod.DEFAULT_EXACT_CAP
    oracle_n_cap: int = oracle_mod.DEFAULT_ORACLE_N_CAP
    mais_cap: int = oracle_mod.DEFAULT_MAIS_CAP

    def __post_init__(self):
        if self.solver not in ("exact", "greedy", "auto"):
            raise ValidationError(f"unknown solver {self.solver!r}")
        if not 1 <= self.word_width <= 64:
            raise ValidationError("word_width must be in [1, 64]")
        if min(self.exact_cap, self.oracle_n_cap, self.mais_cap) < 1:
            raise ValidationError("caps must be positive")


@dataclass(frozen=True)
class SolveOutcome:
    scheme: CodingScheme
    solver_used: str
    # per pre-dedup virtual: (origin, want, transmission index)
    assignments: list[tuple[tuple[int, int], int, int]]


def solve_instance(inst: Instance, config: SolveConfig = SolveConfig()) -> SolveOutcome:
    """Run the whole pipeline: split, dedup, graph, cover, scheme."""
    u_full = split_groupcast(inst)
    u = dedup(u_full) if config.dedup else u_full
    g = build_cross_neighbor_graph(u, strict=config.strict_cross_neighbor)
    solver_used = config.solver
    if config.solver == "greedy":
        cover = cover_mod.greedy_cover(g)
    elif config.solver == "exact":
        cover = cover_mod.exact_min_cover(g, cap=config.exact_cap)
    else:
        if g.vertex_count <= config.exact_cap:
            cover = cover_mod.exact_min_cover(g, cap=config.exact_cap)
            solver_used = "exact"
        else:
            print(
                f"warning: {g.vertex_count} vertices exceed the exact cap "
                f"{config.exact_cap}; falling back to greedy",
                file=sys.stderr,
            )
            cover = cover_mod.greedy_cover(g)
            solver_used = "greedy"
    scheme = scheme_from_cover(u, cover)
    part_of = cover.assignment(g.vertex_count)

    # expand assignments back to every pre-dedup virtual
    if config.dedup:
        kept = [i for i in range(len(u_full.virtuals)) if i not in u.dedup_map]
        new_pos = {orig: pos for pos, orig in enumerate(kept)}
        assignments = []
        for i, v in enumerate(u_full.virtuals):
            rep = u.dedup_map.get(i, i)
            assignments.append((v.origin, v.want, part_of[new_pos[rep]]))
    else:
        assignments = [
            (v.origin, v.want, part_of[i]) for i, v in enumerate(u_full.virtuals)
        ]
    return SolveOutcome(scheme=scheme, solver_used=solver_used, assignments=assignments)


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def _load_instance(path: str) -> Instance:
    return parse_instance(_read_file(path))


def _config_from_args(args: argparse.Namespace) -> SolveConfig:
    return SolveConfig(
        solver=getattr(args, "solver", "auto"),
        dedup=not getattr(args, "no_dedup", False),
        strict_cross_neighbor=getattr(args, "strict_cross_neighbor", False),
        word_width=getattr(args, "word_width", DEFAULT_WORD_WIDTH),
        seed=getattr(args, "seed", 0),
        exact_cap=getattr(args, "exact_cap", cover_mod.DEFAULT_EXACT_CAP),
        oracle_n_cap=getattr(args, "oracle_cap", oracle_mod.DEFAULT_ORACLE_N_CAP),
        mais_cap=getattr(args, "mais_cap", oracle_mod.DEFAULT_MAIS_CAP),
    )


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    config = _config_from_args(args)
    outcome = solve_instance(inst, config)
    _emit(
        {
            "num_messages": inst.num_messages,
            "rate": outcome.scheme.rate,
            "transmissions": [list(t) for t in outcome.scheme.transmissions],
            "solver": outcome.solver_used,
            "dedup": config.dedup,
            "assignments": [
                {"origin": list(origin), "want": want, "transmission": t}
                for origin, want, t in outcome.assignments
            ],
        }
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    scheme = parse_scheme(_read_file(args.scheme), num_messages=inst.num_messages)
    u = split_groupcast(inst)  # verification checks every demand, no dedup
    unsatisfied = verify_scheme_symbolic(u, scheme)
    report: dict = {
        "rate": scheme.rate,
        "symbolic_ok": not unsatisfied,
        "unsatisfied": [
            {"virtual": i, "origin": list(u.virtuals[i].origin), "want": u.virtuals[i].want}
            for i in unsatisfied
        ],
    }
    if unsatisfied:
        report.update({"random_ok": None, "trials": args.trials, "seed": args.seed})
        _emit(report)
        return EXIT_VERIFY
    failure = verify_scheme_random(
        u, scheme, trials=args.trials, seed=args.seed, word_width=args.word_width
    )
    assigned = assign_transmissions(u, scheme)
    report["virtuals"] = [
        {"origin": list(v.origin), "want": v.want, "transmission": assigned[i]}
        for i, v in enumerate(u.virtuals)
    ]
    report.update(
        {
            "random_ok": failure is None,
            "trials": args.trials,
            "seed": args.seed,
            "failure": None
            if failure is None
            else {"trial": failure.trial, "virtual": failure.virtual},
        }
    )
    _emit(report)
    return EXIT_OK if failure is None else EXIT_VERIFY


def cmd_gap(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    config = _config_from_args(args)
    report = oracle_mod.gap_report(
        inst,
        apply_dedup=config.dedup,
        strict=config.strict_cross_neighbor,
        exact_cap=config.exact_cap,
        oracle_n_cap=config.oracle_n_cap,
        mais_cap=config.mais_cap,
    )
    _emit(report.to_jsonable())
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    inst = random_instance(
        num_messages=args.messages,
        num_receivers=args.receivers,
        side_density=args.density,
        demand_range=(args.demand_min, args.demand_max),
        seed=args.seed,
    )
    print(serialize_instance(inst))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    if args.variant == "bipartite":
        sys.stdout.write(bipartite_dot(inst))
        return EXIT_OK
    config = _config_from_args(args)
    u_full = split_groupcast(inst)
    u = dedup(u_full) if config.dedup else u_full
    g = build_cross_neighbor_graph(u, strict=config.strict_cross_neighbor)
    cover = None
    if args.overlay_cover:
        if g.vertex_count <= config.exact_cap:
            cover = cover_mod.exact_min_cover(g, cap=config.exact_cap).parts
        else:
            cover = cover_mod.greedy_cover(g).parts
    sys.stdout.write(derived_dot(u, g, cover))
    return EXIT_OK


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--solver",
        choices=("exact", "greedy", "auto"),
        default="auto",
        help="cover solver; auto falls back to greedy over the exact cap",
    )
    p.add_argument("--exact-cap", type=int, default=cover_mod.DEFAULT_EXACT_CAP,
                   help="max vertices for the exact cover solver")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-dedup", action="store_true",
                   help="keep duplicate virtual receivers in the pipeline")
    p.add_argument("--strict-cross-neighbor", action="store_true",
                   help="drop the equal-demand edge rule (mutual containment only)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--word-width", type=int, default=DEFAULT_WORD_WIDTH,
                   help="bits per message word for randomized checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indexcoding",
        description="Index coding solver: clique covers of the cross-neighbor "
        "graph, XOR schemes, and brute-force optimality oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a coding scheme for an instance")
    p.add_argument("instance", help="instance JSON file")
    _add_solver_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a scheme against an instance")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("scheme", help="scheme JSON file")
    p.add_argument("--trials", type=int, default=100,
                   help="randomized verification trials")
    _add_common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gap", help="bound sandwich: MAIS, oracle, covers")
    p.add_argument("instance", help="instance JSON file")
    _add_solver_flags(p)
    _add_common_flags(p)
    p.add_argument("--oracle-cap", type=int, default=oracle_mod.DEFAULT_ORACLE_N_CAP,
                   help="max messages for the GF(2) oracle")
    p.add_argument("--mais-cap", type=int, default=oracle_mod.DEFAULT_MAIS_CAP,
                   help="max virtuals for the MAIS bound")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("gen", help="generate a random valid instance")
    p.add_argument("--messages", "-n", type=int, required=True)
    p.add_argument("--receivers", "-m", type=int, required=True)
    p.add_argument("--density", "-p", type=float, required=True,
                   help="probability that a non-wanted message is side information")
    p.add_argument("--demand-min", type=int, default=1)
    p.add_argument("--demand-max", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="emit a Graphviz diagram")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--variant", choices=("bipartite", "derived"), default="derived")
    p.add_argument("--overlay-cover", action="store_true",
                   help="color derived-graph nodes by cover part")
    _add_solver_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code is reserved for
        # resource caps here, so remap bad arguments to the input-error code
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
