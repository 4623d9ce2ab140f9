"""Command-line front end: tallying, winner computation, verification,
ranking, instance generation, and benchmarking.

Exit codes: 0 success, 1 malformed input, 2 invalid configuration.
Diagnostics go to stderr; results go to stdout.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass


from . import ballots, bottleneck, dominance, majority_graph, reductions, winners

PROG = "schulze"


@dataclass
class RunConfig:
    """Validated invocation: one subcommand plus its selectors."""

    subcommand: str
    inputs: tuple[str, ...] = ()
    algo: str = ""
    strength: str = "margin"
    kind: str = ""
    seed: int = 0
    sizes: tuple[int, ...] = ()
    n: int = 10
    tie_prob: float = 0.0
    fmt: str = "text"
    all_winners: bool = True
    candidate: str = ""


class InputError(Exception):
    """Unreadable or malformed input file."""


def _read_input(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load_profile_or_graph(path: str):
    """Auto-detect a ballot file or a graph file by its first content line."""
    text = _read_input(path)
    first = ""
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            first = line
            break
    try:
        if first.startswith("wmg"):
            return None, majority_graph.parse_graph(text)
        profile = ballots.parse_profile(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    return profile, None


def _graph_from(config: RunConfig, path: str) -> majority_graph.ComparisonGraph:
    profile, graph = _load_profile_or_graph(path)
    if graph is not None:
        return graph
    return _build_graph(profile, config)


def _build_graph(profile, config: RunConfig) -> majority_graph.ComparisonGraph:
    if config.strength != "margin":
        return majority_graph.build_comparison_graph(profile, config.strength)
    if config.algo == "fast":
        return majority_graph.build_wmg_fast(profile)
    return majority_graph.build_wmg_naive(profile)


def _emit_names(graph, indices, fmt: str) -> None:
    names = [graph.candidates[i] for i in indices]
    if fmt == "csv":
        print(",".join(names))
    else:
        for name in names:
            print(name)


def _cmd_tally(config: RunConfig) -> int:
    profile, graph = _load_profile_or_graph(config.inputs[0])
    if profile is None:
        raise InputError("tally expects a ballot file, not a graph")
    sys.stdout.write(majority_graph.format_graph(_build_graph(profile, config)))
    return 0


def _cmd_winners(config: RunConfig) -> int:
    graph = _graph_from(config, config.inputs[0])
    if config.algo == "baseline":
        winner_set = bottleneck.winners_from_bottlenecks(bottleneck.apbp(graph))
        result = winner_set if config.all_winners else winner_set[:1]
    elif config.all_winners:
        result = winners.find_all_winners(graph)
    else:
        result = [winners.find_winner(graph)]
    _emit_names(graph, result, config.fmt)
    return 0


def _cmd_verify(config: RunConfig) -> int:
    graph = _graph_from(config, config.inputs[0])
    if config.candidate not in graph.candidates:
        print(f"{PROG}: unknown candidate {config.candidate!r}", file=sys.stderr)
        return 2
    ok = bottleneck.verify_winner(graph, graph.candidates.index(config.candidate))
    print("yes" if ok else "no")
    return 0


def _cmd_rank(config: RunConfig) -> int:
    graph = _graph_from(config, config.inputs[0])
    ranking = bottleneck.schulze_ranking(bottleneck.apbp(graph))
    if config.fmt == "csv":
        print("rank,candidate")
        for level, group in enumerate(ranking, start=1):
            for v in group:
                print(f"{level},{graph.candidates[v]}")
    else:
        print(
            " > ".join(
                " = ".join(graph.candidates[v] for v in group) for group in ranking
            )
        )
    return 0


def _cmd_gen(config: RunConfig) -> int:
    m = config.sizes[0]
    if config.kind == "graph":
        graph = majority_graph.random_margin_graph(m, config.n, config.seed)
        sys.stdout.write(majority_graph.format_graph(graph))
    else:
        profile = ballots.random_profile(m, config.n, config.tie_prob, config.seed)
        sys.stdout.write(ballots.format_profile(profile))
    return 0


def _cmd_reduce(config: RunConfig) -> int:
    mats = []
    for path in config.inputs:
        try:
            mats.append(dominance.parse_matrix(_read_input(path)))
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from None
    try:
        inst = dominance.DominanceInstance(mats[0], mats[1])
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if config.kind == "winner":
        instance = reductions.dominating_pairs_to_schulze_instance(inst)
    else:
        instance = reductions.dominance_to_wmg_instance(inst)
    sys.stdout.write(ballots.format_profile(instance.profile))
    print(reductions.roles_comment(instance.roles))
    return 0


def _time(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def _cmd_bench(config: RunConfig) -> int:
    print("m,algo,seconds")
    if config.kind == "wmg":
        for m in config.sizes:
            profile = ballots.random_profile(m, config.n, config.tie_prob, config.seed)
            print(f"{m},naive,{_time(lambda: majority_graph.build_wmg_naive(profile)):.6f}")
            block = 1
            while block <= 2 * m:
                secs = _time(
                    lambda: majority_graph.build_wmg_fast(profile, block_size=block)
                )
                print(f"{m},fast_s{block},{secs:.6f}")
                block *= 4
        return 0
    for m in config.sizes:
        graph = majority_graph.random_margin_graph(m, config.n, config.seed)
        for algo in ("baseline", "dscc") if config.algo == "" else (config.algo,):
            if algo == "baseline":
                secs = _time(
                    lambda: bottleneck.winners_from_bottlenecks(bottleneck.apbp(graph))
                )
            else:
                secs = _time(lambda: winners.find_all_winners(graph))
            print(f"{m},{algo},{secs:.6f}")
    return 0


_COMMANDS = {
    "tally": _cmd_tally,
    "winners": _cmd_winners,
    "verify": _cmd_verify,
    "rank": _cmd_rank,
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "bench": _cmd_bench,
}


def _sizes(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Schulze-method tallying, winners, and instance generators.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, inputs=False):
        if inputs:
            p.add_argument(
                "--input",
                "-i",
                action="append",
                default=None,
                metavar="PATH",
                help="input file, repeatable ('-' reads stdin)",
            )
        p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("tally", help="ballot file -> comparison graph")
    add_common(p, inputs=True)
    p.add_argument("--algo", choices=("naive", "fast"), default="naive")
    p.add_argument(
        "--strength",
        choices=("margin", "winning-votes", "losing-votes", "ratio"),
        default="margin",
    )

    p = sub.add_parser("winners", help="ballot or graph file -> winner set")
    add_common(p, inputs=True)
    p.add_argument("--algo", choices=("baseline", "dscc"), default="dscc")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", dest="all_winners", action="store_true", default=True)
    group.add_argument("--one", dest="all_winners", action="store_false")

    p = sub.add_parser("verify", help="is CANDIDATE a possible winner?")
    add_common(p, inputs=True)
    p.add_argument("candidate")

    p = sub.add_parser("rank", help="ballot or graph file -> full weak order")
    add_common(p, inputs=True)

    p = sub.add_parser("gen", help="emit a random profile or graph")
    add_common(p)
    p.add_argument("--kind", choices=("profile", "graph"), default="profile")
    p.add_argument("--m", type=_sizes, default=(5,), help="candidate count")
    p.add_argument("--n", type=int, default=10, help="voters (profile) or weight bound (graph)")
    p.add_argument("--tie-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("reduce", help="matrix pair -> election instance")
    add_common(p, inputs=True)
    p.add_argument("--kind", choices=("wmg", "winner"), default="wmg")

    p = sub.add_parser("bench", help="timing sweeps as CSV rows")
    add_common(p)
    p.add_argument("--kind", choices=("winners", "wmg"), default="winners")
    p.add_argument("--algo", choices=("baseline", "dscc"), default="")
    p.add_argument("--m", type=_sizes, default=(200, 400, 800), help="sizes, comma-separated")
    p.add_argument("--n", type=int, default=25, help="weight bound / voter count")
    p.add_argument("--tie-prob", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(subcommand=args.subcommand)
    config.inputs = tuple(getattr(args, "input", None) or ())
    config.algo = getattr(args, "algo", "")
    config.strength = getattr(args, "strength", "margin").replace("-", "_")
    config.kind = getattr(args, "kind", "")
    config.seed = getattr(args, "seed", 0)
    config.sizes = tuple(getattr(args, "m", ()) or ())
    config.n = getattr(args, "n", 10)
    config.tie_prob = getattr(args, "tie_prob", 0.0)
    config.fmt = getattr(args, "format", "text")
    config.all_winners = getattr(args, "all_winners", True)
    config.candidate = getattr(args, "candidate", "")
    return config


def _validate(config: RunConfig) -> str | None:
    needs_input = {"tally": 1, "winners": 1, "verify": 1, "rank": 1, "reduce": 2}
    if config.subcommand in needs_input:
        want = needs_input[config.subcommand]
        if len(config.inputs) != want:
            return f"{config.subcommand} needs exactly {want} --input file(s)"
    if not 0.0 <= config.tie_prob <= 1.0:
        return "--tie-prob must be in [0, 1]"
    if config.subcommand == "gen" and len(config.sizes) != 1:
        return "gen takes a single --m value"
    if config.subcommand in ("gen", "bench") and config.n < 0:
        return "--n must be >= 0"
    return None


def run(config: RunConfig) -> int:
    """Execute one validated configuration; returns the exit status."""
    problem = _validate(config)
    if problem is not None:
        print(f"{PROG}: {problem}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[config.subcommand](config)
    except InputError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
