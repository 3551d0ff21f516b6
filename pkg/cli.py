"""
Command-line surface.

Exit codes: 0 yes or success, 1 no or infeasible, 2 usage, parse or
validation error, 3 precondition violation.
"""

from dotenv import load_dotenv
load_dotenv()

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from core.assembly import GenomeModel, Verdict
from core.compatibility import is_compatible
from core.errors import CapExceeded, FormatError, InvalidHypergraph, PreconditionViolated
from core.hypergraph import AssemblyHypergraph, validate
from core.logging_config import configure_logging
from engines.adjacency import maximize_adjacencies_mixed
from engines.oriented import decide_oriented
from engines.triples import maximize_triples
from formats.assembly_format import parse_assembly, render_verdict
from formats.extremities import check_alternation, encode_extremities
from formats.hypergraph_format import parse_hypergraph, serialize_hypergraph
from formats.marker_format import parse_markers
from oracle.enumeration import oracle_count, oracle_decide, oracle_max_subset
from services.engine_dispatch import AUTO, EngineDispatcher

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _hypergraph(path: str) -> AssemblyHypergraph:
    return parse_hypergraph(_read(path), source=path)


def _model(args: argparse.Namespace) -> GenomeModel:
    return GenomeModel(args.model)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _verdict_exit(verdict: Verdict) -> int:
    return EXIT_YES if verdict.is_yes else EXIT_NO


def cmd_validate(args: argparse.Namespace) -> int:
    stats = validate(_hypergraph(args.file))
    _emit(
        f"n={stats.n} m={stats.m} s={stats.s} max_edge_size={stats.max_edge_size} "
        f"max_degree={stats.max_degree} max_multiplicity={stats.max_multiplicity} "
        f"repeats={stats.repeat_count}"
        + (f" ({','.join(sorted(stats.repeats))})" if stats.repeats else "")
        + "\n"
    )
    return EXIT_YES


def cmd_decide(args: argparse.Namespace) -> int:
    verdict = EngineDispatcher().decide(_hypergraph(args.file), _model(args), args.engine)
    _emit(render_verdict(verdict, notes=True))
    return _verdict_exit(verdict)


def cmd_decide_markers(args: argparse.Namespace) -> int:
    encoding = encode_extremities(parse_markers(_read(args.file), source=args.file))
    verdict = decide_oriented(encoding, _model(args))
    _emit(render_verdict(verdict, notes=True))
    return _verdict_exit(verdict)


def cmd_maximize_adjacencies(args: argparse.Namespace) -> int:
    optimum = maximize_adjacencies_mixed(_hypergraph(args.file))
    _emit(render_verdict(Verdict.yes(optimum.assembly, "adjacency"), optimum.weight))
    return EXIT_YES


def cmd_maximize_triples(args: argparse.Namespace) -> int:
    h = _hypergraph(args.file)
    optimum = maximize_triples(h, strict=not args.permissive)
    _emit(render_verdict(Verdict.yes(optimum.assembly, "triples"), optimum.weight))
    if args.output_hypergraph:
        selected = h.with_edges(h.adjacencies + optimum.selected)
        Path(args.output_hypergraph).write_text(serialize_hypergraph(selected), encoding="utf-8")
        logger.info("Wrote the selected triples to %s", args.output_hypergraph)
    return EXIT_YES


def cmd_oracle(args: argparse.Namespace) -> int:
    h = _hypergraph(args.file)
    model = _model(args)
    if args.action == "count":
        _emit(f"{oracle_count(h, model)}\n")
        return EXIT_YES
    if args.action == "decide":
        verdict = oracle_decide(h, model)
        _emit(render_verdict(verdict))
        return _verdict_exit(verdict)

    pools = {"all": h.edges, "adjacencies": h.adjacencies, "intervals": h.intervals}
    chosen, weight = oracle_max_subset(h, pools[args.candidates], model)
    kept = tuple(e for e in h.edges if e not in pools[args.candidates]) + chosen
    verdict = oracle_decide(h.with_edges(kept), model)
    _emit(render_verdict(verdict, weight))
    return EXIT_YES


def cmd_check(args: argparse.Namespace) -> int:
    assembly = parse_assembly(_read(args.assembly), source=args.assembly)
    model = _model(args)
    if args.markers:
        encoding = encode_extremities(parse_markers(_read(args.file), source=args.file))
        report = is_compatible(assembly, encoding.hypergraph, model)
        if report.ok:
            report = check_alternation(assembly, encoding)
    else:
        report = is_compatible(assembly, _hypergraph(args.file), model)
    if report.ok:
        _emit("COMPATIBLE\n")
        return EXIT_YES
    for violation in report.violations:
        _emit(f"INCOMPATIBLE {violation.kind} {violation.subject}: {violation.message}\n")
    return EXIT_NO


def cmd_encode_extremities(args: argparse.Namespace) -> int:
    encoding = encode_extremities(parse_markers(_read(args.file), source=args.file))
    _emit(serialize_hypergraph(encoding.hypergraph))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mc1p", description="Assembly hypergraph decisions and optimizers.")
    parser.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help_text: str, model: bool = True):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("file", help="hypergraph file" if name not in _MARKER_COMMANDS else "marker file")
        if model:
            sub.add_argument("--model", choices=[m.value for m in GenomeModel], default=GenomeModel.LINEAR.value)
        sub.set_defaults(handler=handler)
        return sub

    command("validate", cmd_validate, "check a hypergraph file and print its statistics", model=False)
    decide = command("decide", cmd_decide, "decide whether an assembly exists")
    decide.add_argument("--engine", choices=EngineDispatcher().names, default=AUTO)
    command("decide-markers", cmd_decide_markers, "decide an oriented marker instance")
    command("maximize-adjacencies", cmd_maximize_adjacencies, "heaviest adjacency subset (mixed model)", model=False)
    triples = command("maximize-triples", cmd_maximize_triples, "heaviest triple subset (mixed model)", model=False)
    triples.add_argument("--permissive", action="store_true", help="skip triples outside the preconditions")
    triples.add_argument("--output-hypergraph", metavar="PATH", help="write the adjacencies plus selected triples")

    oracle = commands.add_parser("oracle", help="exhaustive reference answers for small instances")
    actions = oracle.add_subparsers(dest="action", required=True)
    for action, help_text in (
        ("decide", "brute-force decision"),
        ("count", "number of compatible canonical assemblies"),
        ("maximize", "heaviest candidate subset by brute force"),
    ):
        sub = actions.add_parser(action, help=help_text)
        sub.add_argument("file", help="hypergraph file")
        sub.add_argument("--model", choices=[m.value for m in GenomeModel], default=GenomeModel.LINEAR.value)
        if action == "maximize":
            sub.add_argument("--candidates", choices=["all", "adjacencies", "intervals"], default="all")
        sub.set_defaults(handler=cmd_oracle)

    check = command("check", cmd_check, "check an assembly file against an instance")
    check.add_argument("--assembly", required=True, help="assembly file (L/C lines)")
    check.add_argument("--markers", action="store_true", help="the instance is a marker file; also check alternation")
    command("encode-extremities", cmd_encode_extremities, "print the extremity encoding of a marker file", model=False)
    return parser


_MARKER_COMMANDS = {"decide-markers", "encode-extremities"}

_FAILURES: Dict[type, int] = {
    FormatError: EXIT_USAGE,
    InvalidHypergraph: EXIT_USAGE,
    OSError: EXIT_USAGE,
    PreconditionViolated: EXIT_PRECONDITION,
    CapExceeded: EXIT_PRECONDITION,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_YES if exc.code == 0 else EXIT_USAGE
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except tuple(_FAILURES) as exc:
        code = next(c for kind, c in _FAILURES.items() if isinstance(exc, kind))
        logger.error("%s failed: %s", args.command, exc)
        sys.stderr.write(f"error: {exc}\n")
        return code


if __name__ == "__main__":
    sys.exit(main())
