#!/usr/bin/env python3
"""
fbplab - Finite Basis Problem Lab
Builds the monoid families, words and presentations of the catalogue and runs the
verification suites over them.
"""

import json
import os
import sys
from typing import Dict, List

from pydantic import ValidationError

# Add project root to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config import LOG_LEVEL, TOOL_NAME, TOOL_VERSION
from harness import list_suites, run_suite
from models import SuiteConfig
from monoids.green import structure_flags, triviality
from presentations.bridges import hecke_two_route, present
from presentations.catalog import named_presentation
from presentations.coxeter import coxeter_group_model
from safety.validation import PreconditionError, require
from transformations.digraphs import build_gamma_n, catalan_of_digraph, digraph_analysis, path_digraph
from transformations.families import enumerate_family, family_monoid, parse_family
from utils.formats import (
    format_digraph, format_map, format_monoid, format_presentation, parse_coxeter_matrix, parse_digraph,
    parse_monoid, parse_presentation,
)
from utils.logger import get_logger, setup_logging
from utils.response_formatter import emit_report

logger = get_logger(__name__)

EXIT_FAILED_CHECKS = 1
EXIT_INVALID_INPUT = 2


def load_config(path: str) -> SuiteConfig:
    """Read a SuiteConfig from a JSON file; unknown keys are rejected."""
    try:
        with open(path, encoding="utf-8") as handle:
            return SuiteConfig.model_validate(json.load(handle))
    except OSError as e:
        raise PreconditionError(f"cannot read config {path!r}: {e}")
    except json.JSONDecodeError as e:
        raise PreconditionError(f"config {path!r} is not valid JSON: {e}")
    except ValidationError as e:
        raise PreconditionError(f"invalid config {path!r}: {e.error_count()} error(s): {e.errors()[0]['msg']}")


def _key_values(tokens: List[str]) -> Dict[str, str]:
    params = {}
    for token in tokens:
        require("=" in token, f"expected key=value, got {token!r}")
        key, value = token.split("=", 1)
        params[key] = value
    return params


def _int_arg(tokens: List[str], position: int, what: str) -> int:
    require(len(tokens) > position, f"missing {what}")
    try:
        return int(tokens[position])
    except ValueError:
        raise PreconditionError(f"{what} must be an integer, got {tokens[position]!r}")


def build_object(kind: str, args: List[str]) -> str:
    """Render one catalogued object in its text file format.

    Args:
        kind: family, monoid, presentation or digraph
        args: family: ``<name> <m>``; monoid: ``<name> <m>``;
            presentation: ``<kind> [key=value ...]``; digraph: ``gamma <n>`` or ``path <m>``

    Returns:
        The formatted object, newline terminated
    """
    if kind == "family":
        family = parse_family(args[0] if args else "")
        maps = enumerate_family(family, _int_arg(args, 1, "m"))
        return "".join(format_map(alpha) + "\n" for alpha in maps)
    if kind == "monoid":
        family = parse_family(args[0] if args else "")
        return format_monoid(family_monoid(family, _int_arg(args, 1, "m")))
    if kind == "presentation":
        require(len(args) >= 1, "presentation kind is required")
        return format_presentation(named_presentation(args[0], _key_values(args[1:])))
    if kind == "digraph":
        require(len(args) >= 1, "digraph kind is required")
        if args[0] == "gamma":
            return format_digraph(build_gamma_n(_int_arg(args, 1, "n")))
        if args[0] == "path":
            return format_digraph(path_digraph(_int_arg(args, 1, "m")))
        raise PreconditionError(f"unknown digraph {args[0]!r}; expected gamma or path")
    raise PreconditionError(f"unknown build target {kind!r}; expected family, monoid, presentation or digraph")


def inspect_object(kind: str, text: str, name: str = "") -> str:
    """Parse an object file and summarise what fbplab computes for it.

    Args:
        kind: digraph, monoid, presentation or coxeter
        text: file contents in the matching format of ``utils.formats``
        name: label used in log lines

    Returns:
        One ``key: value`` line per fact, values JSON encoded
    """
    facts: Dict[str, object] = {}
    if kind == "digraph":
        graph = parse_digraph(text)
        analysis = digraph_analysis(graph)
        facts.update(vertices=graph.n, edges=len(graph.edges), acyclic=analysis.is_acyclic)
        if analysis.is_acyclic:
            monoid = catalan_of_digraph(graph)
            facts.update(longest_path=analysis.longest_path_vertices, catalan_monoid_size=monoid.size,
                         r_trivial=triviality(monoid).r_trivial)
    elif kind == "monoid":
        monoid = parse_monoid(text, name=name)
        flags, structure = triviality(monoid), structure_flags(monoid)
        facts.update(size=monoid.size, generators=len(monoid.generators), r_trivial=flags.r_trivial,
                     l_trivial=flags.l_trivial, j_trivial=flags.j_trivial, aperiodic=structure.aperiodic,
                     band=structure.is_band)
    elif kind == "presentation":
        presented, _ = present(parse_presentation(text, name=name))
        facts.update(exact=presented.exact, size=presented.reported_size, semigroup=presented.semigroup)
    elif kind == "coxeter":
        matrix = parse_coxeter_matrix(text, name=name)
        model = coxeter_group_model(matrix)
        result = hecke_two_route(matrix)
        facts.update(group_order=model.group.size, relations_hold=model.relations_hold,
                     hecke_presented=result.presented_size, hecke_model=result.model_size,
                     isomorphic=result.isomorphic)
    else:
        raise PreconditionError(f"unknown object kind {kind!r}; expected digraph, monoid, presentation or coxeter")
    logger.info(f"Inspected {kind} {name or ''}".rstrip())
    return "".join(f"{key}: {json.dumps(value)}\n" for key, value in facts.items())


def inspect_file(kind: str, path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise PreconditionError(f"cannot read {path!r}: {e}")
    return inspect_object(kind, text, name=os.path.splitext(os.path.basename(path))[0])


def run_suite_command(name: str, config_path: str, output_format: str, seed) -> int:
    config = load_config(config_path) if config_path else SuiteConfig()
    if seed is not None:
        config = config.model_copy(update={"seed": seed})
    report = run_suite(name, config)
    print(emit_report(report, output_format))
    return EXIT_FAILED_CHECKS if report.failed else 0


def main(argv: List[str] = None) -> int:
    """CLI entry point; returns the process exit status."""
    import argparse

    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="Finite basis problem verification lab")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="loguru level for stderr output")
    commands = parser.add_subparsers(dest="command", required=True)

    suite = commands.add_parser("suite", help="Run a verification suite")
    suite.add_argument("name", help="Suite name, or 'all'")
    suite.add_argument("--config", help="JSON file with SuiteConfig fields")
    suite.add_argument("--format", choices=["json", "text"], default="json", help="Report format")
    suite.add_argument("--seed", type=int, help="Override the configured seed")

    commands.add_parser("list-suites", help="List registered suites")

    build = commands.add_parser("build", help="Dump a catalogued object in its file format")
    build.add_argument("kind", choices=["family", "monoid", "presentation", "digraph"])
    build.add_argument("args", nargs="*")

    inspect = commands.add_parser("inspect", help="Parse an object file and summarise it")
    inspect.add_argument("kind", choices=["digraph", "monoid", "presentation", "coxeter"])
    inspect.add_argument("path", help="File in the matching text format")

    args = parser.parse_args(argv)
    setup_logging(level=args.log_level)

    try:
        if args.command == "suite":
            return run_suite_command(args.name, args.config, args.format, args.seed)
        if args.command == "list-suites":
            for entry in list_suites():
                print(f"{entry.name:<14} {entry.description}")
            print(f"{'all':<14} Every registered suite")
            return 0
        if args.command == "inspect":
            sys.stdout.write(inspect_file(args.kind, args.path))
            return 0
        sys.stdout.write(build_object(args.kind, args.args))
        return 0
    except ValueError as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except KeyboardInterrupt:
        print("\n❌ Interrupted by user", file=sys.stderr)
        return EXIT_FAILED_CHECKS


if __name__ == "__main__":
    sys.exit(main())
