"""Command-line driver writing one JSON document per invocation.

Exit status 0 means the computation ran and every identity it checked
held, 1 means an identity check came out false and 2 means the input
could not be used.
"""
# cli.py

import argparse
import logging
import re
import sys
from typing import Any, Callable, Optional, Sequence, TextIO

from .api import NappiWittenLab
from .const import DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, VERSION
from .exceptions import NappiWittenError, UsageError, VerificationFailed
from .options import BASE_CHOICES, GRADING_CHOICES, depth_limit, validate_options
from .serialization import dumps

_LOGGER = logging.getLogger(__name__)

_GLOBAL_KEYS = ("command", "pretty", "verbose")
_ARGUMENT = re.compile(r"argument (--[\w-]+)")


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting on bad input."""

    def error(self, message: str) -> None:  # type: ignore[override]
        match = _ARGUMENT.match(message)
        raise UsageError(message, match.group(1) if match else None)


def _module_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--level", help="level l, a rational p/q")
    parent.add_argument("--base", choices=BASE_CHOICES, help="base H4-module, inferred from --c/--alpha when absent")
    parent.add_argument("--c", help="c-eigenvalue of a Verma base")
    parent.add_argument("--d", help="d-eigenvalue of the top of the base")
    parent.add_argument("--alpha", help="alpha of an intermediate series base")
    parent.add_argument("--beta", help="beta of an intermediate series base")
    parent.add_argument("--gamma", help="gamma of an intermediate series base")
    parent.add_argument("--window", help="window of an intermediate series base")
    parent.add_argument("--depth", help="truncation depth of lowering monomials")
    return parent


def _output_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_mutually_exclusive_group()
    group.add_argument("--json", dest="pretty", action="store_false", help="compact JSON output (default)")
    group.add_argument("--pretty", dest="pretty", action="store_true", help="indented human-readable listing")
    parent.add_argument("--verbose", action="store_true", help="log progress to standard error")
    parent.set_defaults(pretty=False)
    return parent


def build_parser() -> argparse.ArgumentParser:
    """The parser for every subcommand."""
    output = _output_flags()
    module = _module_flags()
    parser = _Parser(prog=DOMAIN, description="Exact computations in the affine Nappi-Witten algebra.")
    parser.add_argument("--version", action="version", version=f"{DOMAIN} {VERSION}")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)

    sub = commands.add_parser("bracket", parents=[output], help="bracket of two loop generators")
    sub.add_argument("--x", help="generator literal such as a:2")
    sub.add_argument("--y", help="generator literal such as b:-2")

    sub = commands.add_parser("nf", parents=[output], help="PBW normal form of a word")
    sub.add_argument("--word", help="comma separated generators such as a:1,b:-1")
    sub.add_argument("--level", help="level l, a rational p/q")

    sub = commands.add_parser("dims", parents=[output, module], help="graded dimensions of an induced module")
    sub.add_argument("--max", help="largest height")
    sub.add_argument("--dweight", help="d-weight, required over a Verma or intermediate base")

    sub = commands.add_parser("singular", parents=[output, module], help="singular vectors of one component")
    sub.add_argument("--grading", choices=GRADING_CHOICES)
    sub.add_argument("--height", help="height of the component")
    sub.add_argument("--dweight", help="d-weight of the component")
    sub.add_argument("--max-mode", help="largest raising mode, default the height")
    sub.add_argument("--partition", help="also check c(-partition) v, e.g. 2,1")

    sub = commands.add_parser("probe", parents=[output, module], help="sweep components for singular vectors")
    sub.add_argument("--grading", choices=GRADING_CHOICES)
    sub.add_argument("--max", help="largest height")
    sub.add_argument("--max-mode", help="largest raising mode, default --max")
    sub.add_argument("--spread", help="extra d-weight offsets below the top")
    sub.add_argument("--parallel", action="store_true", default=None, help="solve components concurrently")

    sub = commands.add_parser("virasoro", parents=[output, module], help="check [L(m), L(n)]")
    sub.add_argument("--m")
    sub.add_argument("--n")
    sub.add_argument("--max-height", help="largest height of tested states")

    sub = commands.add_parser("wakimoto", parents=[output], help="check the free-field realization")
    sub.add_argument("--level", help="level l, a rational p/q")
    sub.add_argument("--alpha-p", help="(p, alpha)")
    sub.add_argument("--alpha-q", help="(q, alpha)")
    sub.add_argument("--max-mode", help="largest |mode| of tested relations")
    sub.add_argument("--max-depth", help="largest degree of tested Fock states")

    sub = commands.add_parser("casimir", parents=[output], help="Casimir elements")
    sub.add_argument("--level", help="level l, a rational p/q")
    sub.add_argument("--c", help="c of a Verma highest weight")
    sub.add_argument("--d", help="d of a Verma highest weight")
    return parser


def _dispatch(lab: NappiWittenLab) -> dict[str, Callable[[dict[str, Any]], dict[str, Any]]]:
    return {
        "bracket": lambda options: lab.bracket(options["x"], options["y"]),
        "nf": lambda options: lab.normal_form(options["word"], options["level"]),
        "dims": lab.dims,
        "singular": lab.singular,
        "probe": lab.probe,
        "virasoro": lab.virasoro,
        "wakimoto": lab.wakimoto,
        "casimir": lab.casimir,
    }


def render_pretty(document: Any, indent: int = 0) -> str:
    """Indented listing of a document, one scalar per line."""
    pad = "  " * indent
    if isinstance(document, dict):
        lines = []
        for key in sorted(document):
            value = document[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.append(render_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
        return "\n".join(lines)
    if isinstance(document, list):
        if all(not isinstance(item, (dict, list)) for item in document):
            return pad + " ".join(_scalar(item) for item in document)
        return "\n".join(f"{pad}-\n{render_pretty(item, indent + 1)}" for item in document)
    return pad + _scalar(document)


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, (dict, list)):
        return "(empty)"
    return str(value)


def _failed(document: Any) -> bool:
    return isinstance(document, dict) and document.get("verified") is False


def _emit(document: dict[str, Any], pretty: bool, out: TextIO) -> None:
    out.write((render_pretty(document) if pretty else dumps(document)) + "\n")


def run(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    environ: Optional[dict[str, str]] = None,
) -> int:
    """Parse arguments, run one command and write its document; returns the exit status."""
    out = sys.stdout if out is None else out
    pretty = False
    try:
        args = build_parser().parse_args(argv)
        pretty = getattr(args, "pretty", False)
        if getattr(args, "verbose", False):
            logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
        if args.command is None:
            raise UsageError("a subcommand is required", "command")
        flags = {key: value for key, value in vars(args).items() if key not in _GLOBAL_KEYS}
        options = validate_options(args.command, flags)
        lab = NappiWittenLab(depth_limit(environ))
        _LOGGER.debug("Running %s with %s", args.command, options)
        document = _dispatch(lab)[args.command](options)
    except UsageError as ex:
        _emit({"error": str(ex), "flag": ex.flag}, pretty, out)
        return EXIT_USAGE
    except VerificationFailed as ex:
        _emit({"error": str(ex), "verified": False}, pretty, out)
        return EXIT_VERIFICATION_FAILED
    except (NappiWittenError, ValueError) as ex:
        _emit({"error": str(ex), "flag": None}, pretty, out)
        return EXIT_USAGE

    _emit(document, pretty, out)
    return EXIT_VERIFICATION_FAILED if _failed(document) else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point."""
    return run(argv)
