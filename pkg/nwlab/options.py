"""Validation of command-line and environment input."""
# options.py

import logging
import os
from collections.abc import Mapping
from typing import Any, Callable, Optional

import voluptuous as vol

from .algebra import LoopGenerator
from .const import DEFAULT_DEPTH_LIMIT, ENV_DEPTH_LIMIT
from .exceptions import UsageError
from .partitions import Partition
from .serialization import parse_rational

_LOGGER = logging.getLogger(__name__)

BASE_CHOICES = ("trivial", "verma", "intermediate")
GRADING_CHOICES = ("standard", "new")


def _wrap(parser: Callable[[Any], Any], label: str) -> Callable[[Any], Any]:
    def validator(value: Any) -> Any:
        try:
            return parser(value)
        except (TypeError, ValueError) as err:
            raise vol.Invalid(f"expected {label}: {err}") from err

    return validator


def Rational() -> Callable[[Any], Any]:
    """Validator for `p/q` or integer literals."""
    return _wrap(parse_rational, "a rational p/q")


def GeneratorLiteral() -> Callable[[Any], Any]:
    """Validator for literals such as `a:-1`."""
    return _wrap(LoopGenerator.parse, "a generator like a:-1")


def WordLiteral() -> Callable[[Any], Any]:
    """Validator for comma separated generator literals such as `a:1,b:-1`."""
    return _wrap(lambda text: tuple(LoopGenerator.parse(piece) for piece in str(text).split(",") if piece.strip()),
                 "a word like a:1,b:-1")


def PartitionLiteral() -> Callable[[Any], Any]:
    """Validator for weakly decreasing comma lists such as `2,1,1`."""
    return _wrap(Partition.parse, "a partition like 2,1,1")


DEPTH_LIMIT_SCHEMA = vol.Schema(vol.All(vol.Coerce(int), vol.Range(min=0)))

_HEIGHT = vol.All(vol.Coerce(int), vol.Range(min=0))
_POSITIVE = vol.All(vol.Coerce(int), vol.Range(min=1))

MODULE_OPTIONS: dict[Any, Any] = {
    vol.Optional("level", default="1"): Rational(),
    vol.Optional("base", default=None): vol.Any(None, vol.In(BASE_CHOICES)),
    vol.Optional("c", default=None): vol.Any(None, Rational()),
    vol.Optional("d", default="0"): Rational(),
    vol.Optional("alpha", default="0"): Rational(),
    vol.Optional("beta", default="0"): Rational(),
    vol.Optional("gamma", default="0"): Rational(),
    vol.Optional("window", default=None): vol.Any(None, _HEIGHT),
    vol.Optional("depth", default=None): vol.Any(None, _HEIGHT),
}

SCHEMAS: dict[str, vol.Schema] = {
    "bracket": vol.Schema({
        vol.Required("x"): GeneratorLiteral(),
        vol.Required("y"): GeneratorLiteral(),
    }),
    "nf": vol.Schema({
        vol.Required("word"): WordLiteral(),
        vol.Optional("level", default="1"): Rational(),
    }),
    "dims": vol.Schema({
        **MODULE_OPTIONS,
        vol.Required("max"): _HEIGHT,
        vol.Optional("dweight", default=None): vol.Any(None, Rational()),
    }),
    "singular": vol.Schema({
        **MODULE_OPTIONS,
        vol.Optional("grading", default="standard"): vol.In(GRADING_CHOICES),
        vol.Required("height"): _POSITIVE,
        vol.Optional("dweight", default=None): vol.Any(None, Rational()),
        vol.Optional("max_mode", default=None): vol.Any(None, _POSITIVE),
        vol.Optional("partition", default=None): vol.Any(None, PartitionLiteral()),
    }),
    "probe": vol.Schema({
        **MODULE_OPTIONS,
        vol.Optional("grading", default="standard"): vol.In(GRADING_CHOICES),
        vol.Required("max"): _POSITIVE,
        vol.Optional("max_mode", default=None): vol.Any(None, _POSITIVE),
        vol.Optional("spread", default=None): vol.Any(None, _HEIGHT),
        vol.Optional("parallel", default=False): bool,
    }),
    "virasoro": vol.Schema({
        **MODULE_OPTIONS,
        vol.Required("m"): vol.Coerce(int),
        vol.Required("n"): vol.Coerce(int),
        vol.Optional("max_height", default=2): _HEIGHT,
    }),
    "wakimoto": vol.Schema({
        vol.Optional("level", default="1"): Rational(),
        vol.Optional("alpha_p", default="0"): Rational(),
        vol.Optional("alpha_q", default="0"): Rational(),
        vol.Optional("max_mode", default=2): _HEIGHT,
        vol.Optional("max_depth", default=2): _HEIGHT,
    }),
    "casimir": vol.Schema({
        vol.Optional("level", default=None): vol.Any(None, Rational()),
        vol.Optional("c", default=None): vol.Any(None, Rational()),
        vol.Optional("d", default=None): vol.Any(None, Rational()),
    }),
}


def _flag(key: Any) -> str:
    return "--" + str(key).replace("_", "-")


def validate_options(command: str, options: Mapping[str, Any]) -> dict[str, Any]:
    """Validate the parsed flags of a subcommand, dropping unset ones so defaults apply."""
    schema = SCHEMAS.get(command)
    if schema is None:
        raise UsageError(f"unknown command {command!r}", "command")
    present = {key: value for key, value in options.items() if value is not None}
    try:
        validated = schema(present)
    except vol.MultipleInvalid as err:
        flag = _flag(err.path[0]) if err.path else None
        _LOGGER.debug("Rejected %s options: %s", command, err)
        raise UsageError(f"{flag}: {err.msg}" if flag else str(err), flag) from err
    return validated


def depth_limit(environ: Optional[Mapping[str, str]] = None) -> int:
    """The truncation depth cap from NWLAB_DEPTH_LIMIT, default 8."""
    environ = os.environ if environ is None else environ
    raw = environ.get(ENV_DEPTH_LIMIT)
    if raw is None or raw == "":
        return DEFAULT_DEPTH_LIMIT
    try:
        return DEPTH_LIMIT_SCHEMA(raw)
    except vol.Invalid as err:
        raise UsageError(f"{ENV_DEPTH_LIMIT} must be a nonnegative integer, got {raw!r}", ENV_DEPTH_LIMIT) from err


def check_depth(depth: int, limit: int, flag: str = "--depth") -> int:
    if depth > limit:
        raise UsageError(f"{flag}: depth {depth} exceeds the limit {limit} set by {ENV_DEPTH_LIMIT}", flag)
    return depth
