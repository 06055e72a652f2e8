"""JSON encoding of algebra elements, module states and reports.

Rationals are written as canonical `num/den` strings and every list is
emitted in a fixed order, so equal values always encode to the same text.
"""
# serialization.py

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .algebra import GeneratorTag, LieElement, LoopGenerator
from .combination import Combination, format_fraction
from .const import (
    JSON_BASE,
    JSON_CENTRAL,
    JSON_COEFF,
    JSON_GEN,
    JSON_KIND,
    JSON_LEVEL,
    JSON_MODE,
    JSON_TERMS,
    JSON_WORD,
    KIND_INTERMEDIATE,
    KIND_TRIVIAL,
    KIND_VERMA,
)
from .enveloping import PBWMonomial, UEAElement
from .fock import Oscillator, TensorFockState
from .modules import BaseModule, ModuleState
from .singular import SingularReport


def parse_rational(text: str | int) -> Fraction:
    """Parse `p/q` or an integer literal; the denominator must be positive."""
    if isinstance(text, int):
        return Fraction(text)
    numerator, sep, denominator = str(text).strip().partition("/")
    try:
        if not sep:
            return Fraction(int(numerator))
        den = int(denominator)
        if den <= 0:
            raise ValueError("denominator must be positive")
        return Fraction(int(numerator), den)
    except ValueError as err:
        raise ValueError(f"invalid rational {text!r}: {err}") from err


def _word_to_json(word: PBWMonomial) -> list[list[Any]]:
    return [[gen.tag.value, gen.mode] for gen in word]


def _word_from_json(data: list[list[Any]]) -> PBWMonomial:
    return tuple(LoopGenerator(GeneratorTag(tag), int(mode)) for tag, mode in data)


def lie_to_json(x: LieElement) -> dict[str, Any]:
    terms = sorted(x.loop_terms.items(), key=lambda item: item[0].sort_key)
    return {
        JSON_TERMS: [
            {JSON_GEN: gen.tag.value, JSON_MODE: gen.mode, JSON_COEFF: format_fraction(coeff)}
            for gen, coeff in terms
        ],
        JSON_CENTRAL: format_fraction(x.central),
    }


def lie_from_json(data: dict[str, Any]) -> LieElement:
    loop = Combination(
        (LoopGenerator(GeneratorTag(term[JSON_GEN]), int(term[JSON_MODE])), parse_rational(term[JSON_COEFF]))
        for term in data.get(JSON_TERMS, [])
    )
    return LieElement(loop, parse_rational(data.get(JSON_CENTRAL, "0/1")))


def uea_to_json(u: UEAElement) -> dict[str, Any]:
    return {
        JSON_LEVEL: format_fraction(u.level),
        JSON_TERMS: [
            {JSON_WORD: _word_to_json(word), JSON_COEFF: format_fraction(coeff)}
            for word, coeff in u.sorted_terms()
        ],
    }


def uea_from_json(data: dict[str, Any]) -> UEAElement:
    terms = Combination(
        (_word_from_json(term[JSON_WORD]), parse_rational(term[JSON_COEFF])) for term in data.get(JSON_TERMS, [])
    )
    return UEAElement(parse_rational(data[JSON_LEVEL]), terms)


def state_to_json(state: ModuleState, base: BaseModule) -> dict[str, Any]:
    return {
        JSON_TERMS: [
            {
                JSON_WORD: _word_to_json(word),
                JSON_BASE: base.describe(index),
                JSON_COEFF: format_fraction(coeff),
            }
            for (word, index), coeff in ModuleState(state).sorted_terms()
        ]
    }


def _base_index(data: dict[str, Any]) -> int:
    kind = data.get(JSON_KIND)
    if kind == KIND_TRIVIAL:
        return 0
    if kind == KIND_VERMA:
        return int(data["b_power"])
    if kind == KIND_INTERMEDIATE:
        return int(data["n"])
    raise ValueError(f"unknown base kind {kind!r}")


def state_from_json(data: dict[str, Any]) -> ModuleState:
    return ModuleState(
        ((_word_from_json(term[JSON_WORD]), _base_index(term[JSON_BASE])), parse_rational(term[JSON_COEFF]))
        for term in data.get(JSON_TERMS, [])
    )


def _oscillators_to_json(monomial: tuple[Oscillator, ...]) -> list[list[Any]]:
    return [[osc.field, osc.mode] for osc in monomial]


def fock_state_to_json(state: TensorFockState) -> dict[str, Any]:
    terms = sorted(state.items(), key=lambda item: repr(item[0]))
    return {
        JSON_TERMS: [
            {
                "weyl": _oscillators_to_json(weyl),
                "heisenberg": _oscillators_to_json(heis),
                JSON_COEFF: format_fraction(coeff),
            }
            for (weyl, heis), coeff in terms
        ]
    }


def report_to_json(report: SingularReport, base: BaseModule) -> dict[str, Any]:
    dweight: Optional[str] = None
    if report.component.dweight is not None:
        dweight = format_fraction(report.component.dweight)
    return {
        "component": {"height": report.component.height, "dweight": dweight},
        "kernel": [state_to_json(state, base) for state in report.kernel],
        "matched": list(report.matched),
    }


def dumps(document: dict[str, Any]) -> str:
    """Serialize one output document with sorted keys."""
    return json.dumps(document, sort_keys=True, separators=(",", ":"))
