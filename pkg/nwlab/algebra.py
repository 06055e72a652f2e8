"""The Nappi-Witten Lie algebra H4 and its affinization.

H4 has basis a, b, c, d with [a, b] = c, [d, a] = a, [d, b] = -b and c
central. The invariant form pairs a with b and c with d. The loop algebra
carries the bracket

    [x(m), y(n)] = [x, y](m + n) + m (x, y) delta_{m+n,0} k

with k central. The level is not fixed here; k stays a formal symbol
until a representation specializes it.
"""
# algebra.py

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .combination import Combination, Scalar, as_fraction, format_fraction
from .const import BRACKET_CACHE_SIZE, GENERATOR_ORDER
from .exceptions import ZeroLevel

_LOGGER = logging.getLogger(__name__)


class GeneratorTag(Enum):
    """Basis element of H4."""

    D = "d"
    C = "c"
    A = "a"
    B = "b"

    @property
    def rank(self) -> int:
        """Position in the canonical order d < c < a < b."""
        return _RANK[self]

    @classmethod
    def parse(cls, text: str) -> GeneratorTag:
        try:
            return cls(text.strip().lower())
        except ValueError as err:
            raise ValueError(f"unknown generator {text!r}, expected one of a, b, c, d") from err

    def __str__(self) -> str:
        return self.value


_RANK: dict[GeneratorTag, int] = {GeneratorTag(symbol): i for i, symbol in enumerate(GENERATOR_ORDER)}

A, B, C, D = GeneratorTag.A, GeneratorTag.B, GeneratorTag.C, GeneratorTag.D

# Nonzero brackets of H4 on basis elements.
_STRUCTURE: dict[tuple[GeneratorTag, GeneratorTag], tuple[tuple[GeneratorTag, int], ...]] = {
    (A, B): ((C, 1),),
    (B, A): ((C, -1),),
    (D, A): ((A, 1),),
    (A, D): ((A, -1),),
    (D, B): ((B, -1),),
    (B, D): ((B, 1),),
}

_FORM: dict[tuple[GeneratorTag, GeneratorTag], int] = {
    (A, B): 1,
    (B, A): 1,
    (C, D): 1,
    (D, C): 1,
}


class LoopGenerator(NamedTuple):
    """The loop generator x(n) = x tensor t^n."""

    tag: GeneratorTag
    mode: int

    @property
    def sort_key(self) -> tuple[int, int]:
        """Canonical PBW key: ascending mode, then tag order."""
        return (self.mode, _RANK[self.tag])

    @property
    def degree(self) -> int:
        return self.mode

    @classmethod
    def parse(cls, text: str) -> LoopGenerator:
        """Parse a literal such as `a:-1`."""
        symbol, sep, mode = text.strip().partition(":")
        if not sep:
            raise ValueError(f"generator literal {text!r} must look like 'a:-1'")
        try:
            return cls(GeneratorTag.parse(symbol), int(mode))
        except ValueError as err:
            raise ValueError(f"invalid generator literal {text!r}: {err}") from err

    def __str__(self) -> str:
        return f"{self.tag.value}({self.mode})"


def form(x: GeneratorTag, y: GeneratorTag) -> Fraction:
    """The invariant symmetric form on H4."""
    return Fraction(_FORM.get((x, y), 0))


def h4_bracket(x: GeneratorTag, y: GeneratorTag) -> tuple[tuple[GeneratorTag, int], ...]:
    """Bracket of two H4 basis elements as (tag, coefficient) pairs."""
    return _STRUCTURE.get((x, y), ())


@dataclass(frozen=True)
class LieElement:
    """Finite rational combination of loop generators plus a multiple of k."""

    loop_terms: Combination[LoopGenerator] = field(default_factory=Combination)
    central: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.loop_terms, Combination):
            object.__setattr__(self, "loop_terms", Combination(self.loop_terms))
        object.__setattr__(self, "central", as_fraction(self.central))

    @classmethod
    def generator(cls, tag: GeneratorTag | str, mode: int, coeff: Scalar = 1) -> LieElement:
        if isinstance(tag, str):
            tag = GeneratorTag.parse(tag)
        return cls(Combination({LoopGenerator(tag, mode): coeff}))

    @classmethod
    def k(cls, coeff: Scalar = 1) -> LieElement:
        return cls(central=coeff)

    @property
    def is_zero(self) -> bool:
        return self.loop_terms.is_zero and not self.central

    def __add__(self, other: LieElement) -> LieElement:
        return LieElement(self.loop_terms + other.loop_terms, self.central + other.central)

    def __sub__(self, other: LieElement) -> LieElement:
        return LieElement(self.loop_terms - other.loop_terms, self.central - other.central)

    def __neg__(self) -> LieElement:
        return LieElement(-self.loop_terms, -self.central)

    def __mul__(self, scalar: Scalar) -> LieElement:
        scalar = as_fraction(scalar)
        return LieElement(self.loop_terms * scalar, self.central * scalar)

    __rmul__ = __mul__

    def degree(self) -> Optional[int]:
        """Standard degree when homogeneous, otherwise None.

        k has degree 0 and the zero element has no degree.
        """
        degrees = {gen.mode for gen in self.loop_terms}
        if self.central:
            degrees.add(0)
        return degrees.pop() if len(degrees) == 1 else None

    def __str__(self) -> str:
        parts = [
            f"{format_fraction(c)}*{gen}"
            for gen, c in sorted(self.loop_terms.items(), key=lambda item: item[0].sort_key)
        ]
        if self.central:
            parts.append(f"{format_fraction(self.central)}*k")
        return " + ".join(parts) or "0"


@lru_cache(maxsize=BRACKET_CACHE_SIZE)
def generator_bracket(x: LoopGenerator, y: LoopGenerator) -> LieElement:
    """Bracket of two loop generators."""
    loop = {LoopGenerator(tag, x.mode + y.mode): coeff for tag, coeff in h4_bracket(x.tag, y.tag)}
    central = Fraction(0)
    if x.mode + y.mode == 0:
        central = x.mode * form(x.tag, y.tag)
    return LieElement(Combination(loop), central)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Bilinear bracket on the affine algebra; k is central."""
    loop: dict[LoopGenerator, Fraction] = {}
    central = Fraction(0)
    for gx, cx in x.loop_terms.items():
        for gy, cy in y.loop_terms.items():
            term = generator_bracket(gx, gy)
            for gen, coeff in term.loop_terms.items():
                loop[gen] = loop.get(gen, Fraction(0)) + cx * cy * coeff
            central += cx * cy * term.central
    return LieElement(Combination(loop), central)


def casimir_scalar(level: Scalar, c: Scalar, d: Scalar) -> Fraction:
    """Value of the modified Casimir on a Verma highest-weight vector.

    Equals c(2d + 1) - c^2 / level.
    """
    level, c, d = as_fraction(level), as_fraction(c), as_fraction(d)
    if not level:
        raise ZeroLevel("the modified Casimir needs a nonzero level")
    return c * (2 * d + 1) - c * c / level
