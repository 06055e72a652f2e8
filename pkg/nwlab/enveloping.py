"""PBW normal forms in the universal enveloping algebra of the affine algebra.

Monomials are tuples of loop generators sorted by ascending mode and then
by the tag order d < c < a < b. Any word is brought to that order by
adjacent transpositions, each of which leaves behind the bracket of the
swapped pair with k replaced by the level.
"""
# enveloping.py

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .algebra import A, B, C, D, GeneratorTag, LieElement, LoopGenerator, generator_bracket
from .combination import Combination, Scalar, as_fraction, format_fraction
from .const import GENERATOR_ORDER, MONOMIAL_CACHE_SIZE, NORMAL_FORM_CACHE_SIZE
from .exceptions import LevelMismatch, ZeroLevel

_LOGGER = logging.getLogger(__name__)

PBWMonomial = tuple[LoopGenerator, ...]


class Schedule(Enum):
    """Which out-of-order adjacent pair is swapped first."""

    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


def monomial_key(monomial: PBWMonomial) -> tuple[tuple[int, int], ...]:
    """Sort key giving a deterministic order on monomials."""
    return tuple(gen.sort_key for gen in monomial)


def is_canonical(word: Sequence[LoopGenerator]) -> bool:
    return all(word[i].sort_key <= word[i + 1].sort_key for i in range(len(word) - 1))


def height(monomial: Sequence[LoopGenerator]) -> int:
    """Height of a word: minus the sum of its modes."""
    return -sum(gen.mode for gen in monomial)


def _find_inversion(word: PBWMonomial, rightmost: bool) -> Optional[int]:
    positions = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for i in positions:
        if word[i].sort_key > word[i + 1].sort_key:
            return i
    return None


@lru_cache(maxsize=NORMAL_FORM_CACHE_SIZE)
def _normal_form(word: PBWMonomial, level: Fraction, rightmost: bool) -> tuple[tuple[PBWMonomial, Fraction], ...]:
    position = _find_inversion(word, rightmost)
    if position is None:
        return ((word, Fraction(1)),)

    x, y = word[position], word[position + 1]
    prefix, suffix = word[:position], word[position + 2:]
    acc: dict[PBWMonomial, Fraction] = {}

    def absorb(sub_word: PBWMonomial, weight: Fraction) -> None:
        for monomial, coeff in _normal_form(sub_word, level, rightmost):
            acc[monomial] = acc.get(monomial, Fraction(0)) + weight * coeff

    # xy = yx + [x, y]
    absorb(prefix + (y, x) + suffix, Fraction(1))
    commutator = generator_bracket(x, y)
    for gen, coeff in commutator.loop_terms.items():
        absorb(prefix + (gen,) + suffix, coeff)
    if commutator.central and level:
        absorb(prefix + suffix, commutator.central * level)
    return tuple((monomial, coeff) for monomial, coeff in acc.items() if coeff)


@dataclass(frozen=True)
class UEAElement:
    """Element of U(affine H4) at a fixed level, kept in PBW normal form."""

    level: Fraction
    terms: Combination[PBWMonomial] = field(default_factory=Combination)

    def __post_init__(self) -> None:
        object.__setattr__(self, "level", as_fraction(self.level))
        if not isinstance(self.terms, Combination):
            object.__setattr__(self, "terms", Combination(self.terms))

    @classmethod
    def unit(cls, level: Scalar) -> UEAElement:
        return cls(level, Combination.basis(()))

    @classmethod
    def generator(cls, gen: LoopGenerator, level: Scalar) -> UEAElement:
        return cls(level, Combination.basis((gen,)))

    @classmethod
    def from_lie(cls, x: LieElement, level: Scalar) -> UEAElement:
        """Embed a Lie element, specializing k to the level."""
        level = as_fraction(level)
        terms: dict[PBWMonomial, Fraction] = {(gen,): coeff for gen, coeff in x.loop_terms.items()}
        if x.central:
            terms[()] = x.central * level
        return cls(level, Combination(terms))

    @property
    def is_zero(self) -> bool:
        return self.terms.is_zero

    def _check_level(self, other: UEAElement) -> None:
        if self.level != other.level:
            raise LevelMismatch(f"levels {self.level} and {other.level} differ")

    def __add__(self, other: UEAElement) -> UEAElement:
        self._check_level(other)
        return UEAElement(self.level, self.terms + other.terms)

    def __sub__(self, other: UEAElement) -> UEAElement:
        self._check_level(other)
        return UEAElement(self.level, self.terms - other.terms)

    def __neg__(self) -> UEAElement:
        return UEAElement(self.level, -self.terms)

    def __mul__(self, other: UEAElement | Scalar) -> UEAElement:
        if isinstance(other, UEAElement):
            return multiply(self, other)
        return UEAElement(self.level, self.terms * as_fraction(other))

    def __rmul__(self, scalar: Scalar) -> UEAElement:
        return UEAElement(self.level, self.terms * as_fraction(scalar))

    def commutator(self, other: UEAElement) -> UEAElement:
        return multiply(self, other) - multiply(other, self)

    def sorted_terms(self) -> list[tuple[PBWMonomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), monomial_key(item[0])))

    def __str__(self) -> str:
        parts = []
        for monomial, coeff in self.sorted_terms():
            word = "".join(str(gen) for gen in monomial) or "1"
            parts.append(f"{format_fraction(coeff)}*{word}")
        return " + ".join(parts) or "0"


def straighten(
    word: Iterable[LoopGenerator], level: Scalar, schedule: Schedule = Schedule.LEFTMOST
) -> UEAElement:
    """Canonical-order expansion of the product of the word's factors."""
    level = as_fraction(level)
    terms = _normal_form(tuple(word), level, schedule is Schedule.RIGHTMOST)
    return UEAElement(level, Combination(terms))


def multiply(u: UEAElement, v: UEAElement) -> UEAElement:
    """Product of two elements at the same level, in normal form."""
    u._check_level(v)
    acc: dict[PBWMonomial, Fraction] = {}
    for left, cu in u.terms.items():
        for right, cv in v.terms.items():
            for monomial, coeff in _normal_form(left + right, u.level, False):
                acc[monomial] = acc.get(monomial, Fraction(0)) + cu * cv * coeff
    return UEAElement(u.level, Combination(acc))


@lru_cache(maxsize=MONOMIAL_CACHE_SIZE)
def negative_monomials(ht: int) -> tuple[PBWMonomial, ...]:
    """All canonical monomials in negative modes of the given height."""
    if ht < 0:
        return ()
    tags = [GeneratorTag(symbol) for symbol in GENERATOR_ORDER]
    gens = [LoopGenerator(tag, -j) for j in range(ht, 0, -1) for tag in tags]
    found: list[PBWMonomial] = []

    def extend(start: int, remaining: int, prefix: PBWMonomial) -> None:
        if remaining == 0:
            found.append(prefix)
            return
        for i in range(start, len(gens)):
            if -gens[i].mode <= remaining:
                extend(i, remaining + gens[i].mode, prefix + (gens[i],))

    extend(0, ht, ())
    _LOGGER.debug("Enumerated %d lowering monomials of height %d", len(found), ht)
    return tuple(found)


def clear_caches() -> None:
    """Drop memoized normal forms, lowering monomials and generator brackets."""
    _normal_form.cache_clear()
    negative_monomials.cache_clear()
    generator_bracket.cache_clear()
    _LOGGER.debug("Cleared normal form caches")


def casimir(level: Scalar = 0) -> UEAElement:
    """The Casimir ab + ba + cd + dc of U(H4), in normal form.

    Only degree-zero generators occur, so no central term arises and the
    level only labels the ambient algebra.
    """
    a, b, c, d = (LoopGenerator(tag, 0) for tag in (A, B, C, D))
    total = UEAElement(as_fraction(level))
    for word in ((a, b), (b, a), (c, d), (d, c)):
        total = total + straighten(word, level)
    return total


def modified_casimir(level: Scalar) -> UEAElement:
    """The Casimir minus c^2 / level."""
    level = as_fraction(level)
    if not level:
        raise ZeroLevel("the modified Casimir needs a nonzero level")
    c = LoopGenerator(C, 0)
    return casimir(level) - straighten((c, c), level) * (1 / level)
