"""Base H4-modules and truncated induced modules of the affine algebra.

An induced module is spanned by lowering PBW monomials applied to a basis
vector of the base module. Positive modes annihilate the base layer and
zero modes act through the base. Every object is truncated: lowering
monomials by height, Verma bases by a b-power cap and the intermediate
series by a window. Leaving the truncation raises TruncationOverflow.
"""
# modules.py

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Sequence

from .algebra import A, B, C, D, GeneratorTag, LieElement, LoopGenerator, generator_bracket
from .combination import Combination, Scalar, as_fraction, format_fraction
from .const import (
    ACTION_CACHE_SIZE,
    B_POWER_FACTOR,
    B_POWER_MARGIN,
    DEFAULT_WINDOW,
    KIND_INTERMEDIATE,
    KIND_TRIVIAL,
    KIND_VERMA,
)
from .enveloping import PBWMonomial, UEAElement, _normal_form, height, monomial_key, negative_monomials
from .exceptions import InvalidTruncation, LevelMismatch, ParameterMismatch, TruncationOverflow

_LOGGER = logging.getLogger(__name__)

BasisKey = tuple[PBWMonomial, int]
BaseAction = tuple[tuple[int, Fraction], ...]


def _integral(value: Fraction) -> Optional[int]:
    return value.numerator if value.denominator == 1 else None


class BaseModule(ABC):
    """A module for H4 whose basis vectors are labelled by integers."""

    kind: str

    @property
    @abstractmethod
    def c_value(self) -> Fraction:
        """Scalar by which the central element c acts."""

    @abstractmethod
    def weight(self, index: int) -> Fraction:
        """d-eigenvalue of a basis vector."""

    @abstractmethod
    def act(self, tag: GeneratorTag, index: int) -> BaseAction:
        """Action of a basis element of H4 on a basis vector."""

    @abstractmethod
    def indices(self) -> Sequence[int]:
        """All basis labels inside the truncation."""

    @abstractmethod
    def indices_for_weight(self, weight: Fraction) -> tuple[int, ...]:
        """Basis labels of the given d-weight."""

    @abstractmethod
    def describe(self, index: int) -> dict[str, Any]:
        """JSON description of a basis vector."""

    highest_index: int = 0


@dataclass(frozen=True)
class TrivialModule(BaseModule):
    """One-dimensional module where only d acts, by the scalar d."""

    d: Fraction = Fraction(0)
    kind = KIND_TRIVIAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", as_fraction(self.d))

    @property
    def c_value(self) -> Fraction:
        return Fraction(0)

    def weight(self, index: int) -> Fraction:
        return self.d

    def act(self, tag: GeneratorTag, index: int) -> BaseAction:
        if tag is D and self.d:
            return ((0, self.d),)
        return ()

    def indices(self) -> Sequence[int]:
        return (0,)

    def indices_for_weight(self, weight: Fraction) -> tuple[int, ...]:
        return (0,) if weight == self.d else ()

    def describe(self, index: int) -> dict[str, Any]:
        return {"kind": self.kind}


@dataclass(frozen=True)
class VermaModule(BaseModule):
    """Verma module of H4 with basis b^k v, k >= 0.

    a v = 0, c v = c v, d v = d v. Without a cap the b-powers are
    unbounded; an induced module always fixes one.
    """

    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    b_power_cap: Optional[int] = None
    kind = KIND_VERMA

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", as_fraction(self.c))
        object.__setattr__(self, "d", as_fraction(self.d))
        if self.b_power_cap is not None and self.b_power_cap < 0:
            raise InvalidTruncation("the b-power cap must be nonnegative")

    @property
    def c_value(self) -> Fraction:
        return self.c

    def weight(self, index: int) -> Fraction:
        return self.d - index

    def act(self, tag: GeneratorTag, index: int) -> BaseAction:
        if tag is D:
            value = self.d - index
            return ((index, value),) if value else ()
        if tag is C:
            return ((index, self.c),) if self.c else ()
        if tag is B:
            if self.b_power_cap is not None and index + 1 > self.b_power_cap:
                raise TruncationOverflow(f"b-power {index + 1} exceeds cap {self.b_power_cap}")
            return ((index + 1, Fraction(1)),)
        # a b^k v = k c b^(k-1) v
        if index == 0 or not self.c:
            return ()
        return ((index - 1, index * self.c),)

    def indices(self) -> Sequence[int]:
        if self.b_power_cap is None:
            raise InvalidTruncation("an uncapped Verma module has no finite basis")
        return range(self.b_power_cap + 1)

    def indices_for_weight(self, weight: Fraction) -> tuple[int, ...]:
        power = _integral(self.d - weight)
        if power is None or power < 0:
            return ()
        if self.b_power_cap is not None and power > self.b_power_cap:
            raise TruncationOverflow(f"weight {weight} needs b-power {power} beyond cap {self.b_power_cap}")
        return (power,)

    def describe(self, index: int) -> dict[str, Any]:
        return {"kind": self.kind, "b_power": index}


@dataclass(frozen=True)
class IntermediateModule(BaseModule):
    """Intermediate series module with basis v_n, |n| <= window.

    d v_n = (alpha + n) v_n, c v_n = beta v_n, a v_n = -beta v_(n+1),
    b v_n = (alpha + gamma + n) v_(n-1).
    """

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)
    window: int = DEFAULT_WINDOW
    kind = KIND_INTERMEDIATE

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.window < 0:
            raise InvalidTruncation("the window must be nonnegative")

    @property
    def c_value(self) -> Fraction:
        return self.beta

    def weight(self, index: int) -> Fraction:
        return self.alpha + index

    def _shift(self, index: int, value: Fraction) -> BaseAction:
        if not value:
            return ()
        if abs(index) > self.window:
            raise TruncationOverflow(f"v_{index} lies outside the window {self.window}")
        return ((index, value),)

    def act(self, tag: GeneratorTag, index: int) -> BaseAction:
        if tag is D:
            return self._shift(index, self.alpha + index)
        if tag is C:
            return self._shift(index, self.beta)
        if tag is A:
            return self._shift(index + 1, -self.beta)
        return self._shift(index - 1, self.alpha + self.gamma + index)

    def indices(self) -> Sequence[int]:
        return range(-self.window, self.window + 1)

    def indices_for_weight(self, weight: Fraction) -> tuple[int, ...]:
        index = _integral(weight - self.alpha)
        if index is None:
            return ()
        if abs(index) > self.window:
            raise TruncationOverflow(f"weight {weight} needs v_{index} outside the window {self.window}")
        return (index,)

    def describe(self, index: int) -> dict[str, Any]:
        return {"kind": self.kind, "n": index}


def base_act(tag: GeneratorTag, index: int, base: BaseModule) -> dict[int, Fraction]:
    """Action of x in H4 on a basis vector of a base module."""
    return dict(base.act(tag, index))


class ModuleState(Combination[BasisKey]):
    """Vector of a truncated induced module."""

    __slots__ = ()

    def sorted_terms(self) -> list[tuple[BasisKey, Fraction]]:
        return sorted(self.items(), key=lambda item: (len(item[0][0]), monomial_key(item[0][0]), item[0][1]))

    def __str__(self) -> str:
        parts = []
        for (monomial, index), coeff in self.sorted_terms():
            word = "".join(str(gen) for gen in monomial)
            parts.append(f"{format_fraction(coeff)}*{word}v[{index}]")
        return " + ".join(parts) or "0"


class InducedModule:
    """Truncated induced module U(affine H4) tensor M over the nonnegative part.

    Positive modes annihilate the base layer, zero modes act through the
    base module and k acts by the level. Lowering monomials are kept up to
    height `depth`.
    """

    def __init__(self, level: Scalar, base: BaseModule, depth: int) -> None:
        if depth < 0:
            raise InvalidTruncation("the depth must be nonnegative")
        if isinstance(base, VermaModule) and base.b_power_cap is None:
            base = replace(base, b_power_cap=B_POWER_FACTOR * depth + B_POWER_MARGIN)
        if isinstance(base, IntermediateModule) and base.window < 2 * depth:
            raise InvalidTruncation(f"window {base.window} must be at least twice the depth {depth}")
        self.level: Fraction = as_fraction(level)
        self.base: BaseModule = base
        self.depth: int = depth
        self._cache: dict[tuple[LoopGenerator, BasisKey], dict[BasisKey, Fraction]] = {}
        _LOGGER.debug("Created induced module over %s at level %s, depth %d", base, self.level, depth)

    def __repr__(self) -> str:
        return f"InducedModule(level={self.level}, base={self.base!r}, depth={self.depth})"

    # --- basis bookkeeping ---

    def degree(self, key: BasisKey) -> int:
        """Height of a basis vector."""
        return height(key[0])

    def key_weight(self, key: BasisKey) -> Fraction:
        """d(0)-eigenvalue of a basis vector."""
        monomial, index = key
        shift = sum(1 for gen in monomial if gen.tag is A) - sum(1 for gen in monomial if gen.tag is B)
        return self.base.weight(index) + shift

    def highest_vector(self, index: Optional[int] = None) -> ModuleState:
        return ModuleState.basis(((), self.base.highest_index if index is None else index))

    def component_basis(self, ht: int, weight: Optional[Scalar] = None) -> list[BasisKey]:
        """Basis of the height component, optionally restricted to a d-weight."""
        keys: list[BasisKey] = []
        target = None if weight is None else as_fraction(weight)
        for monomial in negative_monomials(ht):
            if target is None:
                keys.extend((monomial, index) for index in self.base.indices())
                continue
            shift = sum(1 for gen in monomial if gen.tag is A) - sum(1 for gen in monomial if gen.tag is B)
            keys.extend((monomial, index) for index in self.base.indices_for_weight(target - shift))
        return keys

    def basis_up_to(self, max_height: int, indices: Optional[Iterable[int]] = None) -> list[BasisKey]:
        """Basis vectors of height at most `max_height` over the given base labels."""
        labels = tuple(self.base.indices() if indices is None else indices)
        return [(monomial, index) for ht in range(max_height + 1)
                for monomial in negative_monomials(ht) for index in labels]

    def graded_dim(self, ht: int) -> int:
        """Dimension of the height component.

        Only the trivial base gives finite height components. Over a Verma
        base or the intermediate series the count would only measure the
        truncation, so use bigraded_dim there.
        """
        if not isinstance(self.base, TrivialModule):
            raise ParameterMismatch(f"height components over a {self.base.kind} base are infinite; fix a d-weight")
        return len(self.component_basis(ht))

    def bigraded_dim(self, ht: int, weight: Scalar) -> int:
        return len(self.component_basis(ht, weight))

    # --- action ---

    def act_basis(self, gen: LoopGenerator, key: BasisKey) -> Mapping[BasisKey, Fraction]:
        """Action of a loop generator on a basis vector; the result must not be mutated."""
        if gen.mode < 0 and self.degree(key) - gen.mode > self.depth:
            raise TruncationOverflow(
                f"{gen} on a height-{self.degree(key)} vector exceeds depth {self.depth}"
            )
        cached = self._cache.get((gen, key))
        if cached is None:
            cached = self._compute(gen, key)
            if len(self._cache) >= ACTION_CACHE_SIZE:
                self.clear_cache()
            self._cache[(gen, key)] = cached
        return cached

    def clear_cache(self) -> None:
        """Forget memoized actions on basis vectors."""
        self._cache.clear()

    def _compute(self, gen: LoopGenerator, key: BasisKey) -> dict[BasisKey, Fraction]:
        monomial, index = key
        result: dict[BasisKey, Fraction] = {}

        def add(target: BasisKey, coeff: Fraction) -> None:
            result[target] = result.get(target, Fraction(0)) + coeff

        if gen.mode < 0:
            for product, coeff in _normal_form((gen,) + monomial, self.level, False):
                add((product, index), coeff)
        elif not monomial:
            if gen.mode == 0:
                for target, coeff in self.base.act(gen.tag, index):
                    add(((), target), coeff)
        else:
            # x(n) y w = y x(n) w + [x(n), y] w
            head, rest = monomial[0], (monomial[1:], index)
            for inner, coeff in self.act_basis(gen, rest).items():
                for target, coeff2 in self.act_basis(head, inner).items():
                    add(target, coeff * coeff2)
            commutator = generator_bracket(gen, head)
            for term, coeff in commutator.loop_terms.items():
                for target, coeff2 in self.act_basis(term, rest).items():
                    add(target, coeff * coeff2)
            if commutator.central and self.level:
                add(rest, commutator.central * self.level)
        return {target: coeff for target, coeff in result.items() if coeff}

    def act(self, gen: LoopGenerator, state: ModuleState) -> ModuleState:
        acc: dict[BasisKey, Fraction] = {}
        for key, coeff in state.items():
            for target, coeff2 in self.act_basis(gen, key).items():
                acc[target] = acc.get(target, Fraction(0)) + coeff * coeff2
        return ModuleState(acc)

    def act_lie(self, x: LieElement, state: ModuleState) -> ModuleState:
        """Action of a Lie element, with k acting by the level."""
        total = state * (x.central * self.level)
        for gen, coeff in x.loop_terms.items():
            total = total + self.act(gen, state) * coeff
        return total

    def act_element(self, u: UEAElement, state: ModuleState) -> ModuleState:
        """Action of an enveloping algebra element; factors apply right to left."""
        if u.level != self.level:
            raise LevelMismatch(f"element level {u.level} differs from module level {self.level}")
        total = ModuleState()
        for monomial, coeff in u.terms.items():
            total = total + self.apply_word(monomial, state) * coeff
        return total

    def apply_word(self, word: Sequence[LoopGenerator], state: Optional[ModuleState] = None) -> ModuleState:
        """Apply a word of generators, rightmost first, to a state (default the highest vector)."""
        current = self.highest_vector() if state is None else state
        for gen in reversed(word):
            if current.is_zero:
                break
            current = self.act(gen, current)
        return current

    def weight_of(self, state: ModuleState) -> Optional[tuple[Fraction, Fraction]]:
        """The (c(0), d(0)) eigenvalues when the state is a simultaneous eigenvector."""
        if state.is_zero:
            return None
        eigenvalues = []
        for tag in (C, D):
            image = self.act(LoopGenerator(tag, 0), state)
            key, coeff = next(iter(state.items()))
            value = image.coeff(key) / coeff
            if image != state * value:
                return None
            eigenvalues.append(value)
        return eigenvalues[0], eigenvalues[1]


def vacuum_module(level: Scalar, depth: int) -> InducedModule:
    """The vacuum module V(level, 0)."""
    return InducedModule(level, TrivialModule(Fraction(0)), depth)
