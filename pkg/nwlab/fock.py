"""Fock modules of the beta-gamma Weyl algebra and the rank-two Heisenberg algebra.

Creation operators commute, so a Fock basis vector is a sorted tuple of
creation modes. Annihilators act as derivations:

    beta(n), n >= 0   ->  d / d gamma(-n)
    gamma(n), n > 0   -> -d / d beta(-n)
    p(n), n > 0       ->  n d / d q(-n)
    q(n), n > 0       ->  n d / d p(-n)

while p(0) and q(0) act by the scalars (p, alpha) and (q, alpha).
"""
# fock.py

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .combination import Combination, Scalar, as_fraction
from .const import DEFAULT_DEPTH_LIMIT, DEFAULT_GAMMA_ZERO_CAP
from .exceptions import TruncationOverflow

_LOGGER = logging.getLogger(__name__)

BETA, GAMMA, P, Q = "beta", "gamma", "p", "q"
WEYL_FIELDS = (BETA, GAMMA)
HEISENBERG_FIELDS = (P, Q)
_FIELD_RANK = {BETA: 0, GAMMA: 1, P: 2, Q: 3}


class Oscillator(NamedTuple):
    """A mode of one of the free fields."""

    field: str
    mode: int

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.mode, _FIELD_RANK[self.field])

    def is_creation(self) -> bool:
        if self.field == GAMMA:
            return self.mode <= 0
        return self.mode < 0

    def __str__(self) -> str:
        return f"{self.field}({self.mode})"


FockMonomial = tuple[Oscillator, ...]
TensorKey = tuple[FockMonomial, FockMonomial]


class WeylFockState(Combination[FockMonomial]):
    """Vector of the Weyl Fock module."""

    __slots__ = ()


class HeisenbergFockState(Combination[FockMonomial]):
    """Vector of the Heisenberg Fock module M(1, alpha)."""

    __slots__ = ()


class TensorFockState(Combination[TensorKey]):
    """Vector of the tensor product of the two Fock modules."""

    __slots__ = ()


def monomial_degree(monomial: FockMonomial) -> int:
    return -sum(osc.mode for osc in monomial)


def gamma_zero_power(monomial: FockMonomial) -> int:
    return sum(1 for osc in monomial if osc.field == GAMMA and osc.mode == 0)


def _insert(monomial: FockMonomial, osc: Oscillator) -> FockMonomial:
    return tuple(sorted(monomial + (osc,), key=lambda o: o.sort_key))


def _differentiate(monomial: FockMonomial, osc: Oscillator, scale: Fraction) -> dict[FockMonomial, Fraction]:
    count = monomial.count(osc)
    if not count:
        return {}
    position = monomial.index(osc)
    return {monomial[:position] + monomial[position + 1:]: scale * count}


def weyl_raw(osc: Oscillator, monomial: FockMonomial) -> dict[FockMonomial, Fraction]:
    """Untruncated action of a beta or gamma mode on a Weyl basis vector."""
    if osc.is_creation():
        return {_insert(monomial, osc): Fraction(1)}
    if osc.field == BETA:
        return _differentiate(monomial, Oscillator(GAMMA, -osc.mode), Fraction(1))
    return _differentiate(monomial, Oscillator(BETA, -osc.mode), Fraction(-1))


def heisenberg_raw(
    osc: Oscillator, monomial: FockMonomial, alpha_p: Fraction, alpha_q: Fraction
) -> dict[FockMonomial, Fraction]:
    """Untruncated action of a p or q mode on a Heisenberg basis vector."""
    if osc.is_creation():
        return {_insert(monomial, osc): Fraction(1)}
    if osc.mode == 0:
        value = alpha_p if osc.field == P else alpha_q
        return {monomial: value} if value else {}
    partner = Q if osc.field == P else P
    return _differentiate(monomial, Oscillator(partner, -osc.mode), Fraction(osc.mode))


class WeylFockSpace:
    """Truncated Fock module of the Weyl algebra; beta(n)1 = 0 for n >= 0, gamma(n)1 = 0 for n > 0."""

    def __init__(self, depth: int, gamma_zero_cap: int) -> None:
        self.depth = depth
        self.gamma_zero_cap = gamma_zero_cap

    def vacuum(self) -> WeylFockState:
        return WeylFockState.basis(())

    def act(self, osc: Oscillator, state: WeylFockState) -> WeylFockState:
        if osc.field not in WEYL_FIELDS:
            raise ValueError(f"{osc} is not a Weyl oscillator")
        acc: dict[FockMonomial, Fraction] = {}
        for monomial, coeff in state.items():
            for target, coeff2 in weyl_raw(osc, monomial).items():
                if monomial_degree(target) > self.depth or gamma_zero_power(target) > self.gamma_zero_cap:
                    raise TruncationOverflow(f"{osc} leaves the truncated Weyl Fock module")
                acc[target] = acc.get(target, Fraction(0)) + coeff * coeff2
        return WeylFockState(acc)


class HeisenbergFockSpace:
    """Truncated Fock module M(1, alpha) with [p(m), q(n)] = m delta_{m+n,0}."""

    def __init__(self, alpha_p: Scalar, alpha_q: Scalar, depth: int) -> None:
        self.alpha_p = as_fraction(alpha_p)
        self.alpha_q = as_fraction(alpha_q)
        self.depth = depth

    def vacuum(self) -> HeisenbergFockState:
        return HeisenbergFockState.basis(())

    def act(self, osc: Oscillator, state: HeisenbergFockState) -> HeisenbergFockState:
        if osc.field not in HEISENBERG_FIELDS:
            raise ValueError(f"{osc} is not a Heisenberg oscillator")
        acc: dict[FockMonomial, Fraction] = {}
        for monomial, coeff in state.items():
            for target, coeff2 in heisenberg_raw(osc, monomial, self.alpha_p, self.alpha_q).items():
                if monomial_degree(target) > self.depth:
                    raise TruncationOverflow(f"{osc} leaves the truncated Heisenberg Fock module")
                acc[target] = acc.get(target, Fraction(0)) + coeff * coeff2
        return HeisenbergFockState(acc)


def weyl_act(osc: Oscillator, state: WeylFockState, space: Optional[WeylFockSpace] = None) -> WeylFockState:
    """Action of a beta or gamma mode."""
    return (space or WeylFockSpace(DEFAULT_DEPTH_LIMIT, DEFAULT_GAMMA_ZERO_CAP)).act(osc, state)


def heis_act(osc: Oscillator, state: HeisenbergFockState, space: HeisenbergFockSpace) -> HeisenbergFockState:
    """Action of a p or q mode."""
    return space.act(osc, state)


def split_monomial(monomial: Iterable[Oscillator]) -> TensorKey:
    """Separate a mixed monomial into its Weyl and Heisenberg parts."""
    weyl = tuple(sorted((o for o in monomial if o.field in WEYL_FIELDS), key=lambda o: o.sort_key))
    heis = tuple(sorted((o for o in monomial if o.field in HEISENBERG_FIELDS), key=lambda o: o.sort_key))
    return weyl, heis
