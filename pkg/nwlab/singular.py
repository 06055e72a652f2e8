"""Singular vectors of truncated induced modules.

A component of an induced module is either a height component or a
(height, d-weight) component. Its singular vectors are the kernel of the
stacked matrices of all raising operators on that component. The closed
forms for the generalized Verma modules come from solving the linear
coefficient systems over partitions directly.
"""
# singular.py

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterable, Optional, Sequence

from .algebra import A, B, C, D, GeneratorTag, LoopGenerator
from .combination import Scalar, as_fraction
from .const import CASE_LEVEL_ZERO, CASE_MINUS, CASE_PLUS, GENERATOR_ORDER
from .enveloping import UEAElement, straighten
from .exceptions import (
    DegenerateSystem,
    ParameterMismatch,
    TruncationOverflow,
    TruncationTooShallow,
    VerificationFailed,
    ZeroLevel,
)
from .linalg import kernel, rank
from .modules import BasisKey, InducedModule, IntermediateModule, ModuleState
from .partitions import Partition, partitions_of, partitions_up_to

_LOGGER = logging.getLogger(__name__)

_TAGS = tuple(GeneratorTag(symbol) for symbol in GENERATOR_ORDER)


class Grading(Enum):
    """Which raising subalgebra defines singularity."""

    STANDARD = "standard"
    NEW_TRIANGULAR = "new"


class SingularCase(Enum):
    """Closed-form families for generalized Verma modules."""

    PLUS = CASE_PLUS
    MINUS = CASE_MINUS


class LoopCase(Enum):
    """Generator families for induced intermediate series modules."""

    PLUS = CASE_PLUS
    MINUS = CASE_MINUS
    LEVEL_ZERO = CASE_LEVEL_ZERO


@dataclass(frozen=True)
class RaisingSet:
    """All x(n) with 1 <= n <= max_mode, plus a(0) for the new triangular decomposition."""

    grading: Grading = Grading.STANDARD
    max_mode: int = 1

    def operators(self) -> tuple[LoopGenerator, ...]:
        ops = [LoopGenerator(tag, n) for n in range(1, self.max_mode + 1) for tag in _TAGS]
        if self.grading is Grading.NEW_TRIANGULAR:
            ops.insert(0, LoopGenerator(A, 0))
        return tuple(ops)


@dataclass(frozen=True)
class Component:
    """A height component, optionally cut down to one d-weight."""

    height: int
    dweight: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.dweight is not None:
            object.__setattr__(self, "dweight", as_fraction(self.dweight))


@dataclass
class SingularReport:
    """Kernel of the raising operators on one component."""

    component: Component
    kernel: list[ModuleState] = field(default_factory=list)
    matched: list[str] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def verify_singular(state: ModuleState, module: InducedModule, raising: RaisingSet) -> bool:
    """True iff every raising operator annihilates the state."""
    return all(module.act(op, state).is_zero for op in raising.operators())


def in_span(state: ModuleState, spanning: Sequence[ModuleState]) -> bool:
    """Whether a state lies in the linear span of the given states."""
    if state.is_zero:
        return True
    keys = sorted({key for s in (*spanning, state) for key in s}, key=repr)
    rows = [[s.coeff(key) for key in keys] for s in spanning]
    return rank(rows, len(keys)) == rank(rows + [[state.coeff(key) for key in keys]], len(keys))


def find_singular(module: InducedModule, component: Component, raising: RaisingSet) -> SingularReport:
    """Every state of the component annihilated by the raising operators."""
    if raising.max_mode < component.height:
        raise TruncationTooShallow(
            f"raising modes up to {raising.max_mode} do not reach height {component.height}"
        )
    basis = module.component_basis(component.height, component.dweight)
    _LOGGER.debug("Solving component %s with %d basis vectors", component, len(basis))
    if not basis:
        return SingularReport(component)

    row_of: dict[tuple[LoopGenerator, BasisKey], int] = {}
    entries: list[dict[int, Fraction]] = []
    for op in raising.operators():
        for column, key in enumerate(basis):
            for target, coeff in module.act_basis(op, key).items():
                row = row_of.setdefault((op, target), len(row_of))
                if row == len(entries):
                    entries.append({})
                entries[row][column] = coeff
    rows = [[entry.get(j, Fraction(0)) for j in range(len(basis))] for entry in entries]

    states = [
        ModuleState({basis[j]: x for j, x in enumerate(vector) if x})
        for vector in kernel(rows, len(basis))
    ]
    for state in states:
        if not verify_singular(state, module, raising):
            _LOGGER.error("Kernel vector %s failed the annihilation re-check", state)
            raise VerificationFailed(f"kernel vector {state} is not annihilated")
    _LOGGER.debug("Component %s has %d singular vectors", component, len(states))
    return SingularReport(component, states)


# --- closed forms ---

Unknown = tuple[Hashable, ...]


def _solve_system(unknowns: list[Unknown], equations: Iterable[dict[Unknown, Fraction]]) -> dict[Unknown, Fraction]:
    index = {unknown: i for i, unknown in enumerate(unknowns)}
    rows = []
    for equation in equations:
        row = [Fraction(0)] * len(unknowns)
        for unknown, coeff in equation.items():
            row[index[unknown]] += coeff
        rows.append(row)
    solutions = kernel(rows, len(unknowns))
    if len(solutions) != 1:
        raise DegenerateSystem(f"coefficient system has a {len(solutions)}-dimensional solution space")
    vector = solutions[0]
    lead = next(x for x in vector if x)
    return {unknown: x / lead for unknown, x in zip(unknowns, vector) if x}


def _ordered(unknowns: Iterable[Unknown]) -> list[Unknown]:
    return list(dict.fromkeys(unknowns))


def plus_coefficients(m: int, level: Scalar, c: Scalar) -> dict[Unknown, Fraction]:
    """Solve for a_lambda and b_(lambda minus part, part) over partitions of m.

    Unknowns are keyed ("a", lambda) and ("b", mu, part).
    """
    level, c = as_fraction(level), as_fraction(c)
    shapes = partitions_of(m)
    unknowns = _ordered(
        [("a", lam) for lam in shapes]
        + [("b", lam.remove(p), p) for lam in shapes for p in lam.distinct_parts()]
    )
    equations: list[dict[Unknown, Fraction]] = []
    for lam in shapes:
        balance: dict[Unknown, Fraction] = {("a", lam): c}
        for p in lam.distinct_parts():
            rest = lam.remove(p)
            equations.append({("a", lam): lam.multiplicity(p) * p * level, ("b", rest, p): Fraction(-1)})
            balance[("b", rest, p)] = balance.get(("b", rest, p), Fraction(0)) + 1
            chain: dict[Unknown, Fraction] = {("b", rest, p): c + p * level}
            for s in rest.distinct_parts():
                key = ("b", rest.remove(s), p + s)
                chain[key] = chain.get(key, Fraction(0)) + 1
            equations.append(chain)
        equations.append(balance)
    return _solve_system(unknowns, equations)


def minus_coefficients(m: int, level: Scalar, c: Scalar) -> dict[Unknown, Fraction]:
    """Solve for c_(lambda minus part, part) over partitions of m.

    Unknowns are keyed ("c", mu, part).
    """
    level, c = as_fraction(level), as_fraction(c)
    shapes = partitions_of(m)
    unknowns = _ordered([("c", lam.remove(p), p) for lam in shapes for p in lam.distinct_parts()])
    equations: list[dict[Unknown, Fraction]] = []
    for lam in shapes:
        parts = lam.distinct_parts()
        for pi, pj in product(parts, parts):
            if pi == pj:
                continue
            equation: dict[Unknown, Fraction] = {("c", lam.remove(pj), pj): lam.multiplicity(pi) * pi * level}
            key = ("c", lam.remove(pi).remove(pj), pi + pj)
            equation[key] = equation.get(key, Fraction(0)) + 1
            equations.append(equation)
        for p in parts:
            rest = lam.remove(p)
            chain: dict[Unknown, Fraction] = {("c", rest, p): -c + p * level}
            for s in rest.distinct_parts():
                key = ("c", rest.remove(s), p + s)
                chain[key] = chain.get(key, Fraction(0)) - 1
            equations.append(chain)
    return _solve_system(unknowns, equations)


def _c_word(shape: Partition) -> tuple[LoopGenerator, ...]:
    return tuple(LoopGenerator(C, -p) for p in shape.parts)


def closed_form_operator(case: SingularCase, m: int, level: Scalar, c: Scalar) -> UEAElement:
    """The lowering element whose powers produce the closed-form singular vectors."""
    level = as_fraction(level)
    if not level:
        raise ZeroLevel("closed-form singular vectors need a nonzero level")
    if m < 1:
        raise ValueError("m must be a positive integer")
    total = UEAElement(level)
    if case is SingularCase.PLUS:
        for unknown, coeff in plus_coefficients(m, level, c).items():
            if unknown[0] == "a":
                word = _c_word(unknown[1]) + (LoopGenerator(B, 0),)
            else:
                word = _c_word(unknown[1]) + (LoopGenerator(B, -unknown[2]),)
            total = total + straighten(word, level) * coeff
    else:
        for (_, shape, part), coeff in minus_coefficients(m, level, c).items():
            total = total + straighten(_c_word(shape) + (LoopGenerator(A, -part),), level) * coeff
    return total


_MIRROR = {A: B, B: A, C: C, D: D}


def mirror(u: UEAElement) -> UEAElement:
    """Image under the automorphism a <-> b, c -> -c, d -> -d, which preserves the form."""
    total = UEAElement(u.level)
    for monomial, coeff in u.terms.items():
        sign = (-1) ** sum(1 for gen in monomial if gen.tag in (C, D))
        image = tuple(LoopGenerator(_MIRROR[gen.tag], gen.mode) for gen in monomial)
        total = total + straighten(image, u.level) * (sign * coeff)
    return total


def _check_case(case: SingularCase, m: int, level: Fraction, c: Fraction) -> None:
    expected = -m * level if case is SingularCase.PLUS else m * level
    if c != expected:
        raise ParameterMismatch(f"{case.value} with m={m} needs c = {expected}, got {c}")


def closed_form_singular(module: InducedModule, case: SingularCase, m: int, k: int) -> ModuleState:
    """The k-th power of the closed-form operator applied to the highest vector.

    The c-eigenvalue of the base must be -m*level for PlusM and m*level
    for MinusM.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not module.level:
        raise ZeroLevel("closed-form singular vectors need a nonzero level")
    c = module.base.c_value
    _check_case(case, m, module.level, c)
    operator = closed_form_operator(case, m, module.level, c)
    state = module.highest_vector()
    for _ in range(k):
        state = module.act_element(operator, state)
    return state


def match_closed_forms(report: SingularReport, module: InducedModule) -> list[str]:
    """Identifiers of closed forms lying in the kernel of a report."""
    matched: list[str] = []
    if not report.kernel or not module.level:
        return matched
    top = module.base.weight(module.base.highest_index)
    for case, ratio in ((SingularCase.PLUS, -module.base.c_value / module.level),
                        (SingularCase.MINUS, module.base.c_value / module.level)):
        if ratio.denominator != 1 or ratio <= 0:
            continue
        m = ratio.numerator
        height = report.component.height
        if height % m:
            continue
        k = height // m
        weight = top - k if case is SingularCase.PLUS else top + k
        if report.component.dweight is not None and report.component.dweight != weight:
            continue
        try:
            state = closed_form_singular(module, case, m, k)
        except (TruncationOverflow, DegenerateSystem) as err:
            _LOGGER.debug("Skipping %s m=%d k=%d: %s", case.value, m, k, err)
            continue
        if not state.is_zero and in_span(state, report.kernel):
            matched.append(f"{case.value}:m={m},k={k}")
    return matched


def loop_singular_generators(
    module: InducedModule, case: LoopCase, m: int = 1, max_weight: int = 3
) -> list[ModuleState]:
    """Generators of loop-singular vectors of an induced intermediate series module.

    Each returned state is checked against x(n) for 1 <= n <= its height.
    """
    if not isinstance(module.base, IntermediateModule):
        raise ParameterMismatch("loop-singular generators need an intermediate series base")
    if case is LoopCase.LEVEL_ZERO:
        if module.level:
            raise ParameterMismatch(f"the level-zero family needs level 0, got {module.level}")
        states = [module.apply_word(_c_word(shape)) for shape in partitions_up_to(max_weight)]
    elif case is LoopCase.PLUS:
        states = [closed_form_singular(module, SingularCase.PLUS, m, 1)]
    else:
        # a(0) does not kill v_0, so the a(-lambda_i) terms alone are not enough;
        # use the mirror image of the PlusM operator, which adds c(-lambda) a(0) terms.
        _check_case(SingularCase.MINUS, m, module.level, module.base.c_value)
        operator = mirror(closed_form_operator(SingularCase.PLUS, m, module.level, -module.base.c_value))
        states = [module.act_element(operator, module.highest_vector())]

    for state in states:
        ht = max(module.degree(key) for key in state) if state else 0
        if not verify_singular(state, module, RaisingSet(Grading.STANDARD, max(ht, 1))):
            _LOGGER.error("Generator %s is not annihilated by positive modes", state)
            raise VerificationFailed(f"{state} is not loop-singular")
    _LOGGER.info("Certified %d loop-singular generators for %s", len(states), case.value)
    return states


def proper_submodule_witness(module: InducedModule, state: ModuleState, word_length: int = 1) -> bool:
    """Whether the highest vector lies outside the span of short words applied to the state.

    Words use zero and lowering modes of mode at least -1; every product has
    height at least that of the state, so for a state of positive height
    the highest vector cannot be reached.
    """
    generators = [LoopGenerator(tag, n) for n in (0, -1) for tag in _TAGS]
    layer = [state]
    generated = [state]
    for _ in range(word_length):
        layer = [module.act(gen, s) for s in layer for gen in generators]
        layer = [s for s in layer if not s.is_zero]
        generated.extend(layer)
    return not in_span(module.highest_vector(), generated)
