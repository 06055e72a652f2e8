"""Vertex algebra structure on the vacuum module and its Virasoro operators.

A vacuum state h(-m) u has vertex operator :d^(m-1) h(x) Y(u, x): (divided
derivative). Its modes are evaluated on basis vectors of any restricted
module by splitting the derivative field into creation terms (acting
after Y(u)) and annihilation terms (acting before Y(u)). Both sums are
finite because a mode h(p) kills a vector of degree below p.
"""
# vertex.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Hashable, Iterable, Mapping, Optional, Protocol
from weakref import WeakKeyDictionary

from .algebra import A, B, C, D, GeneratorTag, LieElement, LoopGenerator, bracket, casimir_scalar, form
from .combination import Combination, Scalar, as_fraction
from .const import ACTION_CACHE_SIZE
from .enveloping import PBWMonomial, height
from .exceptions import InvalidTruncation, ParameterMismatch, ZeroLevel
from .modules import InducedModule, ModuleState, vacuum_module

_LOGGER = logging.getLogger(__name__)

VIRASORO_CENTRAL_CHARGE = Fraction(4)


class RestrictedModule(Protocol):
    """A module of the affine algebra given by its action on basis keys."""

    level: Fraction

    def act_basis(self, gen: LoopGenerator, key: Any) -> Mapping[Any, Fraction]:
        ...

    def degree(self, key: Any) -> int:
        ...

    def basis_up_to(self, max_height: int, indices: Optional[Iterable[int]] = None) -> list[Any]:
        ...


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check; truthy when it passed."""

    passed: bool
    counterexample: Optional[Any] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _binomial(top: int, j: int) -> int:
    """Generalized binomial coefficient top choose j for integer top."""
    numerator = 1
    for i in range(j):
        numerator *= top - i
    return numerator // factorial(j)


def omega(level: Scalar, module: InducedModule) -> ModuleState:
    """The conformal vector in a vacuum module.

    omega = (a(-1)b(-1) + c(-1)d(-1)) / l - c(-2) / 2l - c(-1)^2 / 2l^2
    """
    level = as_fraction(level)
    if not level:
        raise ZeroLevel("the conformal vector needs a nonzero level")
    a1, b1, c1, d1, c2 = (LoopGenerator(t, m) for t, m in ((A, -1), (B, -1), (C, -1), (D, -1), (C, -2)))
    return (
        module.apply_word((a1, b1)) * (1 / level)
        + module.apply_word((c1, d1)) * (1 / level)
        - module.apply_word((c2,)) * (1 / (2 * level))
        - module.apply_word((c1, c1)) * (1 / (2 * level * level))
    )


def symmetrized_omega(level: Scalar, module: InducedModule) -> ModuleState:
    """The conformal vector written with symmetrized products.

    (ab + ba + cd + dc)(-1) / 2l applied to the vacuum, minus c(-1)^2 / 2l^2.
    """
    level = as_fraction(level)
    if not level:
        raise ZeroLevel("the conformal vector needs a nonzero level")
    a1, b1, c1, d1 = (LoopGenerator(t, -1) for t in (A, B, C, D))
    total = ModuleState()
    for word in ((a1, b1), (b1, a1), (c1, d1), (d1, c1)):
        total = total + module.apply_word(word)
    return total * (1 / (2 * level)) - module.apply_word((c1, c1)) * (1 / (2 * level * level))


class VertexAlgebra:
    """The vertex algebra V(level, 0) acting on restricted modules of the same level."""

    def __init__(self, level: Scalar, depth: int) -> None:
        self.level: Fraction = as_fraction(level)
        if depth < 2:
            raise InvalidTruncation("the vacuum module must reach height 2 to hold the conformal vector")
        self.vacuum: InducedModule = vacuum_module(self.level, depth)
        self._omega: Optional[ModuleState] = None
        # entries disappear with their module
        self._caches: WeakKeyDictionary[Any, dict[tuple[PBWMonomial, int, Hashable], dict[Hashable, Fraction]]] = (
            WeakKeyDictionary()
        )

    @property
    def omega(self) -> ModuleState:
        if self._omega is None:
            self._omega = omega(self.level, self.vacuum)
        return self._omega

    def vacuum_state(self) -> ModuleState:
        return self.vacuum.highest_vector()

    def _check_module(self, module: RestrictedModule) -> None:
        if module.level != self.level:
            raise ParameterMismatch(f"module level {module.level} differs from {self.level}")

    def _word_mode(self, module: RestrictedModule, word: PBWMonomial, n: int, key: Hashable) -> dict[Hashable, Fraction]:
        if not word:
            return {key: Fraction(1)} if n == -1 else {}
        cache = self._caches.setdefault(module, {})
        cached = cache.get((word, n, key))
        if cached is not None:
            return cached

        head, rest = word[0], word[1:]
        j = -head.mode - 1
        deg = module.degree(key)
        result: dict[Hashable, Fraction] = {}

        def add(target: Hashable, coeff: Fraction) -> None:
            result[target] = result.get(target, Fraction(0)) + coeff

        # creation terms act after Y(rest)
        for p in range(n - deg - height(rest), 0):
            inner = self._word_mode(module, rest, n - p - 1, key)
            if not inner:
                continue
            weight = _binomial(-p + j - 1, j)
            gen = LoopGenerator(head.tag, p - j)
            for middle, coeff in inner.items():
                for target, coeff2 in module.act_basis(gen, middle).items():
                    add(target, weight * coeff * coeff2)
        # annihilation terms act before Y(rest)
        for p in range(j, deg + j + 1):
            gen = LoopGenerator(head.tag, p - j)
            image = module.act_basis(gen, key)
            if not image:
                continue
            weight = _binomial(-p + j - 1, j)
            for middle, coeff in image.items():
                for target, coeff2 in self._word_mode(module, rest, n - p - 1, middle).items():
                    add(target, weight * coeff * coeff2)

        result = {target: coeff for target, coeff in result.items() if coeff}
        if len(cache) >= ACTION_CACHE_SIZE:
            cache.clear()
        cache[(word, n, key)] = result
        return result

    def clear_cache(self, module: Optional[RestrictedModule] = None) -> None:
        """Forget memoized vertex operator modes, for one module or for all."""
        if module is None:
            self._caches.clear()
        else:
            self._caches.pop(module, None)

    def vertex_mode(
        self, v: ModuleState, n: int, state: Combination, module: Optional[RestrictedModule] = None
    ) -> Combination:
        """The x^(-n-1) coefficient of Y(v, x) applied to a state of a restricted module."""
        module = self.vacuum if module is None else module
        self._check_module(module)
        acc: dict[Hashable, Fraction] = {}
        for (word, index), cv in v.items():
            if index != self.vacuum.base.highest_index:
                raise ParameterMismatch("vertex operators are defined for vacuum module states")
            for key, cs in state.items():
                for target, coeff in self._word_mode(module, word, n, key).items():
                    acc[target] = acc.get(target, Fraction(0)) + cv * cs * coeff
        return type(state)(acc)

    def generator_state(self, tag: GeneratorTag) -> ModuleState:
        """The weight-one state h(-1)1."""
        return self.vacuum.apply_word((LoopGenerator(tag, -1),))

    def d_operator(self, v: ModuleState) -> ModuleState:
        """The translation operator, v maps to v_(-2) 1."""
        return self.vertex_mode(v, -2, self.vacuum_state())

    def L(self, n: int, state: Combination, module: Optional[RestrictedModule] = None) -> Combination:
        """Virasoro operator L(n) = omega_(n+1)."""
        if not self.level:
            raise ZeroLevel("Virasoro operators need a nonzero level")
        return self.vertex_mode(self.omega, n + 1, state, module)

    def h_modes_on_omega(self, tag: GeneratorTag, n: int) -> ModuleState:
        """h(n) applied to the conformal vector."""
        return self.vacuum.act(LoopGenerator(tag, n), self.omega)

    def verify_dg(
        self,
        m: int,
        n: int,
        tag: GeneratorTag,
        module: Optional[RestrictedModule] = None,
        max_height: int = 2,
        indices: Optional[Iterable[int]] = None,
    ) -> CheckResult:
        """Check [L(m), h(n)] = -n h(m+n) on every basis state up to `max_height`."""
        module = self.vacuum if module is None else module
        h_n, h_mn = LoopGenerator(tag, n), LoopGenerator(tag, m + n)
        for key in module.basis_up_to(max_height, indices):
            state = Combination.basis(key)
            lhs = self.L(m, _act(module, h_n, state), module) - _act(module, h_n, self.L(m, state, module))
            rhs = _act(module, h_mn, state) * (-n)
            if lhs != rhs:
                _LOGGER.debug("[L(%d), %s(%d)] fails on %s", m, tag.value, n, key)
                return CheckResult(False, key, f"[L({m}),{tag.value}({n})]")
        return CheckResult(True)

    def verify_virasoro(
        self,
        m: int,
        n: int,
        module: Optional[RestrictedModule] = None,
        max_height: int = 2,
        indices: Optional[Iterable[int]] = None,
    ) -> CheckResult:
        """Check [L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/3 delta_{m+n,0}."""
        module = self.vacuum if module is None else module
        central = VIRASORO_CENTRAL_CHARGE / 12 * (m ** 3 - m) if m + n == 0 else Fraction(0)
        for key in module.basis_up_to(max_height, indices):
            state = Combination.basis(key)
            lhs = self.L(m, self.L(n, state, module), module) - self.L(n, self.L(m, state, module), module)
            rhs = self.L(m + n, state, module) * (m - n) + state * central
            if lhs != rhs:
                _LOGGER.debug("[L(%d), L(%d)] fails on %s", m, n, key)
                return CheckResult(False, key, f"[L({m}),L({n})]")
        return CheckResult(True)

    def verify_commutator_formula(
        self,
        g: GeneratorTag,
        h: GeneratorTag,
        m: int,
        n: int,
        module: Optional[RestrictedModule] = None,
        max_height: int = 2,
        indices: Optional[Iterable[int]] = None,
    ) -> CheckResult:
        """Check [Y(g)_m, Y(h)_n] = Y([g,h])_(m+n) + m (g,h) delta_{m+n,0} level."""
        module = self.vacuum if module is None else module
        vg, vh = self.generator_state(g), self.generator_state(h)
        commutator = bracket(LieElement.generator(g, 0), LieElement.generator(h, 0))
        v_bracket = ModuleState()
        for gen, coeff in commutator.loop_terms.items():
            v_bracket = v_bracket + self.generator_state(gen.tag) * coeff
        central = m * form(g, h) * self.level if m + n == 0 else Fraction(0)
        for key in module.basis_up_to(max_height, indices):
            state = Combination.basis(key)
            lhs = (self.vertex_mode(vg, m, self.vertex_mode(vh, n, state, module), module)
                   - self.vertex_mode(vh, n, self.vertex_mode(vg, m, state, module), module))
            rhs = self.vertex_mode(v_bracket, m + n, state, module) + state * central
            if lhs != rhs:
                return CheckResult(False, key, f"[{g.value}_{m},{h.value}_{n}]")
        return CheckResult(True)

    def verify_generation(self, max_height: int) -> CheckResult:
        """Rebuild every vacuum basis state of height <= max_height from generator modes."""
        vacuum = self.vacuum_state()
        for key in self.vacuum.basis_up_to(max_height):
            state = vacuum
            for gen in reversed(key[0]):
                state = self.vertex_mode(self.generator_state(gen.tag), gen.mode, state)
            if state != ModuleState.basis(key):
                return CheckResult(False, key, "generation")
        return CheckResult(True)

    def central_charge(self) -> Fraction:
        """Read c from [L(2), L(-2)] - 4 L(0) on the vacuum, which is (c/12)(2^3 - 2)."""
        vacuum = self.vacuum_state()
        lhs = self.L(2, self.L(-2, vacuum)) - self.L(-2, self.L(2, vacuum)) - self.L(0, vacuum) * 4
        key = next(iter(vacuum))
        coeff = lhs.coeff(key)
        if lhs != vacuum * coeff:
            raise ParameterMismatch("[L(2), L(-2)] does not act by a scalar on the vacuum")
        return 12 * coeff / 6

    def conformal_weight(self, module: InducedModule, index: Optional[int] = None) -> Fraction:
        """Eigenvalue of L(0) on a base-layer vector of an induced module."""
        state = module.highest_vector(index)
        image = self.L(0, state, module)
        key = next(iter(state))
        value = image.coeff(key)
        if image != state * value:
            raise ParameterMismatch("the base vector is not an L(0) eigenvector")
        return value


def _act(module: RestrictedModule, gen: LoopGenerator, state: Combination) -> Combination:
    acc: dict[Hashable, Fraction] = {}
    for key, coeff in state.items():
        for target, coeff2 in module.act_basis(gen, key).items():
            acc[target] = acc.get(target, Fraction(0)) + coeff * coeff2
    return type(state)(acc)


def conformal_weight_formula(level: Scalar, c: Scalar, d: Scalar) -> Fraction:
    """r = (c(2d+1) - c^2/level) / 2 level."""
    level = as_fraction(level)
    return casimir_scalar(level, c, d) / (2 * level)
