"""Free-field realization of the affine Nappi-Witten algebra.

On the tensor product of the Weyl and Heisenberg Fock modules the map

    a(n) -> beta(n)
    c(n) -> p(n)
    b(n) -> -l n gamma(n) + sum_i p(i) gamma(n - i)
    d(n) -> l q(n) + p(n) / 2l - sum_i :beta(i) gamma(n - i):

defines a module of level l. In the normal ordered product the
beta(i) with i >= 0 stand to the right.
"""
# wakimoto.py

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from .algebra import A, B, C, D, GeneratorTag, LoopGenerator, generator_bracket
from .combination import Scalar, as_fraction
from .const import ACTION_CACHE_SIZE, DEFAULT_GAMMA_ZERO_CAP, GENERATOR_ORDER, TYPE_GENERALIZED_VERMA, TYPE_VACUUM
from .enveloping import negative_monomials
from .exceptions import TruncationOverflow, VerificationFailed, ZeroLevel
from .fock import (
    BETA,
    GAMMA,
    P,
    Q,
    WEYL_FIELDS,
    HeisenbergFockSpace,
    Oscillator,
    TensorFockState,
    TensorKey,
    WeylFockSpace,
    gamma_zero_power,
    heisenberg_raw,
    monomial_degree,
    split_monomial,
    weyl_raw,
)
from .linalg import rank
from .modules import InducedModule, ModuleState, VermaModule
from .vertex import CheckResult, VertexAlgebra

_LOGGER = logging.getLogger(__name__)

_TAGS = tuple(GeneratorTag(symbol) for symbol in GENERATOR_ORDER)
# Creation oscillators are counted like lowering generators: a, b, c, d
# correspond to beta, gamma, p, q.
_FIELD_OF = {A: BETA, B: GAMMA, C: P, D: Q}

Term = tuple[Fraction, tuple[Oscillator, ...]]


class TensorFockModule:
    """V_A tensor M(1, alpha) as a restricted module of the affine algebra at a nonzero level."""

    def __init__(
        self,
        level: Scalar,
        alpha_p: Scalar = 0,
        alpha_q: Scalar = 0,
        depth: int = 4,
        gamma_zero_cap: int = DEFAULT_GAMMA_ZERO_CAP,
    ) -> None:
        self.level = as_fraction(level)
        if not self.level:
            raise ZeroLevel("the free-field realization needs a nonzero level")
        self.depth = depth
        self.gamma_zero_cap = gamma_zero_cap
        self.weyl = WeylFockSpace(depth, gamma_zero_cap)
        self.heisenberg = HeisenbergFockSpace(alpha_p, alpha_q, depth)
        self._cache: dict[tuple[LoopGenerator, TensorKey], dict[TensorKey, Fraction]] = {}

    def __repr__(self) -> str:
        return (
            f"TensorFockModule(level={self.level}, alpha=({self.alpha_p}, {self.alpha_q}), "
            f"depth={self.depth})"
        )

    @property
    def alpha_p(self) -> Fraction:
        return self.heisenberg.alpha_p

    @property
    def alpha_q(self) -> Fraction:
        return self.heisenberg.alpha_q

    @property
    def top_weight(self) -> Fraction:
        """d(0)-eigenvalue on the vacuum."""
        return self.level * self.alpha_q + self.alpha_p / (2 * self.level)

    def vacuum(self) -> TensorFockState:
        return TensorFockState.basis(((), ()))

    def degree(self, key: TensorKey) -> int:
        return monomial_degree(key[0]) + monomial_degree(key[1])

    def key_weight(self, key: TensorKey) -> Fraction:
        """d(0)-eigenvalue of a basis vector: each beta adds one, each gamma removes one."""
        counts = Counter(osc.field for osc in key[0])
        return self.top_weight + counts[BETA] - counts[GAMMA]

    def basis_up_to(self, max_height: int, indices: Optional[Iterable[int]] = None) -> list[TensorKey]:
        """Basis vectors of degree at most `max_height`; `indices` are the allowed gamma(0) powers."""
        powers = tuple((0,) if indices is None else indices)
        keys: list[TensorKey] = []
        for ht in range(max_height + 1):
            for monomial in negative_monomials(ht):
                oscillators = tuple(Oscillator(_FIELD_OF[gen.tag], gen.mode) for gen in monomial)
                for power in powers:
                    keys.append(split_monomial(oscillators + (Oscillator(GAMMA, 0),) * power))
        return keys

    # --- oscillators ---

    def _apply(self, osc: Oscillator, states: Mapping[TensorKey, Fraction]) -> dict[TensorKey, Fraction]:
        acc: dict[TensorKey, Fraction] = {}
        for (weyl, heis), coeff in states.items():
            if osc.field in WEYL_FIELDS:
                images = ((w, heis, c) for w, c in weyl_raw(osc, weyl).items())
            else:
                images = ((weyl, h, c) for h, c in heisenberg_raw(osc, heis, self.alpha_p, self.alpha_q).items())
            for w, h, c in images:
                acc[(w, h)] = acc.get((w, h), Fraction(0)) + coeff * c
        return acc

    def _phi_terms(self, tag: GeneratorTag, n: int, deg: int) -> list[Term]:
        """Oscillator words for the image of x(n), listed in the order they apply."""
        one = Fraction(1)
        if tag is A:
            return [(one, (Oscillator(BETA, n),))]
        if tag is C:
            return [(one, (Oscillator(P, n),))]
        if tag is B:
            terms = [(-self.level * n, (Oscillator(GAMMA, n),))] if n else []
            terms += [(one, (Oscillator(GAMMA, n - i), Oscillator(P, i))) for i in range(n - deg, deg + 1)]
            return terms
        terms = [(self.level, (Oscillator(Q, n),)), (1 / (2 * self.level), (Oscillator(P, n),))]
        terms += [(-one, (Oscillator(GAMMA, n - i), Oscillator(BETA, i))) for i in range(n - deg, 0)]
        terms += [(-one, (Oscillator(BETA, i), Oscillator(GAMMA, n - i))) for i in range(0, deg + 1)]
        return terms

    def act_basis(self, gen: LoopGenerator, key: TensorKey) -> Mapping[TensorKey, Fraction]:
        """Image of x(n) under the free-field map on a basis vector."""
        cached = self._cache.get((gen, key))
        if cached is not None:
            return cached
        acc: dict[TensorKey, Fraction] = {}
        for coeff, word in self._phi_terms(gen.tag, gen.mode, self.degree(key)):
            states: dict[TensorKey, Fraction] = {key: coeff}
            for osc in word:
                states = self._apply(osc, states)
                if not states:
                    break
            for target, value in states.items():
                acc[target] = acc.get(target, Fraction(0)) + value
        result = {target: value for target, value in acc.items() if value}
        for target in result:
            if self.degree(target) > self.depth or gamma_zero_power(target[0]) > self.gamma_zero_cap:
                raise TruncationOverflow(f"{gen} on {key} leaves the truncated Fock module")
        if len(self._cache) >= ACTION_CACHE_SIZE:
            self.clear_cache()
        self._cache[(gen, key)] = result
        return result

    def clear_cache(self) -> None:
        self._cache.clear()

    def act(self, gen: LoopGenerator, state: TensorFockState) -> TensorFockState:
        acc: dict[TensorKey, Fraction] = {}
        for key, coeff in state.items():
            for target, value in self.act_basis(gen, key).items():
                acc[target] = acc.get(target, Fraction(0)) + coeff * value
        return TensorFockState(acc)


def phi_mode(tag: GeneratorTag, n: int, module: TensorFockModule) -> Callable[[TensorFockState], TensorFockState]:
    """The operator image of x(n) on the given Fock module."""
    gen = LoopGenerator(tag, n)
    return lambda state: module.act(gen, state)


def phi_image(state: ModuleState, module: TensorFockModule) -> TensorFockState:
    """Apply the free-field image of each lowering word of a vacuum module state to the Fock vacuum."""
    total = TensorFockState()
    for (word, _), coeff in state.items():
        current = module.vacuum()
        for gen in reversed(word):
            current = module.act(gen, current)
        total = total + current * coeff
    return total


@dataclass
class RelationCheck:
    """Outcome for one unordered pair of generators."""

    x: str
    y: str
    passed: bool
    counterexample: Optional[dict[str, Any]] = None


@dataclass
class PhiRelationReport:
    """All relation checks of the free-field map at one level and weight."""

    level: Fraction
    alpha_p: Fraction
    alpha_q: Fraction
    relations: list[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.relations)

    def __bool__(self) -> bool:
        return self.passed


def verify_phi_relations(
    level: Scalar,
    alpha_p: Scalar,
    alpha_q: Scalar,
    max_mode: int,
    max_depth: int,
    gamma_zero_powers: Sequence[int] = (0, 1),
) -> PhiRelationReport:
    """Check [Phi x(m), Phi y(n)] = Phi [x(m), y(n)] with k acting by the level.

    Every unordered generator pair and all |m|, |n| <= max_mode are tested on
    each basis vector of degree at most max_depth.
    """
    module = TensorFockModule(
        level, alpha_p, alpha_q,
        depth=max_depth + 2 * max_mode,
        gamma_zero_cap=max(gamma_zero_powers) + 2,
    )
    keys = module.basis_up_to(max_depth, gamma_zero_powers)
    modes = range(-max_mode, max_mode + 1)
    report = PhiRelationReport(module.level, module.alpha_p, module.alpha_q)
    for x, y in combinations_with_replacement(_TAGS, 2):
        check = RelationCheck(x.value, y.value, True)
        for m in modes:
            for n in modes:
                if not check.passed:
                    break
                gx, gy = LoopGenerator(x, m), LoopGenerator(y, n)
                commutator = generator_bracket(gx, gy)
                for key in keys:
                    state = TensorFockState.basis(key)
                    lhs = module.act(gx, module.act(gy, state)) - module.act(gy, module.act(gx, state))
                    rhs = state * (commutator.central * module.level)
                    for gen, coeff in commutator.loop_terms.items():
                        rhs = rhs + module.act(gen, state) * coeff
                    if lhs != rhs:
                        _LOGGER.debug("Relation [%s, %s] fails on %s", gx, gy, key)
                        check.passed = False
                        check.counterexample = {"m": m, "n": n, "key": key}
                        break
        report.relations.append(check)
    _LOGGER.info(
        "Free-field relations at level %s, alpha (%s, %s): %s",
        module.level, module.alpha_p, module.alpha_q, "passed" if report.passed else "failed",
    )
    return report


def central_term(level: Scalar, alpha_p: Scalar, alpha_q: Scalar, m: int) -> Fraction:
    """Scalar part of [Phi a(m), Phi b(-m)] - Phi c(0) on the vacuum; equals m times the level."""
    module = TensorFockModule(level, alpha_p, alpha_q, depth=abs(m) + 1)
    vacuum = module.vacuum()
    a, b, c = LoopGenerator(A, m), LoopGenerator(B, -m), LoopGenerator(C, 0)
    rest = (module.act(a, module.act(b, vacuum)) - module.act(b, module.act(a, vacuum))
            - module.act(c, vacuum))
    value = rest.coeff(((), ()))
    if rest != vacuum * value:
        raise VerificationFailed("the commutator is not a scalar on the vacuum")
    return value


@dataclass(frozen=True)
class ImageHighestWeight:
    """(c, d) eigenvalues of the Fock vacuum and the resulting module type."""

    c: Fraction
    d: Fraction
    kind: str


def highest_weight_of_image(level: Scalar, alpha_p: Scalar, alpha_q: Scalar) -> ImageHighestWeight:
    """Read c(0), d(0) off the vacuum and confirm the raising part kills it."""
    module = TensorFockModule(level, alpha_p, alpha_q, depth=2)
    vacuum = module.vacuum()
    values = []
    for tag in (C, D):
        image = module.act(LoopGenerator(tag, 0), vacuum)
        value = image.coeff(((), ()))
        if image != vacuum * value:
            raise VerificationFailed(f"{tag.value}(0) does not act by a scalar on the vacuum")
        values.append(value)
    raising = [LoopGenerator(A, 0)] + [LoopGenerator(tag, n) for n in (1, 2) for tag in _TAGS]
    for gen in raising:
        if not module.act(gen, vacuum).is_zero:
            raise VerificationFailed(f"{gen} does not annihilate the vacuum")
    kind = TYPE_VACUUM if not module.alpha_p else TYPE_GENERALIZED_VERMA
    return ImageHighestWeight(values[0], values[1], kind)


@dataclass
class CokernelWitness:
    """Span of the free-field images of the vacuum module against the Fock module."""

    depth: int
    span_dim: int
    span_dims: list[int]
    fock_dims: list[int]
    excluded: bool


def gamma0_cokernel_witness(
    level: Scalar = 1, alpha_p: Scalar = 0, alpha_q: Scalar = 0, depth: int = 2, gamma_zero_powers: int = 1
) -> CokernelWitness:
    """Check that gamma(0)1 lies outside the image of the vacuum module up to `depth`."""
    module = TensorFockModule(level, alpha_p, alpha_q, depth=depth, gamma_zero_cap=gamma_zero_powers + depth)
    target = ((Oscillator(GAMMA, 0),), ())
    images: list[TensorFockState] = []
    span_dims: list[int] = []
    for ht in range(depth + 1):
        layer = [phi_image(ModuleState.basis((monomial, 0)), module) for monomial in negative_monomials(ht)]
        keys = sorted({key for state in layer for key in state}, key=repr)
        span_dims.append(rank([[state.coeff(key) for key in keys] for state in layer], len(keys)))
        images.extend(layer)

    keys = sorted({key for state in images for key in state} | {target}, key=repr)
    rows = [[state.coeff(key) for key in keys] for state in images]
    span_dim = rank(rows, len(keys))
    with_target = rank(rows + [[Fraction(int(key == target)) for key in keys]], len(keys))
    fock_keys = module.basis_up_to(depth, range(gamma_zero_powers + 1))
    fock_dims = [sum(1 for key in fock_keys if module.degree(key) == ht) for ht in range(depth + 1)]
    _LOGGER.debug("Image span dims %s against Fock dims %s", span_dims, fock_dims)
    return CokernelWitness(depth, span_dim, span_dims, fock_dims, with_target > span_dim)


@dataclass
class GradedComparison:
    """Bigraded dimensions of the Fock module and of the matching generalized Verma module."""

    rows: list[tuple[int, Fraction, int, int]]

    @property
    def agree(self) -> bool:
        return all(fock == verma for _, _, fock, verma in self.rows)


def compare_graded_dims(level: Scalar, alpha_p: Scalar, alpha_q: Scalar, depth: int = 3, cap: int = 2) -> GradedComparison:
    """Compare (degree, d-weight) dimensions with gamma(0) powers matched to b-powers up to `cap`."""
    fock = TensorFockModule(level, alpha_p, alpha_q, depth=depth, gamma_zero_cap=cap)
    top = highest_weight_of_image(level, alpha_p, alpha_q)
    verma = InducedModule(level, VermaModule(top.c, top.d, b_power_cap=cap), depth)
    fock_counts = Counter((fock.degree(key), fock.key_weight(key)) for key in fock.basis_up_to(depth, range(cap + 1)))
    verma_counts = Counter((verma.degree(key), verma.key_weight(key)) for key in verma.basis_up_to(depth))
    cells = sorted(set(fock_counts) | set(verma_counts))
    return GradedComparison([(ht, w, fock_counts[(ht, w)], verma_counts[(ht, w)]) for ht, w in cells])


def verify_vertex_consistency(level: Scalar, max_height: int = 2) -> CheckResult:
    """Vertex operators of vacuum states on the Fock vacuum agree with the composed free-field images.

    Uses alpha = 0, where the Fock vacuum is killed by all nonnegative modes
    and the free-field map is a homomorphism of vertex algebras.
    """
    algebra = VertexAlgebra(level, max(max_height, 2))
    fock = TensorFockModule(level, 0, 0, depth=max_height, gamma_zero_cap=max_height)
    for key in algebra.vacuum.basis_up_to(max_height):
        state = ModuleState.basis(key)
        if algebra.vertex_mode(state, -1, fock.vacuum(), fock) != phi_image(state, fock):
            return CheckResult(False, key, "vertex consistency")
    return CheckResult(True)


def verify_field_correspondence(
    level: Scalar, alpha_p: Scalar, alpha_q: Scalar, max_mode: int = 2, max_height: int = 2
) -> CheckResult:
    """Modes of the generator states h(-1)1 act on the Fock module as the free-field images."""
    algebra = VertexAlgebra(level, 2)
    fock = TensorFockModule(level, alpha_p, alpha_q, depth=max_height + max_mode, gamma_zero_cap=2)
    for tag in _TAGS:
        field_state = algebra.generator_state(tag)
        for n in range(-max_mode, max_mode + 1):
            for key in fock.basis_up_to(max_height, (0, 1)):
                state = TensorFockState.basis(key)
                if algebra.vertex_mode(field_state, n, state, fock) != fock.act(LoopGenerator(tag, n), state):
                    return CheckResult(False, key, f"{tag.value}({n})")
    return CheckResult(True)
