# nwlab/api.py

import asyncio
import logging
from fractions import Fraction
from typing import Any, Optional

from .algebra import GeneratorTag, LieElement, LoopGenerator, bracket, casimir_scalar
from .combination import format_fraction
from .const import DEFAULT_WINDOW
from .coordinator import ProbeCoordinator
from .enveloping import casimir, modified_casimir, straighten
from .exceptions import InvalidTruncation, NappiWittenError, UsageError
from .fock import TensorFockState
from .modules import BaseModule, InducedModule, IntermediateModule, ModuleState, TrivialModule, VermaModule
from .options import check_depth
from .serialization import fock_state_to_json, lie_to_json, report_to_json, state_to_json, uea_to_json
from .singular import Component, Grading, RaisingSet, find_singular, match_closed_forms, verify_singular
from .vertex import VertexAlgebra, conformal_weight_formula
from .wakimoto import central_term, highest_weight_of_image, verify_phi_relations

_LOGGER = logging.getLogger(__name__)


def resolve_base_kind(options: dict[str, Any]) -> str:
    """The base module kind, inferred from the given parameters when --base is absent."""
    if options.get("base"):
        return options["base"]
    if any(options.get(name) for name in ("alpha", "beta", "gamma")):
        return "intermediate"
    if options.get("c") is not None:
        return "verma"
    return "trivial"


def build_module(options: dict[str, Any], depth: int) -> InducedModule:
    """Truncated induced module described by validated module options."""
    kind = resolve_base_kind(options)
    base: BaseModule
    if kind == "verma":
        base = VermaModule(options.get("c") or 0, options.get("d") or 0)
    elif kind == "intermediate":
        window = options.get("window")
        base = IntermediateModule(
            options.get("alpha") or 0,
            options.get("beta") or 0,
            options.get("gamma") or 0,
            max(DEFAULT_WINDOW, 2 * depth) if window is None else window,
        )
    else:
        base = TrivialModule(options.get("d") or 0)
    return InducedModule(options["level"], base, depth)


class NappiWittenLab:
    """Wrapper class for running the computations behind each command."""

    def __init__(self, depth_limit: int) -> None:
        self.depth_limit = depth_limit

    def _depth(self, options: dict[str, Any], needed: int) -> int:
        depth = options.get("depth")
        if depth is None:
            depth = needed
        elif depth < needed:
            raise InvalidTruncation(f"depth {depth} is below the required height {needed}")
        return check_depth(depth, self.depth_limit)

    def bracket(self, x: LoopGenerator, y: LoopGenerator) -> dict[str, Any]:
        """Bracket of two loop generators."""
        result = bracket(LieElement.generator(x.tag, x.mode), LieElement.generator(y.tag, y.mode))
        return {"result": lie_to_json(result)}

    def normal_form(self, word: tuple[LoopGenerator, ...], level: Fraction) -> dict[str, Any]:
        """PBW normal form of a word."""
        return {"result": uea_to_json(straighten(word, level))}

    def dims(self, options: dict[str, Any]) -> dict[str, Any]:
        """
        Graded dimensions of an induced module up to --max.

        Over a Verma or intermediate base the height components are infinite,
        so --dweight is required and the bigraded dimensions are reported.
        """
        max_height, dweight = options["max"], options.get("dweight")
        module = build_module(options, self._depth(options, max_height))
        if dweight is None:
            if not isinstance(module.base, TrivialModule):
                raise UsageError(f"a {module.base.kind} base needs a d-weight", "--dweight")
            return {"dims": [module.graded_dim(ht) for ht in range(max_height + 1)]}
        return {
            "dweight": format_fraction(dweight),
            "dims": [module.bigraded_dim(ht, dweight) for ht in range(max_height + 1)],
        }

    def singular(self, options: dict[str, Any]) -> dict[str, Any]:
        """
        Singular vectors of one (bi)graded component.

        With --partition the state c(-partition) v is also checked for
        annihilation, which is the level-zero family.
        """
        height = options["height"]
        partition = options.get("partition")
        needed = max(height, partition.weight) if partition is not None else height
        module = build_module(options, self._depth(options, needed))
        raising = RaisingSet(Grading(options["grading"]), options.get("max_mode") or height)
        try:
            report = find_singular(module, Component(height, options.get("dweight")), raising)
            report.matched = match_closed_forms(report, module)
        except NappiWittenError as ex:
            _LOGGER.error("Singular vector search failed: %s", ex)
            raise
        document = report_to_json(report, module.base)
        if partition is not None:
            state = module.apply_word(tuple(LoopGenerator(GeneratorTag.C, -p) for p in partition.parts))
            check = RaisingSet(raising.grading, max(partition.weight, 1))
            verified = not state.is_zero and verify_singular(state, module, check)
            document["partition"] = {"parts": list(partition.parts), "state": state_to_json(state, module.base)}
            document["verified"] = verified
        return document

    def probe(self, options: dict[str, Any]) -> dict[str, Any]:
        """Sweep every component up to --max for singular vectors."""
        max_height = options["max"]
        module = build_module(options, self._depth(options, max_height))
        raising = RaisingSet(Grading(options["grading"]), options.get("max_mode") or max_height)
        coordinator = ProbeCoordinator(module, raising, max_height, options.get("spread"))
        try:
            if options.get("parallel"):
                verdict = asyncio.run(coordinator.async_sweep())
            else:
                verdict = coordinator.sweep()
        except NappiWittenError as ex:
            _LOGGER.error("Irreducibility probe failed: %s", ex)
            raise
        return {
            "verdict": verdict.label,
            "max_height": verdict.max_height,
            "reports": [report_to_json(report, module.base) for report in verdict.reports],
        }

    def virasoro(self, options: dict[str, Any]) -> dict[str, Any]:
        """Check [L(m), L(n)] on an induced module and read off the central charge."""
        m, n, max_height = options["m"], options["n"], options["max_height"]
        module = build_module(options, self._depth(options, max_height + abs(m) + abs(n)))
        algebra = VertexAlgebra(options["level"], 2)
        indices: Optional[tuple[int, ...]] = None
        if isinstance(module.base, VermaModule):
            indices = (0, 1)
        elif isinstance(module.base, IntermediateModule):
            indices = (-1, 0, 1)
        try:
            result = algebra.verify_virasoro(m, n, module, max_height, indices)
            charge = algebra.central_charge()
        except NappiWittenError as ex:
            _LOGGER.error("Virasoro check failed to run: %s", ex)
            raise
        central = charge / 12 * (m ** 3 - m) if m + n == 0 else Fraction(0)
        document: dict[str, Any] = {
            "m": m,
            "n": n,
            "verified": result.passed,
            "central_coeff": format_fraction(central),
            "central_charge": format_fraction(charge),
        }
        if not result.passed:
            document["counterexample"] = state_to_json(ModuleState.basis(result.counterexample), module.base)
        if isinstance(module.base, VermaModule):
            document["conformal_weight"] = format_fraction(algebra.conformal_weight(module))
            document["conformal_weight_formula"] = format_fraction(
                conformal_weight_formula(module.level, module.base.c, module.base.d)
            )
        return document

    def wakimoto(self, options: dict[str, Any]) -> dict[str, Any]:
        """Relation table, central term and highest weight of the free-field realization."""
        level, alpha_p, alpha_q = options["level"], options["alpha_p"], options["alpha_q"]
        check_depth(options["max_depth"] + 2 * options["max_mode"], self.depth_limit, "--max-depth")
        try:
            report = verify_phi_relations(level, alpha_p, alpha_q, options["max_mode"], options["max_depth"])
            weight = highest_weight_of_image(level, alpha_p, alpha_q)
            reading = central_term(level, alpha_p, alpha_q, 1)
        except NappiWittenError as ex:
            _LOGGER.error("Free-field verification failed to run: %s", ex)
            raise
        relations = []
        for check in report.relations:
            entry: dict[str, Any] = {"x": check.x, "y": check.y, "passed": check.passed}
            if check.counterexample is not None:
                entry["counterexample"] = {
                    "m": check.counterexample["m"],
                    "n": check.counterexample["n"],
                    "state": fock_state_to_json(TensorFockState.basis(check.counterexample["key"])),
                }
            relations.append(entry)
        return {
            "level": format_fraction(report.level),
            "alpha": {"p": format_fraction(report.alpha_p), "q": format_fraction(report.alpha_q)},
            "relations": relations,
            "highest_weight": {"c": format_fraction(weight.c), "d": format_fraction(weight.d), "type": weight.kind},
            "central_term": format_fraction(reading),
            "verified": report.passed and reading == report.level,
        }

    def casimir(self, options: dict[str, Any]) -> dict[str, Any]:
        """
        Casimir of U(H4) and, at nonzero level, the modified Casimir.

        Given --c and --d the modified Casimir is also applied to a Verma
        highest-weight vector and compared with c(2d + 1) - c^2 / level.
        """
        level = options.get("level")
        document: dict[str, Any] = {"casimir": uea_to_json(casimir(level or 0))}
        if not level:
            return document
        document["modified"] = uea_to_json(modified_casimir(level))
        c, d = options.get("c"), options.get("d")
        if c is not None and d is not None:
            module = InducedModule(level, VermaModule(c, d), 0)
            vector = module.highest_vector()
            image = module.act_element(modified_casimir(level), vector)
            value = image.coeff(next(iter(vector)))
            document["scalar"] = format_fraction(value)
            document["verified"] = image == vector * value and value == casimir_scalar(level, c, d)
        return document
