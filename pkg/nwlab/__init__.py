"""The affine Nappi-Witten algebra, its modules and vertex algebra."""
# __init__.py

import logging

from .algebra import GeneratorTag, LieElement, LoopGenerator, bracket, casimir_scalar, generator_bracket
from .api import NappiWittenLab, build_module
from .const import VERSION
from .coordinator import ProbeCoordinator, ProbeVerdict, irreducibility_probe
from .enveloping import Schedule, UEAElement, casimir, modified_casimir, multiply, straighten
from .exceptions import (
    DegenerateSystem,
    InvalidTruncation,
    LevelMismatch,
    NappiWittenError,
    ParameterMismatch,
    TruncationOverflow,
    TruncationTooShallow,
    UsageError,
    VerificationFailed,
    ZeroLevel,
)
from .modules import InducedModule, IntermediateModule, ModuleState, TrivialModule, VermaModule, vacuum_module
from .singular import Component, Grading, RaisingSet, SingularCase, closed_form_singular, find_singular
from .vertex import VertexAlgebra
from .wakimoto import TensorFockModule, verify_phi_relations

_LOGGER = logging.getLogger(__name__)

__version__ = VERSION

__all__ = [
    "Component",
    "DegenerateSystem",
    "GeneratorTag",
    "Grading",
    "InducedModule",
    "IntermediateModule",
    "InvalidTruncation",
    "LevelMismatch",
    "LieElement",
    "LoopGenerator",
    "ModuleState",
    "NappiWittenError",
    "NappiWittenLab",
    "ParameterMismatch",
    "ProbeCoordinator",
    "ProbeVerdict",
    "RaisingSet",
    "Schedule",
    "SingularCase",
    "TensorFockModule",
    "TrivialModule",
    "TruncationOverflow",
    "TruncationTooShallow",
    "UEAElement",
    "UsageError",
    "VerificationFailed",
    "VermaModule",
    "VertexAlgebra",
    "ZeroLevel",
    "bracket",
    "build_module",
    "casimir",
    "casimir_scalar",
    "closed_form_singular",
    "find_singular",
    "generator_bracket",
    "irreducibility_probe",
    "modified_casimir",
    "multiply",
    "straighten",
    "vacuum_module",
    "verify_phi_relations",
]
