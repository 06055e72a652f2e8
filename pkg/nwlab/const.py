"""
Constants used across the nwlab package.
"""
# const.py

import logging
from typing import Final

# --- Logger Setup ---
_LOGGER: logging.Logger = logging.getLogger(__name__)

# --- Domain Information ---
DOMAIN: Final[str] = "nwlab"
VERSION: Final[str] = "2026.10.0"
COMPONENT_TITLE: Final[str] = "Affine Nappi-Witten laboratory"

# --- Generators ---
# Canonical total order of the H4 basis, used by PBW straightening.
GENERATOR_ORDER: Final[tuple[str, ...]] = ("d", "c", "a", "b")
CENTRAL_SYMBOL: Final[str] = "k"

# --- Configuration Constants ---
ENV_DEPTH_LIMIT: Final[str] = "NWLAB_DEPTH_LIMIT"
DEFAULT_DEPTH_LIMIT: Final[int] = 8
DEFAULT_WINDOW: Final[int] = 8
# b-power cap of a Verma base is B_POWER_FACTOR * depth + B_POWER_MARGIN
B_POWER_FACTOR: Final[int] = 3
B_POWER_MARGIN: Final[int] = 2
DEFAULT_GAMMA_ZERO_CAP: Final[int] = 4

# --- Memoization bounds ---
NORMAL_FORM_CACHE_SIZE: Final[int] = 1 << 17
BRACKET_CACHE_SIZE: Final[int] = 1 << 12
MONOMIAL_CACHE_SIZE: Final[int] = 64
# An action cache holding this many entries is emptied before the next insert
ACTION_CACHE_SIZE: Final[int] = 1 << 18

# --- Base module kinds ---
KIND_TRIVIAL: Final[str] = "TrivialL"
KIND_VERMA: Final[str] = "VermaM"
KIND_INTERMEDIATE: Final[str] = "Intermediate"

# --- Closed-form singular vector cases ---
CASE_PLUS: Final[str] = "PlusM"
CASE_MINUS: Final[str] = "MinusM"
CASE_LEVEL_ZERO: Final[str] = "LevelZero"

# --- Image classification for the free-field map ---
TYPE_VACUUM: Final[str] = "VacuumType"
TYPE_GENERALIZED_VERMA: Final[str] = "GeneralizedVermaType"

# --- JSON fields ---
JSON_TERMS: Final[str] = "terms"
JSON_CENTRAL: Final[str] = "k"
JSON_GEN: Final[str] = "gen"
JSON_MODE: Final[str] = "mode"
JSON_COEFF: Final[str] = "coeff"
JSON_WORD: Final[str] = "word"
JSON_LEVEL: Final[str] = "level"
JSON_BASE: Final[str] = "base"
JSON_KIND: Final[str] = "kind"

# --- Exit codes ---
EXIT_OK: Final[int] = 0
EXIT_VERIFICATION_FAILED: Final[int] = 1
EXIT_USAGE: Final[int] = 2

_LOGGER.debug("Constants loaded for %s", DOMAIN)
