"""Shared fixtures for the nwlab tests."""

from fractions import Fraction

import pytest

from nwlab.modules import InducedModule, VermaModule, vacuum_module
from nwlab.vertex import VertexAlgebra


@pytest.fixture
def vacuum():
    """The vacuum module V(1, 0) truncated at height 4."""
    return vacuum_module(1, 4)


@pytest.fixture
def verma_plus():
    """Induced module over the Verma module with c = -1, d = 0 at level 1."""
    return InducedModule(1, VermaModule(Fraction(-1), Fraction(0)), 4)


@pytest.fixture(scope="module")
def vertex_algebra():
    """The vertex algebra V(1, 0), deep enough for modes |m|, |n| <= 2 on height-2 states."""
    return VertexAlgebra(1, 6)


@pytest.fixture(scope="module")
def deep_vertex_algebra():
    """The vertex algebra V(1, 0), deep enough for modes |m|, |n| <= 2 on height-3 states."""
    return VertexAlgebra(1, 12)


@pytest.fixture(scope="module")
def deep_verma():
    """Induced module over VermaM(-1, 0) at level 1 truncated at height 10."""
    return InducedModule(1, VermaModule(Fraction(-1), Fraction(0)), 10)
