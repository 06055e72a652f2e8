"""Tests for the affine Nappi-Witten Lie algebra."""

from fractions import Fraction
from itertools import product

import pytest

from nwlab.algebra import (
    A,
    B,
    C,
    D,
    GeneratorTag,
    LieElement,
    LoopGenerator,
    bracket,
    casimir_scalar,
    form,
    generator_bracket,
    h4_bracket,
)
from nwlab.exceptions import ZeroLevel
from tests.utils import all_generators


def _lie(gen: LoopGenerator) -> LieElement:
    return LieElement.generator(gen.tag, gen.mode)


def test_h4_structure():
    """Test the defining brackets of H4."""
    assert h4_bracket(A, B) == ((C, 1),)
    assert h4_bracket(D, A) == ((A, 1),)
    assert h4_bracket(D, B) == ((B, -1),)
    assert h4_bracket(C, D) == ()
    assert form(A, B) == form(C, D) == 1
    assert form(A, A) == form(A, C) == form(D, D) == 0


def test_loop_bracket_central_term():
    """Test [a(2), b(-2)] = c(0) + 2k."""
    result = generator_bracket(LoopGenerator(A, 2), LoopGenerator(B, -2))
    assert result == LieElement.generator(C, 0) + LieElement.k(2)
    assert result.degree() == 0


def test_bracket_with_k_vanishes():
    """Test that k is central."""
    assert bracket(LieElement.k(), LieElement.generator(D, 3)).is_zero


def test_antisymmetry():
    """Test [x, y] = -[y, x] for all generators with |mode| <= 3."""
    gens = all_generators(3)
    for x, y in product(gens, gens):
        assert generator_bracket(x, y) == -generator_bracket(y, x)


def test_jacobi():
    """Test the Jacobi identity on all generator triples with |mode| <= 3."""
    gens = [_lie(gen) for gen in all_generators(3)]
    for x, y, z in product(gens, gens, gens):
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert total.is_zero, (x, y, z)


def test_form_invariance():
    """Test ([x, y], z) = (x, [y, z]) on H4."""
    def pair(terms, tag):
        return sum((coeff * form(t, tag) for t, coeff in terms), Fraction(0))

    for x, y, z in product(GeneratorTag, repeat=3):
        assert pair(h4_bracket(x, y), z) == pair(h4_bracket(y, z), x)


def test_degree():
    """Test the standard degree of homogeneous and mixed elements."""
    assert LieElement.generator(A, -3).degree() == -3
    assert LieElement.k().degree() == 0
    assert (LieElement.generator(A, 1) + LieElement.generator(B, 2)).degree() is None
    assert LieElement().degree() is None


def test_parse_generator():
    """Test generator literals."""
    assert LoopGenerator.parse("a:-1") == LoopGenerator(A, -1)
    assert str(LoopGenerator(D, 2)) == "d(2)"
    with pytest.raises(ValueError):
        LoopGenerator.parse("e:1")
    with pytest.raises(ValueError):
        LoopGenerator.parse("a1")


def test_casimir_scalar():
    """Test c(2d + 1) - c^2 / level and its zero-level guard."""
    assert casimir_scalar(1, -1, 0) == -2
    assert casimir_scalar(2, 3, Fraction(1, 2)) == Fraction(3, 2)
    with pytest.raises(ZeroLevel):
        casimir_scalar(0, 1, 1)
