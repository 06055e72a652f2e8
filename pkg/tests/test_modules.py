"""Tests for base modules and truncated induced modules."""

from fractions import Fraction
from itertools import product

import pytest

from nwlab.algebra import A, B, C, D, LieElement, LoopGenerator, casimir_scalar, generator_bracket
from nwlab.enveloping import modified_casimir, straighten
from nwlab.exceptions import InvalidTruncation, LevelMismatch, ParameterMismatch, TruncationOverflow
from nwlab.modules import (
    InducedModule,
    IntermediateModule,
    ModuleState,
    TrivialModule,
    VermaModule,
    base_act,
    vacuum_module,
)
from tests.utils import all_generators, random_states, state, word


def test_vacuum_graded_dims():
    """Test graded dimensions 1, 4, 14, 40 of V(l, 0)."""
    module = vacuum_module(1, 3)
    assert [module.graded_dim(ht) for ht in range(4)] == [1, 4, 14, 40]


def test_trivial_module():
    """Test that only d acts on the trivial module."""
    base = TrivialModule(Fraction(7))
    assert base_act(D, 0, base) == {0: Fraction(7)}
    assert base_act(A, 0, base) == {}
    assert base.c_value == 0


def test_verma_module_action():
    """Test a b^k v = k c b^(k-1) v and the weights d - k."""
    base = VermaModule(Fraction(3), Fraction(1, 2), b_power_cap=4)
    assert base_act(A, 3, base) == {2: Fraction(9)}
    assert base_act(A, 0, base) == {}
    assert base_act(B, 2, base) == {3: Fraction(1)}
    assert base.weight(2) == Fraction(-3, 2)
    assert base.indices_for_weight(Fraction(-1, 2)) == (1,)
    with pytest.raises(TruncationOverflow):
        base_act(B, 4, base)


def test_intermediate_module_action():
    """Test the intermediate series relations and the window."""
    base = IntermediateModule(Fraction(1, 3), Fraction(-1), Fraction(1, 5), window=2)
    assert base_act(A, 0, base) == {1: Fraction(1)}
    assert base_act(B, 1, base) == {0: Fraction(1, 3) + Fraction(1, 5) + 1}
    assert base_act(D, -1, base) == {-1: Fraction(-2, 3)}
    with pytest.raises(TruncationOverflow):
        base_act(A, 2, base)
    assert base.indices_for_weight(Fraction(4, 3)) == (1,)
    assert base.indices_for_weight(Fraction(1, 2)) == ()


def test_truncation_checks():
    """Test depth, window and cap validation."""
    with pytest.raises(InvalidTruncation):
        InducedModule(1, TrivialModule(), -1)
    with pytest.raises(InvalidTruncation):
        InducedModule(1, IntermediateModule(window=3), 2)
    module = InducedModule(1, VermaModule(1, 0), 2)
    assert module.base.b_power_cap == 8


def test_depth_overflow(vacuum):
    """Test that lowering past the depth raises."""
    deep = vacuum.apply_word(word("a:-2 b:-2"))
    with pytest.raises(TruncationOverflow):
        vacuum.act(LoopGenerator(C, -1), deep)


def test_positive_modes_kill_top(vacuum):
    """Test that positive modes annihilate the base layer."""
    top = vacuum.highest_vector()
    for tag in (A, B, C, D):
        assert vacuum.act(LoopGenerator(tag, 1), top).is_zero


def test_lowering_builds_pbw_basis(vacuum):
    """Test that applying a canonical word gives the basis vector."""
    w = word("c:-2 d:-1 a:-1")
    assert vacuum.apply_word(w) == ModuleState.basis((w, 0))


def test_act_element_matches_words(verma_plus):
    """Test that the action of a normal form equals the action of the word."""
    w = word("b:0 a:1 c:-1 b:-1")
    expected = verma_plus.apply_word(w)
    assert verma_plus.act_element(straighten(w, 1), verma_plus.highest_vector()) == expected


def test_act_element_level_mismatch(verma_plus):
    """Test that elements of another level are rejected."""
    with pytest.raises(LevelMismatch):
        verma_plus.act_element(straighten(word("b:-1"), 2), verma_plus.highest_vector())


@pytest.mark.parametrize(
    "module,indices",
    [
        (vacuum_module(1, 7), None),
        (InducedModule(Fraction(5, 3), VermaModule(Fraction(-1), Fraction(0)), 7), range(4)),
        (InducedModule(1, IntermediateModule(Fraction(1, 3), Fraction(-1), Fraction(1, 5), 16), 7), range(-2, 3)),
    ],
)
def test_module_relations(module, indices):
    """Test x(m) y(n) - y(n) x(m) = [x(m), y(n)] for |m|, |n| <= 2 on states of height at most 3."""
    gens = all_generators(2)
    vectors = random_states(module, 4, max_height=3, indices=indices)
    for x, y in product(gens, gens):
        commutator = generator_bracket(x, y)
        for vector in vectors:
            lhs = module.act(x, module.act(y, vector)) - module.act(y, module.act(x, vector))
            assert lhs == module.act_lie(commutator, vector), (x, y, vector)


def test_weight_of(verma_plus):
    """Test the (c, d) eigenvalues of an eigenvector."""
    vector = state(("c:-1", 1, 1), ("b:-1", 0, 1))
    assert verma_plus.weight_of(vector) == (Fraction(-1), Fraction(-1))
    assert verma_plus.weight_of(ModuleState()) is None
    mixed = state(("a:-1", 0, 1), ("b:-1", 0, 1))
    assert verma_plus.weight_of(mixed) is None


def test_act_lie_with_central():
    """Test that k acts by the level."""
    module = vacuum_module(3, 1)
    top = module.highest_vector()
    assert module.act_lie(LieElement.k(2), top) == top * 6


def test_bigraded_dims(verma_plus):
    """Test bigraded dimensions of the Verma induced module at height 1."""
    # b(-1) v, c(-1) b v, d(-1) b v and a(-1) b^2 v
    assert verma_plus.bigraded_dim(1, -1) == 4
    assert set(verma_plus.component_basis(1, -1)) == {
        (word("b:-1"), 0), (word("c:-1"), 1), (word("d:-1"), 1), (word("a:-1"), 2),
    }


@pytest.mark.parametrize("base", [VermaModule(1, 0), IntermediateModule(window=2)])
def test_graded_dim_needs_a_weight(base):
    """Test that height components over infinite bases are refused."""
    module = InducedModule(1, base, 1)
    with pytest.raises(ParameterMismatch):
        module.graded_dim(1)
    assert module.bigraded_dim(0, base.weight(0)) == 1


@pytest.mark.parametrize("level,c,d", [(1, Fraction(-1), Fraction(0)), (Fraction(2, 3), Fraction(1, 2), Fraction(5, 4))])
def test_modified_casimir_scalar(level, c, d):
    """Test that the modified Casimir acts by c(2d + 1) - c^2 / l on b^k v."""
    module = InducedModule(level, VermaModule(c, d), 1)
    element = modified_casimir(level)
    expected = c * (2 * d + 1) - c * c / level
    assert casimir_scalar(level, c, d) == expected
    for k in range(4):
        vector = module.highest_vector(k)
        assert module.act_element(element, vector) == vector * expected


def test_action_cache_is_bounded(monkeypatch):
    """Test that a full action cache is emptied and results do not change."""
    w = word("b:-2 c:-1 a:-1")
    expected = vacuum_module(1, 4).apply_word(w)
    monkeypatch.setattr("nwlab.modules.ACTION_CACHE_SIZE", 2)
    module = vacuum_module(1, 4)
    assert module.apply_word(w) == expected
    assert len(module._cache) <= 2
    module.clear_cache()
    assert not module._cache
    assert module.apply_word(w) == expected
