"""Tests for singular vectors of induced modules."""

from fractions import Fraction

import pytest

from nwlab.algebra import A, B, C, D, LoopGenerator
from nwlab.exceptions import ParameterMismatch, TruncationTooShallow, ZeroLevel
from nwlab.modules import InducedModule, IntermediateModule, ModuleState, TrivialModule, VermaModule, vacuum_module
from nwlab.partitions import Partition, partitions_up_to
from nwlab.singular import (
    Component,
    Grading,
    LoopCase,
    RaisingSet,
    SingularCase,
    closed_form_singular,
    find_singular,
    in_span,
    loop_singular_generators,
    match_closed_forms,
    minus_coefficients,
    plus_coefficients,
    proper_submodule_witness,
    verify_singular,
)
from tests.utils import proportional, state

NEW = Grading.NEW_TRIANGULAR


def _verma(level, c, d, depth):
    return InducedModule(level, VermaModule(Fraction(c), Fraction(d)), depth)


def test_raising_set():
    """Test the operators of both decompositions."""
    assert len(RaisingSet(Grading.STANDARD, 2).operators()) == 8
    new = RaisingSet(NEW, 1).operators()
    assert new[0] == LoopGenerator(A, 0)
    assert len(new) == 5


def test_raising_modes_must_reach_height():
    """Test that a too small raising set is rejected."""
    with pytest.raises(TruncationTooShallow):
        find_singular(vacuum_module(1, 2), Component(2), RaisingSet(Grading.STANDARD, 1))


@pytest.mark.parametrize("d", [0, 7])
@pytest.mark.parametrize("ht", [1, 2, 3, 4])
def test_vacuum_has_no_singular_vectors(d, ht):
    """Test empty kernels of V(1, d) at heights 1 to 4."""
    module = InducedModule(1, TrivialModule(Fraction(d)), ht)
    report = find_singular(module, Component(ht), RaisingSet(Grading.STANDARD, ht))
    assert report.dimension == 0


def test_level_zero_height_one():
    """Test that at level 0 the height-1 kernel is spanned by x(-1) v."""
    module = vacuum_module(0, 1)
    report = find_singular(module, Component(1), RaisingSet(Grading.STANDARD, 1))
    assert report.dimension == 4
    for tag in (A, B, C, D):
        assert in_span(module.apply_word((LoopGenerator(tag, -1),)), report.kernel)


@pytest.mark.parametrize("ht", [1, 2, 3, 4])
def test_generic_verma_is_irreducible(ht):
    """Test empty kernels for l = 1, c = 1/2 in every bigraded component."""
    module = _verma(1, Fraction(1, 2), 0, ht)
    for offset in range(-ht, 2 * ht + 1):
        report = find_singular(module, Component(ht, -offset), RaisingSet(NEW, ht))
        assert report.dimension == 0, offset


@pytest.mark.parametrize("level", [1, 2])
@pytest.mark.parametrize("m,k", [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1)])
def test_plus_closed_forms_match_solver(level, m, k):
    """Test that for c = -m l the closed form spans the one-dimensional kernel."""
    module = _verma(level, -m * level, 0, m * k)
    closed = closed_form_singular(module, SingularCase.PLUS, m, k)
    report = find_singular(module, Component(m * k, -k), RaisingSet(NEW, m * k))
    assert report.dimension == 1
    assert proportional(closed, report.kernel[0])
    assert verify_singular(closed, module, RaisingSet(NEW, m * k))
    assert match_closed_forms(report, module) == [f"PlusM:m={m},k={k}"]


@pytest.mark.parametrize("level", [1, 2])
def test_plus_m1_printed_vector(level):
    """Test (c(-1) b / l + b(-1)) v up to scalar."""
    module = _verma(level, -level, 0, 1)
    expected = state(("c:-1", 1, Fraction(1, level)), ("b:-1", 0, 1))
    assert proportional(closed_form_singular(module, SingularCase.PLUS, 1, 1), expected)


@pytest.mark.parametrize("level", [1, 2])
def test_plus_m2_printed_vector(level):
    """Test l c(-2) b + c(-1)^2 b - c c(-1) b(-1) - l c b(-2) up to scalar."""
    c = -2 * level
    module = _verma(level, c, 0, 2)
    expected = state(
        ("c:-2", 1, level),
        ("c:-1 c:-1", 1, 1),
        ("c:-1 b:-1", 0, -c),
        ("b:-2", 0, -level * c),
    )
    assert proportional(closed_form_singular(module, SingularCase.PLUS, 2, 1), expected)


@pytest.mark.parametrize("level", [1, 2])
@pytest.mark.parametrize("m,k", [(1, 1), (1, 2), (2, 1)])
def test_minus_closed_forms_are_singular(level, m, k):
    """Test that for c = m l the closed form from the minus coefficients lies in the solver kernel."""
    module = _verma(level, m * level, 0, m * k)
    closed = closed_form_singular(module, SingularCase.MINUS, m, k)
    assert not closed.is_zero
    report = find_singular(module, Component(m * k, k), RaisingSet(NEW, m * k))
    assert in_span(closed, report.kernel)
    assert f"MinusM:m={m},k={k}" in match_closed_forms(report, module)


@pytest.mark.parametrize("lam", partitions_up_to(3), ids=str)
def test_level_zero_c_vectors(lam):
    """Test that c(-lambda) v is singular at level 0."""
    module = _verma(0, 1, 0, lam.weight)
    vector = module.apply_word(tuple(LoopGenerator(C, -p) for p in lam.parts))
    assert verify_singular(vector, module, RaisingSet(NEW, lam.weight))
    report = find_singular(module, Component(lam.weight, 0), RaisingSet(NEW, lam.weight))
    assert in_span(vector, report.kernel)


def test_scaling_invariance():
    """Test that rescaling keeps a vector singular."""
    module = _verma(1, -1, 0, 1)
    closed = closed_form_singular(module, SingularCase.PLUS, 1, 1)
    raising = RaisingSet(NEW, 1)
    assert verify_singular(closed * Fraction(-7, 3), module, raising)
    assert not verify_singular(module.apply_word((LoopGenerator(B, -1),)), module, raising)


def test_closed_form_parameter_checks():
    """Test the parameter guards of the closed forms."""
    with pytest.raises(ParameterMismatch):
        closed_form_singular(_verma(1, 1, 0, 1), SingularCase.PLUS, 1, 1)
    with pytest.raises(ZeroLevel):
        closed_form_singular(_verma(0, 0, 0, 1), SingularCase.PLUS, 1, 1)
    with pytest.raises(ValueError):
        closed_form_singular(_verma(1, -1, 0, 1), SingularCase.PLUS, 1, 0)


def test_coefficient_systems():
    """Test the solved coefficients for m = 1 and m = 2."""
    plus = plus_coefficients(1, 1, -1)
    assert plus == {("a", Partition((1,))): 1, ("b", Partition(()), 1): 1}
    plus2 = plus_coefficients(2, 1, -2)
    # c(-2) b, c(-1)^2 b, c(-1) b(-1), b(-2) in the ratio l : 1 : -c : -l c
    assert plus2[("a", Partition((1, 1)))] / plus2[("a", Partition((2,)))] == 1
    assert plus2[("b", Partition((1,)), 1)] / plus2[("a", Partition((2,)))] == 2
    assert plus2[("b", Partition(()), 2)] / plus2[("a", Partition((2,)))] == 2
    minus = minus_coefficients(1, 1, 1)
    assert minus == {("c", Partition(()), 1): 1}


@pytest.fixture
def intermediate():
    """The intermediate series base (1/3, -1, 1/5) with window 8."""
    return IntermediateModule(Fraction(1, 3), Fraction(-1), Fraction(1, 5), 8)


def test_loop_singular_plus(intermediate):
    """Test the m = 1 generator at level 1 on the induced intermediate module."""
    module = InducedModule(1, intermediate, 2)
    (generator,) = loop_singular_generators(module, LoopCase.PLUS, 1)
    assert not generator.is_zero
    assert proper_submodule_witness(module, generator)


def test_loop_singular_minus(intermediate):
    """Test the mirror m = 1 generator at level -1, which needs a c(-1) a(0) term."""
    module = InducedModule(-1, intermediate, 2)
    (generator,) = loop_singular_generators(module, LoopCase.MINUS, 1)
    assert not generator.is_zero
    assert not verify_singular(module.apply_word((LoopGenerator(A, -1),)), module, RaisingSet(Grading.STANDARD, 1))
    assert in_span(module.apply_word((LoopGenerator(A, -1),)) + state(("c:-1", 1, 1)), [generator])
    assert proper_submodule_witness(module, generator)


def test_loop_singular_level_zero(intermediate):
    """Test c(-lambda) v for all |lambda| <= 3 at level 0."""
    module = InducedModule(0, intermediate, 4)
    generators = loop_singular_generators(module, LoopCase.LEVEL_ZERO, max_weight=3)
    assert len(generators) == len(partitions_up_to(3))
    assert all(proper_submodule_witness(module, g) for g in generators)


def test_loop_singular_guards(intermediate):
    """Test the case guards of the loop-singular families."""
    with pytest.raises(ParameterMismatch):
        loop_singular_generators(vacuum_module(1, 1), LoopCase.PLUS)
    with pytest.raises(ParameterMismatch):
        loop_singular_generators(InducedModule(1, intermediate, 2), LoopCase.LEVEL_ZERO)


def test_witness_fails_for_top():
    """Test that the highest vector generates everything."""
    module = vacuum_module(1, 2)
    assert not proper_submodule_witness(module, module.highest_vector())
    assert proper_submodule_witness(module, ModuleState.basis(((LoopGenerator(C, -1),), 0)))
