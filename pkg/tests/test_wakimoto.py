"""Tests for the free-field realization on the tensor Fock module."""

from fractions import Fraction

import pytest

from nwlab.algebra import A, B, C, LoopGenerator
from nwlab.const import TYPE_GENERALIZED_VERMA, TYPE_VACUUM
from nwlab.exceptions import ZeroLevel
from nwlab.fock import GAMMA, P, Oscillator, TensorFockState
from nwlab.modules import ModuleState
from nwlab.wakimoto import (
    TensorFockModule,
    central_term,
    compare_graded_dims,
    gamma0_cokernel_witness,
    highest_weight_of_image,
    phi_image,
    verify_field_correspondence,
    verify_phi_relations,
    verify_vertex_consistency,
)
from tests.utils import word

WEIGHTS = [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(-2))]


@pytest.mark.parametrize("level", [1, 3, Fraction(-2, 5)])
@pytest.mark.parametrize("alpha", WEIGHTS)
def test_phi_relations(level, alpha):
    """Test that the free-field map respects every bracket for |m|, |n| <= 1."""
    report = verify_phi_relations(level, *alpha, max_mode=1, max_depth=1)
    assert len(report.relations) == 10
    assert report.passed, [check for check in report.relations if not check.passed]


@pytest.mark.slow
@pytest.mark.parametrize("level", [1, 3])
@pytest.mark.parametrize("alpha", WEIGHTS[:3])
def test_phi_relations_deeper(level, alpha):
    """Test the relations for |m|, |n| <= 2 on vectors of degree <= 4."""
    report = verify_phi_relations(level, *alpha, max_mode=2, max_depth=4)
    assert report.passed, [check for check in report.relations if not check.passed]


@pytest.mark.slow
def test_phi_relations_rational_weight():
    """Test the relations for |m|, |n| <= 2 at a non-integral weight and even level."""
    assert verify_phi_relations(2, Fraction(1, 3), 1, max_mode=2, max_depth=2)


@pytest.mark.parametrize("level", [1, 3])
@pytest.mark.parametrize("m", [1, 2, -1])
def test_central_term(level, m):
    """Test that [a(m), b(-m)] - c(0) acts on the vacuum by m l."""
    assert central_term(level, 1, 0, m) == m * level


@pytest.mark.parametrize(
    "level,alpha,expected",
    [
        (1, (0, 0), (0, 0, TYPE_VACUUM)),
        (1, (0, 2), (0, 2, TYPE_VACUUM)),
        (2, (1, 3), (1, Fraction(25, 4), TYPE_GENERALIZED_VERMA)),
        (Fraction(1, 2), (-1, 0), (-1, -1, TYPE_GENERALIZED_VERMA)),
    ],
)
def test_highest_weight_of_image(level, alpha, expected):
    """Test c = (p, alpha) and d = l (q, alpha) + (p, alpha) / 2l on the vacuum."""
    top = highest_weight_of_image(level, *alpha)
    assert (top.c, top.d, top.kind) == expected


def test_image_of_lowering_words():
    """Test the images of a(-1), c(-1) and b(-1) on the Fock vacuum."""
    module = TensorFockModule(2, 0, 0, depth=2)
    assert phi_image(ModuleState.basis((word("a:-1"), 0)), module) == TensorFockState.basis(
        ((Oscillator("beta", -1),), ())
    )
    assert phi_image(ModuleState.basis((word("c:-1"), 0)), module) == TensorFockState.basis(
        ((), (Oscillator(P, -1),))
    )
    # -l n gamma(n) plus p(-1) gamma(0); p(0) gamma(-1) vanishes at alpha = 0
    image = module.act(LoopGenerator(B, -1), module.vacuum())
    assert image == TensorFockState.basis(((Oscillator(GAMMA, -1),), ())) * 2 + TensorFockState.basis(
        ((Oscillator(GAMMA, 0),), (Oscillator(P, -1),))
    )


def test_gamma0_not_in_image():
    """Test that gamma(0)1 lies outside the image of the vacuum module."""
    witness = gamma0_cokernel_witness(depth=2)
    assert witness.excluded
    assert witness.span_dims[0] == 1
    assert witness.span_dim <= sum(witness.fock_dims)


def test_graded_dims_match_generalized_verma():
    """Test that the Fock module and the matching Verma-induced module have equal bigraded dimensions."""
    comparison = compare_graded_dims(1, 1, 0, depth=2, cap=2)
    assert comparison.rows
    assert comparison.agree


def test_vertex_consistency():
    """Test Y(v, x) on the Fock vacuum against the composed free-field images."""
    assert verify_vertex_consistency(1, max_height=2)


@pytest.mark.parametrize("alpha", [(0, 0), (1, Fraction(1, 2))])
def test_field_correspondence(alpha):
    """Test that generator fields act on the Fock module as their images."""
    result = verify_field_correspondence(1, *alpha, max_mode=1, max_height=1)
    assert result, result.detail


def test_zero_level_rejected():
    """Test that the realization needs a nonzero level."""
    with pytest.raises(ZeroLevel):
        TensorFockModule(0)
    with pytest.raises(ZeroLevel):
        verify_phi_relations(0, 0, 0, max_mode=1, max_depth=1)


def test_raising_modes_kill_vacuum():
    """Test that a(0) and the positive modes annihilate the Fock vacuum."""
    module = TensorFockModule(1, Fraction(1, 2), 0, depth=2)
    for gen in (LoopGenerator(A, 0), LoopGenerator(C, 1), LoopGenerator(B, 2)):
        assert module.act(gen, module.vacuum()).is_zero


def test_fock_action_cache_is_bounded(monkeypatch):
    """Test that the Fock action cache stays within its bound and can be cleared."""
    lowering = [LoopGenerator(tag, -1) for tag in (A, B, C)]
    reference = TensorFockModule(1, 1, 0, depth=3)
    expected = reference.vacuum()
    for gen in lowering:
        expected = reference.act(gen, expected)
    monkeypatch.setattr("nwlab.wakimoto.ACTION_CACHE_SIZE", 1)
    module = TensorFockModule(1, 1, 0, depth=3)
    state = module.vacuum()
    for gen in lowering:
        state = module.act(gen, state)
    assert state == expected
    assert len(module._cache) <= 1
    module.clear_cache()
    assert not module._cache
