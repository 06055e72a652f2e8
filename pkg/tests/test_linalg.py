"""Tests for exact rational kernels and ranks."""

from fractions import Fraction

from nwlab.linalg import kernel, rank


def _apply(rows, vector):
    return [sum(x * y for x, y in zip(row, vector)) for row in rows]


def test_kernel_of_rank_one_matrix():
    """Test the null space of a rank-one matrix."""
    rows = [[Fraction(1), Fraction(2), Fraction(-1)], [Fraction(2), Fraction(4), Fraction(-2)]]
    basis = kernel(rows, 3)
    assert len(basis) == 2
    for vector in basis:
        assert _apply(rows, vector) == [0, 0]
    assert rank(rows, 3) == 1


def test_kernel_with_fractions():
    """Test exactness with rational entries."""
    rows = [[Fraction(1, 3), Fraction(-1, 2)]]
    (vector,) = kernel(rows, 2)
    assert vector == [Fraction(3, 2), Fraction(1)]


def test_trivial_kernel():
    """Test an invertible matrix and degenerate shapes."""
    rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    assert kernel(rows, 2) == []
    assert rank(rows, 2) == 2
    assert kernel([], 2) == [[1, 0], [0, 1]]
    assert kernel(rows, 0) == []
    assert rank([], 3) == 0
