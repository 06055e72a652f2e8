"""Exact linear algebra over the rationals, backed by sympy's DomainMatrix."""
# linalg.py

import logging
from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

_LOGGER = logging.getLogger(__name__)

Vector = list[Fraction]


def _to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    entries = [[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in row] for row in rows]
    return DomainMatrix(entries, (len(entries), ncols), QQ)


def kernel(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of the right null space of a rational matrix.

    The basis is read off the reduced row echelon form: one vector per free
    column, with a 1 in that column.
    """
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]

    reduced, pivots = _to_domain(rows, ncols).rref()
    echelon = reduced.to_Matrix()
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in (j for j in range(ncols) if j not in pivot_set):
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for r, pivot in enumerate(pivots):
            entry = echelon[r, free]
            if entry != 0:
                vector[pivot] = -Fraction(int(entry.p), int(entry.q))
        basis.append(vector)
    _LOGGER.debug("Kernel of %dx%d matrix has dimension %d", len(rows), ncols, len(basis))
    return basis


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank of a rational matrix."""
    if not rows or ncols == 0:
        return 0
    return int(_to_domain(rows, ncols).rank())
