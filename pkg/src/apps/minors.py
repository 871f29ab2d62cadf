"""Determinants and ideals of minors."""

import logging
from itertools import combinations

from src.ideals.models import Ideal
from src.rings.models import RingKind
from src.rings.presentation import RingElem
from .models import Matrix, MatrixError

logger = logging.getLogger(__name__)


def _bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination over Z; every division is exact."""
    a = [row[:] for row in rows]
    size = len(a)
    sign, previous = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[-1][-1]


def _cofactor_expansion(rows: list[list[RingElem]], zero: RingElem) -> RingElem:
    if len(rows) == 1:
        return rows[0][0]
    total = zero
    for j, pivot in enumerate(rows[0]):
        if pivot.is_zero:
            continue
        rest = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = pivot * _cofactor_expansion(rest, zero)
        total = total - term if j % 2 else total + term
    return total


def determinant(matrix: Matrix) -> RingElem:
    """Determinant of a square matrix; the empty determinant is 1."""
    if matrix.rows != matrix.cols:
        raise MatrixError(f"Determinant of a {matrix.rows}x{matrix.cols} matrix")
    ring = matrix.ring
    if matrix.rows == 0:
        return ring.one
    if ring.kind == RingKind.INTEGERS:
        return ring.element(_bareiss([[int(x.value) for x in row] for row in matrix.entries]))
    return _cofactor_expansion(matrix.entries, ring.zero)


def minor(matrix: Matrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> RingElem:
    return determinant(matrix.submatrix(list(rows), list(cols)))


def minors(matrix: Matrix, m: int) -> Ideal:
    """The ideal generated by all m x m minors.

    Raises:
        MatrixError: m is negative or exceeds min(rows, cols)
    """
    if m < 0 or m > min(matrix.rows, matrix.cols):
        raise MatrixError(
            f"No {m}-minors in a {matrix.rows}x{matrix.cols} matrix", ring=matrix.ring.spec
        )
    if m == 0:
        return Ideal.unit(matrix.ring)
    values = [
        minor(matrix, rows, cols)
        for rows in combinations(range(matrix.rows), m)
        for cols in combinations(range(matrix.cols), m)
    ]
    logger.debug(f"{len(values)} minors of size {m} in {matrix}")
    return Ideal(matrix.ring, values).deduplicated()
