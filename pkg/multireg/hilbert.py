"""Multigraded Hilbert functions of fat point schemes via interpolation matrices."""
from __future__ import annotations

import asyncio
import csv
import io
import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np

from .exact_linalg import QQ, DenseMatrix, Field, PrimeField, rank
from .exceptions import UnsupportedShapeError, UsageError
from .fat_points import FatPointScheme, MultiPoint, degree
from .multigraded_ring import (
    Monomial,
    Multidegree,
    box_degrees,
    degrees_of_total,
    factor_exponents,
    monomial_basis,
    unit_vector,
)

_LOGGER = logging.getLogger(__name__)

RowLabel = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class ConditionMatrix:
    """Taylor conditions of a scheme against the monomials of one multidegree."""

    matrix: DenseMatrix
    row_labels: tuple[RowLabel, ...]
    col_labels: tuple[Monomial, ...]


def chart(point: MultiPoint) -> tuple[int, ...]:
    """Index of the largest absolute coordinate in each factor, first on ties."""
    return tuple(
        max(range(len(vec)), key=lambda idx, vec=vec: (abs(vec[idx]), -idx))
        for vec in point.coords
    )


def taylor_orders(num_vars: int, mult: int) -> list[tuple[int, ...]]:
    """Multi-indices alpha in N^num_vars with |alpha| < mult, by total order."""
    return [
        alpha
        for total in range(mult)
        for alpha in factor_exponents(num_vars - 1, total)
    ]


def _factor_row(
    vec: tuple[int, ...], center: int, alpha: tuple[int, ...], deg: int
) -> np.ndarray:
    """Taylor coefficient alpha at vec of every monomial of one factor.

    The chart coordinate stays fixed at its value and the others are shifted,
    which keeps every entry an integer.
    """
    free = [idx for idx in range(len(vec)) if idx != center]
    row = []
    for expo in factor_exponents(len(vec) - 1, deg):
        entry = vec[center] ** expo[center]
        for idx, order in zip(free, alpha):
            if order > expo[idx]:
                entry = 0
                break
            entry *= math.comb(expo[idx], order) * vec[idx] ** (expo[idx] - order)
        row.append(entry)
    return np.array(row, dtype=object)


def condition_matrix(
    z: FatPointScheme, d: Sequence[int], field: Optional[Field] = None
) -> ConditionMatrix:
    """Return the matrix whose kernel is (I_Z)_d.

    Row (j, alpha) holds the alpha-th Taylor coefficient at P_j of each basis
    monomial of degree d; columns follow monomial_basis.
    """
    field = field or QQ
    d = z.shape.check_degree(d)
    if any(x < 0 for x in d):
        raise UsageError(f"Multidegree {d} has a negative coordinate")
    if isinstance(field, PrimeField):
        _check_chart_units(z, field)
    columns = tuple(monomial_basis(z.shape, d))
    offsets = list(itertools.accumulate(z.shape.factors, initial=0))

    rows = []
    labels = []
    for index, (point, mult) in enumerate(z.points):
        centers = chart(point)
        cache: dict[tuple[int, tuple[int, ...]], np.ndarray] = {}
        for alpha in taylor_orders(z.shape.dimension, mult):
            pieces = []
            for f, (vec, center) in enumerate(zip(point.coords, centers)):
                part = alpha[offsets[f] : offsets[f + 1]]
                key = (f, part)
                if key not in cache:
                    cache[key] = _factor_row(vec, center, part, d[f])
                pieces.append(cache[key])
            rows.append(reduce(lambda x, y: np.multiply.outer(x, y).ravel(), pieces))
            labels.append((index, alpha))

    integral = np.array(rows, dtype=object).reshape(len(rows), len(columns))
    return ConditionMatrix(
        DenseMatrix.from_integers(integral, field), tuple(labels), columns
    )


class HilbertTable:
    """Memoized multigraded Hilbert function H_Z of a fat point scheme.

    Values are ranks of condition matrices and are never evicted. With
    shortcut enabled, a cell one step above a cell already at deg Z takes
    the value deg Z without a rank computation.
    """

    def __init__(
        self, scheme: FatPointScheme, field: Optional[Field] = None, shortcut: bool = True
    ) -> None:
        """Initialize HilbertTable."""
        self.scheme = scheme
        self.field = field or QQ
        self.shortcut = shortcut
        self.degree = degree(scheme)
        self._values: dict[Multidegree, int] = {}

    @property
    def k(self) -> int:
        """Return the number of factors."""
        return self.scheme.shape.k

    def _check(self, d: Sequence[int]) -> Multidegree:
        d = self.scheme.shape.check_degree(d)
        if any(x < 0 for x in d):
            raise UsageError(f"Multidegree {d} has a negative coordinate")
        return d

    def hilbert_value(self, d: Sequence[int]) -> int:
        """Return H_Z(d)."""
        d = self._check(d)
        value = self._values.get(d)
        if value is None:
            value = self._compute(d)
            self._values[d] = value
        return value

    def _compute(self, d: Multidegree) -> int:
        if self.shortcut:
            for axis in range(self.k):
                if d[axis] == 0:
                    continue
                below = tuple(x - e for x, e in zip(d, unit_vector(self.k, axis)))
                if self._values.get(below) == self.degree:
                    return self.degree
        value = rank(condition_matrix(self.scheme, d, self.field).matrix)
        _LOGGER.debug("H%s = %s", d, value)
        return value

    def hilbert_box(self, box: Sequence[int]) -> np.ndarray:
        """Return the array of H_Z(d) for all d <= box, first coordinate as row."""
        box = self._check(box)
        table = np.zeros(tuple(x + 1 for x in box), dtype=np.int64)
        for d in box_degrees(box):
            table[d] = self.hilbert_value(d)
        return table

    async def async_fill(self, box: Sequence[int]) -> np.ndarray:
        """Compute every missing cell of box concurrently, then return the box."""
        box = self._check(box)
        loop = asyncio.get_running_loop()
        missing = [d for d in box_degrees(box) if d not in self._values]
        _LOGGER.debug("Filling %s cells of box %s", len(missing), box)
        await asyncio.gather(
            *(loop.run_in_executor(None, self.hilbert_value, d) for d in missing)
        )
        return self.hilbert_box(box)

    def coarse_hilbert(self, t: int) -> int:
        """Return the N^1-graded value H(t) = sum of H_Z(d) over |d| = t."""
        if t < 0:
            raise UsageError(f"Coarse degree {t} is negative")
        return sum(self.hilbert_value(d) for d in degrees_of_total(self.k, t))

    def first_difference(self, box: Sequence[int]) -> np.ndarray:
        """Return the bigraded first difference of H_Z over box."""
        if self.k != 2:
            raise UnsupportedShapeError("The first difference is defined for k = 2 only")
        values = np.pad(self.hilbert_box(box), ((1, 0), (1, 0)))
        return values[1:, 1:] - values[:-1, 1:] - values[1:, :-1] + values[:-1, :-1]

    def to_csv(self, box: Sequence[int]) -> str:
        """Export the box as CSV with degree indices as headers."""
        box = self._check(box)
        table = self.hilbert_box(box)
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        if self.k == 2:
            writer.writerow(["i\\j"] + list(range(table.shape[1])))
            for i, row in enumerate(table):
                writer.writerow([i] + [int(v) for v in row])
        else:
            writer.writerow([f"i{j + 1}" for j in range(self.k)] + ["value"])
            for d in box_degrees(box):
                writer.writerow(list(d) + [int(table[d])])
        return out.getvalue()


def _check_chart_units(z: FatPointScheme, field: PrimeField) -> None:
    """Reject points whose chart coordinate vanishes mod p."""
    for point in z.support:
        for vec, center in zip(point.coords, chart(point)):
            if vec[center] % field.p == 0:
                raise UsageError(f"Point {point} degenerates modulo {field.p}")
