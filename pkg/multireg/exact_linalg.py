"""Exact field arithmetic and rank of dense matrices over QQ or GF(p)."""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np
from sympy import isprime

from .const import DEFAULT_PRIME, MIN_PRIME, MODE_PRIME, MODE_RATIONAL
from .exceptions import UsageError

_LOGGER = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

# Largest modulus for which products of two residues fit in int64.
_INT64_SAFE_PRIME = 2**31


class RationalField:
    """The field of rational numbers, exact and authoritative."""

    mode = MODE_RATIONAL
    probabilistic = False

    def __repr__(self) -> str:
        """Return the canonical representation."""
        return "RationalField()"

    def __eq__(self, other) -> bool:
        """Check if two fields are equal."""
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        """Hash the field."""
        return hash(MODE_RATIONAL)

    def coerce(self, value: Scalar) -> Scalar:
        """Return the canonical representative of value."""
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return value

    def element(self, value: Scalar) -> FieldElement:
        """Wrap value as a field element."""
        return FieldElement(self.coerce(value), self)

    def array(self, values) -> np.ndarray:
        """Build an object array of canonical values."""
        arr = np.array(values, dtype=object)
        if arr.size:
            arr = np.vectorize(self.coerce, otypes=[object])(arr)
        return arr

    def rank(self, values: np.ndarray) -> int:
        """Rank of a matrix over QQ.

        A rank mod DEFAULT_PRIME equal to min(rows, cols) certifies the
        rational rank; otherwise fraction-free elimination decides.
        """
        integral = _clear_denominators(values)
        rows, cols = integral.shape
        pivots = _echelon_mod(_CERTIFIER.reduce(integral), DEFAULT_PRIME)
        if len(pivots) == min(rows, cols):
            return len(pivots)
        _LOGGER.debug(
            "Modular rank %s below %s, running Bareiss on %sx%s",
            len(pivots),
            min(rows, cols),
            rows,
            cols,
        )
        return _bareiss_rank(integral)


class PrimeField:
    """The prime field GF(p) for a configured prime p > 2**30."""

    mode = MODE_PRIME
    probabilistic = True

    def __init__(self, p: int = DEFAULT_PRIME) -> None:
        """Initialize PrimeField."""
        if isinstance(p, bool) or not isinstance(p, int):
            raise UsageError(f"Prime must be an integer, got {p!r}")
        if p <= MIN_PRIME:
            raise UsageError(f"Prime {p} must exceed 2**30")
        if not isprime(p):
            raise UsageError(f"{p} is not prime")
        self.p = p

    def __repr__(self) -> str:
        """Return the canonical representation."""
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        """Check if two fields are equal."""
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        """Hash the field."""
        return hash((MODE_PRIME, self.p))

    @property
    def dtype(self):
        """Return the numpy dtype holding residues without overflow."""
        return np.int64 if self.p < _INT64_SAFE_PRIME else object

    def coerce(self, value: Scalar) -> int:
        """Return the residue 0 <= v < p of value."""
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise UsageError(f"{value} has no image in GF({self.p})")
        return value.numerator * pow(value.denominator, -1, self.p) % self.p

    def element(self, value: Scalar) -> FieldElement:
        """Wrap value as a field element."""
        return FieldElement(self.coerce(value), self)

    def reduce(self, integral: np.ndarray) -> np.ndarray:
        """Reduce an integer object array into residues of self.dtype."""
        reduced = np.array(integral, dtype=object) % self.p
        return reduced.astype(self.dtype)

    def array(self, values) -> np.ndarray:
        """Build an array of residues."""
        arr = np.array(values, dtype=object)
        if arr.size:
            arr = np.vectorize(self.coerce, otypes=[object])(arr)
        return arr.astype(self.dtype)

    def rank(self, values: np.ndarray) -> int:
        """Rank of a matrix of residues by elimination with modular inverses."""
        return len(_echelon_mod(np.array(values, dtype=self.dtype), self.p))


Field = Union[RationalField, PrimeField]

QQ = RationalField()
_CERTIFIER = PrimeField(DEFAULT_PRIME)


@dataclass(frozen=True)
class FieldElement:
    """An exact scalar tagged with the field it lives in."""

    value: Scalar
    field: Field


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """An immutable dense matrix over a single field."""

    rows: int
    cols: int
    values: np.ndarray
    field: Field = QQ

    def __post_init__(self) -> None:
        """Check the shape and freeze the storage."""
        if self.values.shape != (self.rows, self.cols):
            raise UsageError(
                f"Entries of shape {self.values.shape} do not fit {self.rows}x{self.cols}"
            )
        self.values.flags.writeable = False

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Scalar]], field: Field = QQ, cols: int = None
    ) -> DenseMatrix:
        """Build a matrix from nested rows of scalars."""
        n_rows = len(rows)
        if cols is None:
            cols = len(rows[0]) if n_rows else 0
        if any(len(row) != cols for row in rows):
            raise UsageError("Rows of unequal length")
        values = field.array(rows) if n_rows and cols else _empty(n_rows, cols, field)
        return cls(n_rows, cols, values.reshape(n_rows, cols), field)

    @classmethod
    def from_elements(
        cls, rows: int, cols: int, entries: Sequence[FieldElement]
    ) -> DenseMatrix:
        """Build a matrix from row-major field elements of one field."""
        if len(entries) != rows * cols:
            raise UsageError(f"{len(entries)} entries do not fill {rows}x{cols}")
        fields = {entry.field for entry in entries}
        if len(fields) > 1:
            raise UsageError(f"Mixed-field entries: {sorted(map(repr, fields))}")
        fld = fields.pop() if fields else QQ
        if not entries:
            return cls(rows, cols, _empty(rows, cols, fld), fld)
        values = fld.array([entry.value for entry in entries]).reshape(rows, cols)
        return cls(rows, cols, values, fld)

    @classmethod
    def from_integers(cls, integral: np.ndarray, field: Field = QQ) -> DenseMatrix:
        """Build a matrix from a 2d array of python integers."""
        rows, cols = integral.shape
        if isinstance(field, PrimeField):
            values = field.reduce(integral)
        else:
            values = np.array(integral, dtype=object)
        return cls(rows, cols, values, field)

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        """Return the row-major entries as field elements."""
        return tuple(FieldElement(_python_scalar(v), self.field) for v in self.values.flat)

    def transpose(self) -> DenseMatrix:
        """Return the transposed matrix."""
        return DenseMatrix(self.cols, self.rows, self.values.T.copy(), self.field)


def rank(matrix: DenseMatrix) -> int:
    """Return the rank of matrix over its field."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return matrix.field.rank(matrix.values)


def field_from_config(mode: str, p: int = None) -> Field:
    """Build the field described by a field configuration."""
    if mode == MODE_RATIONAL:
        return QQ
    if mode == MODE_PRIME:
        prime_field = PrimeField(DEFAULT_PRIME if p is None else p)
        _LOGGER.warning(
            "Prime field mode over GF(%s): ranks are probabilistic", prime_field.p
        )
        return prime_field
    raise UsageError(f"Unknown field mode {mode!r}")


def _python_scalar(value) -> Scalar:
    if isinstance(value, Fraction):
        return value
    return int(value)


def _empty(rows: int, cols: int, field: Field) -> np.ndarray:
    dtype = field.dtype if isinstance(field, PrimeField) else object
    return np.zeros((rows, cols), dtype=dtype)


def _clear_denominators(values: np.ndarray) -> np.ndarray:
    """Scale each row by the lcm of its denominators."""
    integral = np.empty(values.shape, dtype=object)
    for idx, row in enumerate(values):
        scale = math.lcm(*(Fraction(x).denominator for x in row)) if len(row) else 1
        integral[idx] = [
            Fraction(x).numerator * (scale // Fraction(x).denominator) for x in row
        ]
    return integral


def _echelon_mod(a: np.ndarray, p: int) -> list[int]:
    """Row reduce a copy of a mod p and return the pivot columns."""
    a = a.copy()
    n_rows, n_cols = a.shape
    pivots = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        factors = a[r + 1 :, c].copy()
        a[r + 1 :, c:] = (a[r + 1 :, c:] - np.multiply.outer(factors, a[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def _bareiss_rank(a: np.ndarray) -> int:
    """Fraction-free elimination of an integer object array, in place."""
    n_rows, n_cols = a.shape
    r = 0
    previous = 1
    for c in range(n_cols):
        if r >= n_rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        lead = a[r, c]
        below = a[r + 1 :, c].copy()
        # every updated entry is a minor of the input, so the division is exact
        a[r + 1 :, c + 1 :] = (
            lead * a[r + 1 :, c + 1 :] - np.multiply.outer(below, a[r, c + 1 :])
        ) // previous
        a[r + 1 :, c] = 0
        previous = lead
        r += 1
    return r
