"""Graded pieces of the coordinate ring of a product of projective spaces."""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import UsageError

Multidegree = tuple[int, ...]


@dataclass(frozen=True)
class SpaceShape:
    """The factors (n_1, ..., n_k) of P^n_1 x ... x P^n_k."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate the factor dimensions."""
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise UsageError("A product needs at least one factor")
        if any(isinstance(n, bool) or not isinstance(n, int) or n < 1 for n in self.factors):
            raise UsageError(f"Factor dimensions must be positive integers: {self.factors}")

    @property
    def k(self) -> int:
        """Return the number of factors."""
        return len(self.factors)

    @property
    def dimension(self) -> int:
        """Return N = n_1 + ... + n_k."""
        return sum(self.factors)

    @property
    def num_variables(self) -> int:
        """Return N + k."""
        return self.dimension + self.k

    def check_degree(self, d: Sequence[int]) -> Multidegree:
        """Return d as a multidegree of this shape, rejecting wrong lengths."""
        d = tuple(int(x) for x in d)
        if len(d) != self.k:
            raise UsageError(f"Multidegree {d} does not have {self.k} coordinates")
        return d

    def __str__(self) -> str:
        """Render as a product of projective spaces."""
        return " x ".join(f"P^{n}" for n in self.factors)


@dataclass(frozen=True)
class Monomial:
    """A monomial with exponents grouped by factor."""

    groups: tuple[tuple[int, ...], ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        """Return the concatenated exponent vector."""
        return tuple(itertools.chain.from_iterable(self.groups))

    @property
    def multidegree(self) -> Multidegree:
        """Return the degree of each group."""
        return tuple(sum(group) for group in self.groups)


def dim_graded_piece(shape: SpaceShape, d: Sequence[int]) -> int:
    """Return dim R_d = prod C(n_j + d_j, n_j)."""
    d = shape.check_degree(d)
    if any(x < 0 for x in d):
        raise UsageError(f"Graded piece of negative degree {d} is zero")
    return math.prod(math.comb(n + x, n) for n, x in zip(shape.factors, d))


@lru_cache(maxsize=None)
def factor_exponents(n: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of length n+1 and given degree, descending lex."""
    if n == 0:
        return ((degree,),)
    return tuple(
        (first,) + rest
        for first in range(degree, -1, -1)
        for rest in factor_exponents(n - 1, degree - first)
    )


def monomial_basis(shape: SpaceShape, d: Sequence[int]) -> list[Monomial]:
    """Return the monomials of multidegree d in lexicographic order.

    The order is descending lex on the concatenated exponent vector, so
    x_0 comes before x_1, and it is the column order of condition matrices.
    """
    d = shape.check_degree(d)
    if any(x < 0 for x in d):
        raise UsageError(f"Graded piece of negative degree {d} is zero")
    per_factor = [factor_exponents(n, x) for n, x in zip(shape.factors, d)]
    return [Monomial(groups) for groups in itertools.product(*per_factor)]


def coarsen(d: Sequence[int]) -> int:
    """Return the N^1-degree d_1 + ... + d_k."""
    return sum(d)


def unit_vector(k: int, axis: int) -> Multidegree:
    """Return e_axis in N^k for a 0-based axis."""
    return tuple(int(j == axis) for j in range(k))


def add(d: Sequence[int], e: Sequence[int]) -> Multidegree:
    """Componentwise sum."""
    return tuple(x + y for x, y in zip(d, e))


def dominates(d: Sequence[int], c: Sequence[int]) -> bool:
    """Return True if c <= d componentwise."""
    return all(x >= y for x, y in zip(d, c))


def box_degrees(box: Sequence[int]) -> Iterator[Multidegree]:
    """Iterate all d <= box in increasing lexicographic order."""
    return itertools.product(*(range(x + 1) for x in box))


def degrees_of_total(k: int, t: int) -> Iterator[Multidegree]:
    """Iterate all d in N^k with coarsen(d) = t, lexicographically."""
    if k == 1:
        yield (t,)
        return
    for first in range(t + 1):
        for rest in degrees_of_total(k - 1, t - first):
            yield (first,) + rest
