"""Fat point schemes Z = m_1 P_1 + ... + m_s P_s in products of projective spaces."""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .const import COORD_BOUND, MAX_COORD_BOUND, MAX_RESEEDS
from .exceptions import GenericityError, SchemeValidationError, UsageError
from .multigraded_ring import Multidegree, SpaceShape, box_degrees, dim_graded_piece

_LOGGER = logging.getLogger(__name__)

ShapeLike = Union[SpaceShape, Sequence[int]]


def canonical_vector(vector: Sequence[int]) -> tuple[int, ...]:
    """Return the primitive representative whose first nonzero entry is positive."""
    vector = tuple(int(x) for x in vector)
    divisor = math.gcd(*vector)
    if divisor == 0:
        raise SchemeValidationError("Homogeneous coordinates must not all vanish")
    lead = next(x for x in vector if x != 0)
    if lead < 0:
        divisor = -divisor
    return tuple(x // divisor for x in vector)


@dataclass(frozen=True)
class MultiPoint:
    """A point of P^n_1 x ... x P^n_k in canonical integer coordinates."""

    coords: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Canonicalize every factor vector."""
        object.__setattr__(
            self, "coords", tuple(canonical_vector(vec) for vec in self.coords)
        )

    def factor(self, index: int) -> tuple[int, ...]:
        """Return the coordinate vector of the 0-based factor index."""
        return self.coords[index]

    def __str__(self) -> str:
        """Render as [a:b] x [c:d]."""
        return " x ".join("[" + ":".join(map(str, vec)) + "]" for vec in self.coords)


@dataclass(frozen=True)
class FatPointScheme:
    """Distinct points of a product of projective spaces with multiplicities."""

    shape: SpaceShape
    points: tuple[tuple[MultiPoint, int], ...]

    def __post_init__(self) -> None:
        """Validate the scheme."""
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise SchemeValidationError("A scheme needs at least one point")
        seen = set()
        for point, mult in self.points:
            if len(point.coords) != self.shape.k:
                raise SchemeValidationError(
                    f"Point {point} has {len(point.coords)} factors, expected {self.shape.k}"
                )
            for vec, n in zip(point.coords, self.shape.factors):
                if len(vec) != n + 1:
                    raise SchemeValidationError(
                        f"Point {point} has a factor of length {len(vec)}, expected {n + 1}"
                    )
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise SchemeValidationError(f"Multiplicity {mult!r} must be >= 1")
            if point in seen:
                raise SchemeValidationError(f"Point {point} appears twice")
            seen.add(point)

    @classmethod
    def from_points(
        cls, shape: ShapeLike, points: Sequence[tuple[Sequence[Sequence[int]], int]]
    ) -> FatPointScheme:
        """Build a scheme from raw coordinate vectors and multiplicities."""
        return cls(
            as_shape(shape),
            tuple((MultiPoint(tuple(map(tuple, coords))), mult) for coords, mult in points),
        )

    @property
    def s(self) -> int:
        """Return the number of points in the support."""
        return len(self.points)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """Return the multiplicities in point order."""
        return tuple(mult for _, mult in self.points)

    @property
    def support(self) -> tuple[MultiPoint, ...]:
        """Return the support points."""
        return tuple(point for point, _ in self.points)

    @property
    def sigma(self) -> int:
        """Return sum of the multiplicities."""
        return sum(self.multiplicities)

    @property
    def is_reduced(self) -> bool:
        """Return True if every multiplicity is 1."""
        return all(mult == 1 for mult in self.multiplicities)

    def reduced_support(self) -> FatPointScheme:
        """Return the support with every multiplicity set to 1."""
        return FatPointScheme(self.shape, tuple((point, 1) for point in self.support))


@dataclass(frozen=True)
class GenericPositionResult:
    """Outcome of a generic position check."""

    generic: bool
    failing_degree: Optional[Multidegree] = None

    def __bool__(self) -> bool:
        """Return True if the points are in generic position."""
        return self.generic


def as_shape(shape: ShapeLike) -> SpaceShape:
    """Coerce a sequence of factor dimensions into a SpaceShape."""
    if isinstance(shape, SpaceShape):
        return shape
    return SpaceShape(tuple(shape))


def degree(z: FatPointScheme) -> int:
    """Return deg Z = sum C(N + m_i - 1, m_i - 1)."""
    big_n = z.shape.dimension
    return sum(math.comb(big_n + mult - 1, mult - 1) for mult in z.multiplicities)


def project(z: FatPointScheme, axis: int) -> FatPointScheme:
    """Return the image Z_axis in P^n_axis for a 1-based axis.

    Points with a common image merge with the largest multiplicity.
    """
    if not 1 <= axis <= z.shape.k:
        raise UsageError(f"Axis {axis} outside 1..{z.shape.k}")
    merged: dict[tuple[int, ...], int] = {}
    for point, mult in z.points:
        image = point.factor(axis - 1)
        merged[image] = max(merged.get(image, 0), mult)
    return FatPointScheme(
        SpaceShape((z.shape.factors[axis - 1],)),
        tuple((MultiPoint((image,)), mult) for image, mult in merged.items()),
    )


def generic_position_check(
    z: FatPointScheme, box: Optional[Sequence[int]] = None, field=None
) -> GenericPositionResult:
    """Check H_Z(i) = min(dim R_i, s) for every i <= box.

    The default box is (sigma, ..., sigma).
    """
    # pylint: disable=import-outside-toplevel
    from .hilbert import HilbertTable

    if not z.is_reduced:
        raise UsageError("Generic position is defined for reduced points only")
    if box is None:
        box = (z.sigma,) * z.shape.k
    box = z.shape.check_degree(box)
    if any(x < 0 for x in box):
        raise UsageError(f"Box {box} has a negative coordinate")

    table = HilbertTable(z, field=field, shortcut=False)
    for d in box_degrees(box):
        expected = min(dim_graded_piece(z.shape, d), z.s)
        if table.hilbert_value(d) != expected:
            _LOGGER.debug("Generic position fails at %s", d)
            return GenericPositionResult(False, d)
    return GenericPositionResult(True)


def require_generic_support(z: FatPointScheme, field=None) -> None:
    """Raise GenericityError unless the support of z is in generic position."""
    result = generic_position_check(z.reduced_support(), field=field)
    if not result:
        raise GenericityError(
            f"Support is not in generic position: H differs at {result.failing_degree}",
            result.failing_degree,
        )


def random_scheme(
    shape: ShapeLike,
    s: int,
    multiplicities: Sequence[int],
    seed: int,
    bound: int = COORD_BOUND,
) -> FatPointScheme:
    """Draw a scheme with integer coordinates in [-bound, bound].

    Candidates colliding with an earlier point in any single factor are
    redrawn, so every factor projection is injective on the support.
    """
    shape = as_shape(shape)
    if s != len(multiplicities):
        raise UsageError(f"{len(multiplicities)} multiplicities given for {s} points")
    if not 1 <= bound <= MAX_COORD_BOUND:
        raise UsageError(f"Coordinate bound {bound} must lie in [1, {MAX_COORD_BOUND}]")
    rng = np.random.default_rng(seed)
    used: list[set[tuple[int, ...]]] = [set() for _ in shape.factors]
    points = []
    for _ in range(s):
        for attempt in range(MAX_RESEEDS):
            candidate = []
            for n in shape.factors:
                vec = [int(x) for x in rng.integers(-bound, bound + 1, size=n + 1)]
                if not any(vec):
                    break
                candidate.append(canonical_vector(vec))
            else:
                if all(vec not in used[j] for j, vec in enumerate(candidate)):
                    break
            _LOGGER.debug("Redrawing point after collision (attempt %s)", attempt + 1)
        else:
            raise UsageError(f"No collision-free point found in {MAX_RESEEDS} draws")
        for j, vec in enumerate(candidate):
            used[j].add(vec)
        points.append(tuple(candidate))
    return FatPointScheme.from_points(shape, list(zip(points, multiplicities)))

