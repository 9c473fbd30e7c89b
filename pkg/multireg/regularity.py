"""Multigraded regularity regions of fat points and their closed-form bounds."""
from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .const import ACM_CONSISTENT, CONF_CORNERS, NOT_ACM
from .exceptions import InternalFormulaError, UnsupportedShapeError, UsageError
from .fat_points import FatPointScheme, degree, project
from .hilbert import HilbertTable
from .multigraded_ring import (
    Multidegree,
    SpaceShape,
    box_degrees,
    degrees_of_total,
    dim_graded_piece,
    dominates,
)

_LOGGER = logging.getLogger(__name__)


def format_degree(d: Sequence[int]) -> str:
    """Render a multidegree as (2,2)."""
    return "(" + ",".join(str(x) for x in d) + ")"


@dataclass(frozen=True)
class UpSet:
    """A subset of N^k closed under adding e_j, stored by its minimal corners."""

    k: int
    corners: tuple[Multidegree, ...] = ()

    def __post_init__(self) -> None:
        """Reduce the generators to a sorted antichain."""
        gens = set()
        for corner in self.corners:
            corner = tuple(int(x) for x in corner)
            if len(corner) != self.k:
                raise UsageError(f"Corner {corner} does not lie in N^{self.k}")
            if any(x < 0 for x in corner):
                raise UsageError(f"Corner {corner} has a negative coordinate")
            gens.add(corner)
        minimal = [
            c for c in gens if not any(o != c and dominates(c, o) for o in gens)
        ]
        object.__setattr__(self, "corners", tuple(sorted(minimal)))

    def contains(self, d: Sequence[int]) -> bool:
        """Return True if some corner lies below d."""
        return any(dominates(d, corner) for corner in self.corners)

    def __contains__(self, d) -> bool:
        """Membership test."""
        return self.contains(d)

    def is_subset_of(self, other: UpSet) -> bool:
        """Return True if every corner of self is a member of other."""
        return all(other.contains(corner) for corner in self.corners)

    def elements_in_box(self, box: Sequence[int]) -> list[Multidegree]:
        """Return the members d <= box in lexicographic order."""
        return [d for d in box_degrees(box) if self.contains(d)]

    def render(self) -> str:
        """Render as a union of shifted orthants."""
        if not self.corners:
            return "{}"
        return " U ".join(
            f"{format_degree(corner)} + N^{self.k}" for corner in self.corners
        )

    def as_dict(self) -> dict:
        """Return the JSON form {"corners": [...]}."""
        return {CONF_CORNERS: [list(corner) for corner in self.corners]}


@dataclass(frozen=True)
class ResolutionRegularityVector:
    """The vector (r_1, ..., r_k) with r_i the regularity of the i-th projection."""

    r: Multidegree

    def __post_init__(self) -> None:
        """Validate the entries."""
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        if any(x < 0 for x in self.r):
            raise UsageError(f"Resolution regularity vector {self.r} is negative")

    def as_upset(self) -> UpSet:
        """Return r + N^k."""
        return UpSet(len(self.r), (self.r,))

    def __str__(self) -> str:
        """Render as (r1,...,rk)."""
        return format_degree(self.r)


@dataclass(frozen=True)
class AcmVerdict:
    """Result of the first-difference test in P^1 x P^1."""

    acm_consistent: bool
    witness: Optional[Multidegree] = None
    value: Optional[int] = None
    reason: str = ""

    def __str__(self) -> str:
        """Render the verdict."""
        if self.acm_consistent:
            return ACM_CONSISTENT
        return (
            f"{NOT_ACM} witness={format_degree(self.witness)} "
            f"delta={self.value} ({self.reason})"
        )


@dataclass(frozen=True)
class AcmEqualityReport:
    """Both directions of the comparison of reg_B(Z) with r + N^k."""

    verdict: AcmVerdict
    vector: ResolutionRegularityVector
    region: UpSet
    inclusion: bool
    equality: bool

    @property
    def consistent(self) -> bool:
        """Return False if an ACM-consistent scheme breaks equality or inclusion fails."""
        if not self.inclusion:
            return False
        return self.equality or not self.verdict.acm_consistent


def membership(table: HilbertTable, d: Sequence[int]) -> bool:
    """Return True if d lies in reg_B(Z), i.e. H_Z(d) = deg Z."""
    return table.hilbert_value(d) == table.degree


def _corners(member: np.ndarray) -> list[Multidegree]:
    """Minimal elements of a monotone boolean box tensor."""
    blocked = np.zeros_like(member)
    for axis in range(member.ndim):
        source = [slice(None)] * member.ndim
        target = [slice(None)] * member.ndim
        source[axis] = slice(None, -1)
        target[axis] = slice(1, None)
        shifted = np.zeros_like(member)
        shifted[tuple(target)] = member[tuple(source)]
        blocked |= shifted
    return [tuple(int(x) for x in idx) for idx in np.argwhere(member & ~blocked)]


def reg_region(table: HilbertTable) -> UpSet:
    """Return the corners of reg_B(Z) found in the box [0, sigma]^k."""
    box = (table.scheme.sigma,) * table.k
    _LOGGER.debug("Searching reg_B over box %s", box)
    member = table.hilbert_box(box) == table.degree
    return UpSet(table.k, tuple(_corners(member)))


def proj_regularity(table: HilbertTable, axis: int) -> int:
    """Return reg(Z_axis), the least t with H_{Z_axis}(t) = deg Z_axis."""
    image = project(table.scheme, axis)
    target = degree(image)
    image_table = HilbertTable(image, field=table.field)
    for t in range(image.sigma + 1):
        if image_table.hilbert_value((t,)) == target:
            return t
    raise InternalFormulaError(
        f"Projection {axis} never reached degree {target} by t = {image.sigma}"
    )


def res_reg_vector(table: HilbertTable) -> ResolutionRegularityVector:
    """Return (reg(Z_1), ..., reg(Z_k))."""
    return ResolutionRegularityVector(
        tuple(proj_regularity(table, axis) for axis in range(1, table.k + 1))
    )


def region_from_resvector(p: Sequence[int], m: int, k: int) -> UpSet:
    """Return the union of p + m*1 - a + N^k over a in N^k with |a| = m - 1.

    m = 0 gives p + N^k.
    """
    p = tuple(int(x) for x in p)
    if len(p) != k:
        raise UsageError(f"Vector {p} does not lie in N^{k}")
    if m < 0:
        raise UsageError(f"Projective dimension bound {m} is negative")
    if m == 0:
        return UpSet(k, (p,))
    return UpSet(
        k,
        tuple(
            tuple(x + m - y for x, y in zip(p, a)) for a in degrees_of_total(k, m - 1)
        ),
    )


def coarse_bound_region(r: int, m: int, k: int) -> UpSet:
    """Return the union of (r + m)*1 - a + N^k over |a| = m - 1."""
    if r < 0:
        raise UsageError(f"Regularity bound {r} is negative")
    return region_from_resvector((r,) * k, m, k)


def _descending(multiplicities: Iterable[int]) -> list[int]:
    mults = sorted((int(m) for m in multiplicities), reverse=True)
    if not mults:
        raise UsageError("At least one multiplicity is required")
    return mults


def davis_geramita_bounds(
    z: FatPointScheme, generic: bool = False
) -> tuple[UpSet, Optional[UpSet]]:
    """Return the region (sigma-1)*1 + N^k and, for generic support, l + N^k."""
    mults = _descending(z.multiplicities)
    sigma = sum(mults)
    first = UpSet(z.shape.k, ((sigma - 1,) * z.shape.k,))
    if not generic:
        return first, None
    top = mults[0] + (mults[1] if len(mults) > 1 else 0) + 1
    corner = tuple(max(top, -(-(sigma + n - 2) // n)) for n in z.shape.factors)
    return first, UpSet(z.shape.k, (corner,))


def p1xp1_generic_region(multiplicities: Sequence[int]) -> UpSet:
    """Return {(i,j) >= (m_1-1, m_1-1) : i + j >= max(sigma-1, 2m_1-2)}."""
    mults = _descending(multiplicities)
    low = mults[0] - 1
    level = max(sum(mults) - 1, 2 * low)
    return UpSet(2, tuple((i, level - i) for i in range(low, level - low + 1)))


def eventual_values(multiplicities: Sequence[int]) -> list[int]:
    """Return c_0, ..., c_{m_1-1}; c_j = sum_i [m_i + (m_i-1)_+ + ... + (m_i-j)_+]."""
    mults = _descending(multiplicities)
    return [
        sum(max(0, m - t) for m in mults for t in range(j + 1))
        for j in range(mults[0])
    ]


def hilbert_polynomial_p1xp1(multiplicities: Sequence[int], t: int) -> int:
    """Evaluate the N^1-graded Hilbert polynomial of generic-support fat points."""
    mults = _descending(multiplicities)
    value = sum(
        math.comb(m + 1, 2) * t + math.comb(m + 1, 2) * Fraction(-2 * m + 5, 3)
        for m in mults
    )
    if value.denominator != 1:
        raise InternalFormulaError(f"Hilbert polynomial value {value} is not an integer")
    return int(value)


def predicted_hilbert_p1xp1(multiplicities: Sequence[int], d: Sequence[int]) -> int:
    """Return H_Z(i, j) for generic-support schemes once i + j >= max(sigma-1, 2m_1-2)."""
    mults = _descending(multiplicities)
    i, j = d
    level = max(sum(mults) - 1, 2 * mults[0] - 2)
    if i + j < level:
        raise UsageError(f"H_Z{format_degree(d)} is not determined below i + j = {level}")
    values = eventual_values(mults)
    low = min(i, j)
    if low <= mults[0] - 2:
        return values[low]
    return values[-1]


def generic_position_region(shape: SpaceShape, s: int) -> UpSet:
    """Return {d : dim R_d >= s}, which is reg_B of s points in generic position."""
    if s < 1:
        raise UsageError("A scheme needs at least one point")
    box = (s - 1,) * shape.k
    member = np.zeros(tuple(x + 1 for x in box), dtype=bool)
    for d in box_degrees(box):
        member[d] = dim_graded_piece(shape, d) >= s
    return UpSet(shape.k, tuple(_corners(member)))


def acm_check_p1xp1(table: HilbertTable) -> AcmVerdict:
    """Test whether the first difference of H_Z looks like an Artinian quotient.

    The first difference on [0, sigma]^2 must take values in {0, 1}, have a
    support closed under going down, and vanish on the outer rim of the box.
    """
    if table.scheme.shape.factors != (1, 1):
        raise UnsupportedShapeError("The ACM criterion is implemented for P^1 x P^1 only")
    sigma = table.scheme.sigma
    delta = table.first_difference((sigma, sigma))
    for i, j in box_degrees((sigma, sigma)):
        value = int(delta[i, j])
        if value not in (0, 1):
            return AcmVerdict(False, (i, j), value, "value outside {0,1}")
        if value == 0:
            continue
        if (i > 0 and delta[i - 1, j] == 0) or (j > 0 and delta[i, j - 1] == 0):
            return AcmVerdict(False, (i, j), value, "support is not a downset")
        if sigma in (i, j):
            return AcmVerdict(False, (i, j), value, "support reaches the rim")
    return AcmVerdict(True)


def verify_acm_equality(table: HilbertTable) -> AcmEqualityReport:
    """Compare reg_B(Z) with r + N^k, alongside the ACM verdict."""
    verdict = acm_check_p1xp1(table)
    vector = res_reg_vector(table)
    region = reg_region(table)
    report = AcmEqualityReport(
        verdict=verdict,
        vector=vector,
        region=region,
        inclusion=membership(table, vector.r),
        equality=region.corners == (vector.r,),
    )
    if not report.consistent:
        _LOGGER.warning(
            "ACM comparison inconsistent: verdict %s, region %s, vector %s",
            verdict,
            region.render(),
            vector,
        )
    return report
