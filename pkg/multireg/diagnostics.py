"""Invariant checks and summaries of a computed Hilbert table."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .const import (
    CHECK_FAIL,
    CHECK_PASS,
    CONF_FIELD,
    CONF_MODE,
    CONF_PRIME,
    CONF_SPACES,
)
from .fat_points import project
from .hilbert import HilbertTable
from .multigraded_ring import add, box_degrees, dim_graded_piece, unit_vector
from .regularity import (
    davis_geramita_bounds,
    eventual_values,
    format_degree,
    hilbert_polynomial_p1xp1,
    membership,
    p1xp1_generic_region,
    reg_region,
    region_from_resvector,
    res_reg_vector,
    verify_acm_equality,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named invariant."""

    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        """Render as a PASS/FAIL line."""
        tag = CHECK_PASS if self.passed else CHECK_FAIL
        if self.detail:
            return f"{tag} {self.name}: {self.detail}"
        return f"{tag} {self.name}"


def _hilbert_laws(table: HilbertTable) -> list[CheckResult]:
    """Monotone, stalls stay stalled, capped by deg Z and dim R_d."""
    z = table.scheme
    box = (z.sigma,) * table.k
    monotone = stall = cap = None
    for d in box_degrees(box):
        value = table.hilbert_value(d)
        if cap is None and value > min(table.degree, dim_graded_piece(z.shape, d)):
            cap = d
        for axis in range(table.k):
            step = unit_vector(table.k, axis)
            above = add(d, step)
            if above[axis] > box[axis]:
                continue
            if monotone is None and table.hilbert_value(above) < value:
                monotone = d
            if (
                stall is None
                and table.hilbert_value(above) == value
                and table.hilbert_value(add(above, step)) != value
            ):
                stall = d
    return [
        CheckResult("monotone", monotone is None, _failure(monotone)),
        CheckResult("stall", stall is None, _failure(stall)),
        CheckResult("cap", cap is None, _failure(cap)),
    ]


def _failure(d) -> str:
    return "" if d is None else f"fails at {format_degree(d)}"


def _projection_identity(table: HilbertTable) -> CheckResult:
    """H_Z(t e_i) = H_{Z_i}(t) for t <= sigma."""
    z = table.scheme
    for axis in range(1, table.k + 1):
        image = HilbertTable(project(z, axis), field=table.field)
        for t in range(z.sigma + 1):
            d = tuple(t * e for e in unit_vector(table.k, axis - 1))
            if table.hilbert_value(d) != image.hilbert_value((t,)):
                return CheckResult("projection_identity", False, _failure(d))
    return CheckResult("projection_identity", True)


def _p1xp1_generic(table: HilbertTable, region) -> list[CheckResult]:
    """The closed forms for generic-support schemes in P^1 x P^1."""
    z = table.scheme
    mults = z.multiplicities
    predicted = p1xp1_generic_region(mults)
    results = [
        CheckResult(
            "p1xp1_region",
            predicted.is_subset_of(region),
            f"{predicted.render()} inside {region.render()}",
        )
    ]

    values = eventual_values(mults)
    mismatch = None
    for j, value in enumerate(values):
        for i in (z.sigma - 1, z.sigma):
            if table.hilbert_value((i, j)) != value or table.hilbert_value((j, i)) != value:
                mismatch = (i, j)
                break
        if mismatch:
            break
    results.append(
        CheckResult("eventual_values", mismatch is None, _failure(mismatch))
    )

    bad_t = None
    for t in range(z.sigma - 1, z.sigma + 4):
        if table.coarse_hilbert(t) != hilbert_polynomial_p1xp1(mults, t):
            bad_t = t
            break
    results.append(
        CheckResult(
            "coarse_polynomial",
            bad_t is None,
            "" if bad_t is None else f"fails at t={bad_t}",
        )
    )
    return results


def run_verification(table: HilbertTable, generic: bool = False) -> list[CheckResult]:
    """Run every applicable invariant on the scheme of table.

    generic asserts that the support is in generic position; the caller is
    responsible for checking that first.
    """
    z = table.scheme
    top = (z.sigma,) * table.k
    results = [
        CheckResult(
            "degree_stabilization",
            table.hilbert_value(top) == table.degree,
            f"H{format_degree(top)} = {table.hilbert_value(top)}, deg Z = {table.degree}",
        )
    ]
    results.extend(_hilbert_laws(table))
    results.append(_projection_identity(table))

    region = reg_region(table)
    vector = res_reg_vector(table)
    results.append(
        CheckResult("lower_bound", membership(table, vector.r), f"r = {vector}")
    )

    first, second = davis_geramita_bounds(z, generic=generic)
    results.append(
        CheckResult("sigma_bound", first.is_subset_of(region), first.render())
    )
    if second is not None:
        results.append(
            CheckResult("generic_bound", second.is_subset_of(region), second.render())
        )

    resvector_region = region_from_resvector(vector.r, z.shape.dimension + 1, table.k)
    results.append(
        CheckResult(
            "resvector_region",
            resvector_region.is_subset_of(region),
            resvector_region.render(),
        )
    )

    if z.shape.factors == (1, 1):
        report = verify_acm_equality(table)
        results.append(
            CheckResult(
                "acm_equality",
                report.consistent,
                f"{report.verdict}, equality {'holds' if report.equality else 'fails'}",
            )
        )
        if generic:
            results.extend(_p1xp1_generic(table, region))

    for result in results:
        _LOGGER.debug("%s", result)
    return results


def scheme_summary(table: HilbertTable) -> dict:
    """Return a JSON-able report on the scheme and its regularity."""
    z = table.scheme
    field = {CONF_MODE: table.field.mode}
    if table.field.probabilistic:
        field[CONF_PRIME] = table.field.p
    first, _ = davis_geramita_bounds(z)
    return {
        CONF_SPACES: list(z.shape.factors),
        "points": z.s,
        "multiplicities": list(z.multiplicities),
        "sigma": z.sigma,
        "degree": table.degree,
        "reduced": z.is_reduced,
        CONF_FIELD: field,
        "probabilistic": table.field.probabilistic,
        "resvector": list(res_reg_vector(table).r),
        "region": reg_region(table).as_dict(),
        "sigma_bound": first.as_dict(),
    }
