"""Test for regularity regions and bounds."""
import pytest

from ..exact_linalg import PrimeField
from ..exceptions import UnsupportedShapeError, UsageError
from ..fat_points import FatPointScheme
from ..hilbert import HilbertTable
from ..multigraded_ring import SpaceShape, add, box_degrees, unit_vector
from ..regularity import (
    ResolutionRegularityVector,
    UpSet,
    acm_check_p1xp1,
    coarse_bound_region,
    davis_geramita_bounds,
    eventual_values,
    generic_position_region,
    hilbert_polynomial_p1xp1,
    membership,
    p1xp1_generic_region,
    predicted_hilbert_p1xp1,
    proj_regularity,
    reg_region,
    region_from_resvector,
    res_reg_vector,
    verify_acm_equality,
)
from .common import fat_point, generic_p1xp1_schemes, property_schemes
from .const import FAT_POINT_SHAPES


def test_upset():
    """test UpSet"""
    region = UpSet(2, ((2, 1), (1, 1), (0, 3), (1, 1)))
    assert region.corners == ((0, 3), (1, 1))
    assert region.contains((1, 5)) is True
    assert (0, 2) not in region
    assert region.render() == "(0,3) + N^2 U (1,1) + N^2"
    assert region.as_dict() == {"corners": [[0, 3], [1, 1]]}
    assert region.elements_in_box((2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]

    assert UpSet(2, ((2, 2),)).is_subset_of(region) is True
    assert region.is_subset_of(UpSet(2, ((1, 1),))) is False
    assert UpSet(2).render() == "{}"

    # Corner outside N^k
    with pytest.raises(UsageError):
        UpSet(2, ((1, 1, 1),))
    with pytest.raises(UsageError):
        UpSet(2, ((-1, 1),))

    assert str(ResolutionRegularityVector((2, 2))) == "(2,2)"
    assert ResolutionRegularityVector((2, 2)).as_upset() == UpSet(2, ((2, 2),))


def test_golden_regions(seven_point, three_point, koszul_pair):
    """test regions of the hand-computed schemes"""
    assert reg_region(HilbertTable(seven_point)).corners == ((2, 2),)
    assert reg_region(HilbertTable(three_point)).corners == ((1, 1),)
    assert reg_region(HilbertTable(koszul_pair)).corners == ((0, 1), (1, 0))

    assert res_reg_vector(HilbertTable(seven_point)).r == (2, 2)
    assert res_reg_vector(HilbertTable(three_point)).r == (1, 1)
    assert proj_regularity(HilbertTable(koszul_pair), 2) == 1

    assert membership(HilbertTable(seven_point), (2, 2)) is True
    assert membership(HilbertTable(seven_point), (5, 1)) is False

    # Axis out of range
    with pytest.raises(UsageError):
        proj_regularity(HilbertTable(seven_point), 3)


def test_single_fat_point_region():
    """test reg_B(mP) = (m-1,...,m-1) + N^k"""
    for shape in FAT_POINT_SHAPES:
        for mult in range(1, 5):
            table = HilbertTable(fat_point(shape, mult))
            assert reg_region(table).corners == ((mult - 1,) * len(shape),)


def test_field_modes_agree(seven_point):
    """test rational and prime field regions agree"""
    field = PrimeField()
    assert reg_region(HilbertTable(seven_point, field=field)).corners == ((2, 2),)
    for shape in FAT_POINT_SHAPES:
        for mult in range(1, 4):
            z = fat_point(shape, mult)
            assert reg_region(HilbertTable(z, field=field)) == reg_region(HilbertTable(z))
    for z in generic_p1xp1_schemes(5, seed=4, max_points=3):
        rational = HilbertTable(z)
        modular = HilbertTable(z, field=field)
        box = (z.sigma, z.sigma)
        assert (rational.hilbert_box(box) == modular.hilbert_box(box)).all()


def test_region_is_upset(seven_point):
    """test membership is monotone"""
    table = HilbertTable(seven_point)
    region = reg_region(table)
    for d in box_degrees((4, 4)):
        if membership(table, d):
            assert region.contains(d)
            for axis in range(2):
                assert membership(table, add(d, unit_vector(2, axis)))
        else:
            assert not region.contains(d)


def test_lower_bound_inclusion():
    """test r(Z) + N^k lies in reg_B(Z)"""
    for z in property_schemes(50, seed=21):
        table = HilbertTable(z)
        assert membership(table, res_reg_vector(table).r)


def test_region_from_resvector():
    """test the projective dimension regions"""
    assert region_from_resvector((1, 1), 0, 2).corners == ((1, 1),)
    assert region_from_resvector((1, 1), 1, 2).corners == ((2, 2),)
    assert region_from_resvector((0, 0), 2, 2).corners == ((1, 2), (2, 1))
    assert region_from_resvector((2, 1, 0), 2, 3).corners == (
        (3, 3, 2),
        (4, 2, 2),
        (4, 3, 1),
    )

    assert coarse_bound_region(1, 0, 2).corners == ((1, 1),)
    assert coarse_bound_region(0, 2, 2).corners == ((1, 2), (2, 1))
    assert coarse_bound_region(1, 3, 2).corners == ((2, 4), (3, 3), (4, 2))

    # Bad input
    with pytest.raises(UsageError):
        region_from_resvector((1, 1), 1, 3)
    with pytest.raises(UsageError):
        coarse_bound_region(-1, 1, 2)


def test_resvector_region_inclusion():
    """test region_from_resvector(r, N+1, k) lies in reg_B(Z)"""
    for z in property_schemes(20, seed=33, max_points=3):
        table = HilbertTable(z)
        vector = res_reg_vector(table)
        bound = region_from_resvector(vector.r, z.shape.dimension + 1, z.shape.k)
        assert bound.is_subset_of(reg_region(table))


def test_davis_geramita_bounds():
    """test the sigma and generic bounds"""
    z = FatPointScheme.from_points(
        (1, 1),
        [([[1, 2], [1, 5]], 2), ([[1, 3], [1, 7]], 1), ([[1, 4], [1, 11]], 1)],
    )
    first, second = davis_geramita_bounds(z, generic=True)
    assert first.corners == ((3, 3),)
    assert second.corners == ((4, 4),)
    assert davis_geramita_bounds(z)[1] is None

    first, second = davis_geramita_bounds(fat_point((2, 2), 3), generic=True)
    assert first.corners == ((2, 2),)
    assert second.corners == ((4, 4),)

    # Both hold on random schemes
    for z in property_schemes(10, seed=12, shapes=[(1, 1), (2, 1)], max_points=3):
        region = reg_region(HilbertTable(z))
        assert davis_geramita_bounds(z)[0].is_subset_of(region)


def test_p1xp1_formulas():
    """test the closed forms in P^1 x P^1"""
    assert p1xp1_generic_region((2, 1, 1)).corners == ((1, 2), (2, 1))
    assert p1xp1_generic_region((1, 1, 1)).corners == ((0, 2), (1, 1), (2, 0))
    assert p1xp1_generic_region((3,)).corners == ((2, 2),)

    assert eventual_values((2, 1, 1)) == [4, 5]
    assert eventual_values((3, 2)) == [5, 8, 9]

    assert hilbert_polynomial_p1xp1((2,), 2) == 7
    assert hilbert_polynomial_p1xp1((1, 1, 1), 4) == 15
    assert hilbert_polynomial_p1xp1((3,), 2) == 10

    assert predicted_hilbert_p1xp1((2, 1, 1), (3, 0)) == 4
    assert predicted_hilbert_p1xp1((2, 1, 1), (2, 1)) == 5
    with pytest.raises(UsageError):
        predicted_hilbert_p1xp1((2, 1, 1), (0, 1))

    with pytest.raises(UsageError):
        p1xp1_generic_region(())


def test_p1xp1_generic_region_members():
    """test the generic P^1 x P^1 region, eventual values and coarse polynomial"""
    for z in generic_p1xp1_schemes(25, seed=8):
        table = HilbertTable(z)
        sigma = z.sigma
        region = reg_region(table)
        predicted = p1xp1_generic_region(z.multiplicities)
        for d in predicted.elements_in_box((sigma, sigma)):
            assert region.contains(d)

        level = max(sigma - 1, 2 * max(z.multiplicities) - 2)
        for d in box_degrees((sigma, sigma)):
            if sum(d) >= level:
                assert table.hilbert_value(d) == predicted_hilbert_p1xp1(z.multiplicities, d)

        for j, value in enumerate(eventual_values(z.multiplicities)):
            for i in (sigma - 1, sigma):
                assert table.hilbert_value((i, j)) == value
                assert table.hilbert_value((j, i)) == value

        for t in range(sigma - 1, sigma + 4):
            assert table.coarse_hilbert(t) == hilbert_polynomial_p1xp1(z.multiplicities, t)


def test_generic_position_region():
    """test {d : dim R_d >= s} against generic points"""
    shape = SpaceShape((1, 1))
    assert generic_position_region(shape, 1).corners == ((0, 0),)
    assert generic_position_region(shape, 3).corners == ((0, 2), (1, 1), (2, 0))
    assert generic_position_region(shape, 4).corners == ((0, 3), (1, 1), (3, 0))

    for z in generic_p1xp1_schemes(5, seed=6, max_mult=1):
        assert reg_region(HilbertTable(z)) == generic_position_region(shape, z.s)

    with pytest.raises(UsageError):
        generic_position_region(shape, 0)


def test_acm_check(seven_point, three_point, koszul_pair):
    """test acm_check_p1xp1"""
    verdict = acm_check_p1xp1(HilbertTable(seven_point))
    assert verdict.acm_consistent is False
    assert verdict.witness == (2, 2)
    assert verdict.value == -1
    assert str(verdict).startswith("NotACM witness=(2,2) delta=-1")

    assert acm_check_p1xp1(HilbertTable(three_point)).acm_consistent is True
    assert str(acm_check_p1xp1(HilbertTable(three_point))) == "ACM-consistent"

    verdict = acm_check_p1xp1(HilbertTable(koszul_pair))
    assert verdict.witness == (1, 1)
    assert verdict.value == -1

    # Only P^1 x P^1
    with pytest.raises(UnsupportedShapeError):
        acm_check_p1xp1(HilbertTable(fat_point((2, 1), 1)))


def test_acm_equality(seven_point):
    """test verify_acm_equality"""
    report = verify_acm_equality(HilbertTable(seven_point))
    assert report.inclusion is True
    assert report.equality is True
    assert report.verdict.acm_consistent is False
    assert report.consistent is True

    for mult in range(1, 4):
        report = verify_acm_equality(HilbertTable(fat_point((1, 1), mult)))
        assert report.verdict.acm_consistent is True
        assert report.equality is True

    for z in property_schemes(15, seed=40, shapes=[(1, 1)], max_points=3):
        report = verify_acm_equality(HilbertTable(z))
        assert report.inclusion
        if report.verdict.acm_consistent:
            assert report.region.corners == (report.vector.r,)
