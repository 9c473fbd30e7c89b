"""Scheme factories shared by the test-suite."""
import numpy as np

from ..fat_points import FatPointScheme, generic_position_check, random_scheme
from .const import FAT_POINT_COORDS, PROPERTY_BOUND, PROPERTY_SHAPES


def fat_point(shape, mult) -> FatPointScheme:
    """Return the scheme mP for a fixed point P."""
    coords = [FAT_POINT_COORDS[n] for n in shape]
    return FatPointScheme.from_points(shape, [(coords, mult)])


def property_schemes(count, seed, shapes=PROPERTY_SHAPES, max_points=4, max_mult=3):
    """Yield count deterministic random schemes."""
    rng = np.random.default_rng(seed)
    for index in range(count):
        shape = shapes[int(rng.integers(len(shapes)))]
        s = int(rng.integers(1, max_points + 1))
        mults = [int(m) for m in rng.integers(1, max_mult + 1, size=s)]
        yield random_scheme(shape, s, mults, seed * 1000 + index, bound=PROPERTY_BOUND)


def generic_p1xp1_schemes(count, seed, max_points=4, max_mult=3):
    """Yield count random schemes in P^1 x P^1 whose support is in generic position."""
    rng = np.random.default_rng(seed)
    attempt = 0
    found = 0
    while found < count:
        s = int(rng.integers(1, max_points + 1))
        mults = sorted(
            (int(m) for m in rng.integers(1, max_mult + 1, size=s)), reverse=True
        )
        z = random_scheme((1, 1), s, mults, seed * 1000 + attempt, bound=PROPERTY_BOUND)
        attempt += 1
        if generic_position_check(z.reduced_support()):
            found += 1
            yield z
