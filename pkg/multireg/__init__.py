"""Multigraded Hilbert functions and regularity regions of fat points."""
import logging

from .const import DEFAULT_PRIME, INTEGRATION_VERSION
from .exact_linalg import QQ, DenseMatrix, PrimeField, RationalField, rank
from .exceptions import (
    GenericityError,
    InternalFormulaError,
    MultiregError,
    SchemeValidationError,
    UnsupportedShapeError,
    UsageError,
)
from .fat_points import (
    FatPointScheme,
    MultiPoint,
    degree,
    generic_position_check,
    project,
    random_scheme,
)
from .hilbert import HilbertTable, condition_matrix
from .multigraded_ring import SpaceShape, dim_graded_piece, monomial_basis
from .regularity import (
    ResolutionRegularityVector,
    UpSet,
    acm_check_p1xp1,
    coarse_bound_region,
    davis_geramita_bounds,
    eventual_values,
    hilbert_polynomial_p1xp1,
    membership,
    p1xp1_generic_region,
    proj_regularity,
    reg_region,
    region_from_resvector,
    res_reg_vector,
    verify_acm_equality,
)
from .scheme_file import SchemeFile, load_scheme

__version__ = INTEGRATION_VERSION

logging.getLogger(__name__).addHandler(logging.NullHandler())
