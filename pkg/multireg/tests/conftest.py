# pylint: disable=redefined-outer-name
"""Global fixtures for multireg."""
# Fixtures that are defined in conftest.py are available across all tests. You can also
# define fixtures within a particular test file to scope them locally.
#
# See here for more info: https://docs.pytest.org/en/latest/fixture.html
import json

import pytest

from ..fat_points import FatPointScheme
from ..scheme_file import dump_scheme, parse_scheme
from .const import KOSZUL_PAIR_CONFIG, SEVEN_POINT_CONFIG, THREE_POINT_CONFIG


@pytest.fixture
def seven_point() -> FatPointScheme:
    """The seven points [1:i] x [1:j]."""
    return parse_scheme(SEVEN_POINT_CONFIG).scheme


@pytest.fixture
def three_point() -> FatPointScheme:
    """Three coordinate points of P^1 x P^1."""
    return parse_scheme(THREE_POINT_CONFIG).scheme


@pytest.fixture
def koszul_pair() -> FatPointScheme:
    """Two points with swapped coordinates."""
    return parse_scheme(KOSZUL_PAIR_CONFIG).scheme


@pytest.fixture
def scheme_path(tmp_path):
    """Return a function writing a scheme document to a file."""

    def _write(document, name="scheme.json"):
        if isinstance(document, FatPointScheme):
            document = dump_scheme(document)
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write
