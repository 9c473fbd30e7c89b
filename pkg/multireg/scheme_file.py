"""JSON scheme files: schema, loading and dumping."""
from __future__ import annotations

import json
import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import voluptuous as vol

from .const import (
    CONF_COORDS,
    CONF_FIELD,
    CONF_MODE,
    CONF_MULT,
    CONF_POINTS,
    CONF_PRIME,
    CONF_SPACES,
    DEFAULT_PRIME,
    ENV_FIELD,
    MIN_PRIME,
    MODE_PRIME,
    MODE_RATIONAL,
)
from .exact_linalg import Field, field_from_config
from .exceptions import SchemeValidationError, UsageError
from .fat_points import FatPointScheme
from .input_utils import ValidateFieldString

_LOGGER = logging.getLogger(__name__)


def _strict_int(value):
    """Accept integers but not booleans."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise vol.Invalid(f"expected an integer, got {value!r}")
    return value


POSITIVE_INT = vol.All(_strict_int, vol.Range(min=1))

FIELD_SCHEMA = vol.Any(
    vol.Schema({vol.Required(CONF_MODE): MODE_RATIONAL}),
    vol.Schema(
        {
            vol.Required(CONF_MODE): MODE_PRIME,
            vol.Optional(CONF_PRIME, default=DEFAULT_PRIME): vol.All(
                _strict_int, vol.Range(min=MIN_PRIME + 1)
            ),
        }
    ),
)

POINT_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_COORDS): vol.All([[_strict_int]], vol.Length(min=1)),
        vol.Optional(CONF_MULT, default=1): POSITIVE_INT,
    }
)

SCHEME_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_SPACES): vol.All([POSITIVE_INT], vol.Length(min=1)),
        vol.Required(CONF_POINTS): vol.All([POINT_SCHEMA], vol.Length(min=1)),
        vol.Optional(CONF_FIELD, default={CONF_MODE: MODE_RATIONAL}): FIELD_SCHEMA,
    }
)


@dataclass(frozen=True)
class SchemeFile:
    """A validated scheme file."""

    scheme: FatPointScheme
    field_mode: str = MODE_RATIONAL
    prime: Optional[int] = None

    @property
    def field(self) -> Field:
        """Return the field configured in the file."""
        return field_from_config(self.field_mode, self.prime)


def parse_scheme(document: Mapping) -> SchemeFile:
    """Validate a decoded scheme document."""
    try:
        data = SCHEME_SCHEMA(document)
    except vol.Invalid as error:
        raise SchemeValidationError(f"Invalid scheme file: {error}") from error

    points = [(point[CONF_COORDS], point[CONF_MULT]) for point in data[CONF_POINTS]]
    scheme = FatPointScheme.from_points(data[CONF_SPACES], points)
    field_data = data[CONF_FIELD]
    return SchemeFile(scheme, field_data[CONF_MODE], field_data.get(CONF_PRIME))


def load_scheme(path: Union[str, Path]) -> SchemeFile:
    """Read and validate a scheme file."""
    try:
        with open(path, encoding="utf-8") as file:
            document = json.load(file)
    except OSError as error:
        raise SchemeValidationError(f"Cannot read {path}: {error}") from error
    except (json.JSONDecodeError, UnicodeDecodeError) as error:
        raise SchemeValidationError(f"{path} is not valid JSON: {error}") from error
    scheme_file = parse_scheme(document)
    _LOGGER.debug(
        "Loaded %s points in %s from %s", scheme_file.scheme.s, scheme_file.scheme.shape, path
    )
    return scheme_file


def dump_scheme(scheme: FatPointScheme, field: Optional[Field] = None) -> dict:
    """Return the JSON document describing scheme."""
    document = {
        CONF_SPACES: list(scheme.shape.factors),
        CONF_POINTS: [
            {CONF_COORDS: [list(vec) for vec in point.coords], CONF_MULT: mult}
            for point, mult in scheme.points
        ],
    }
    if field is not None and field.mode == MODE_PRIME:
        document[CONF_FIELD] = {CONF_MODE: MODE_PRIME, CONF_PRIME: field.p}
    return document


def dumps_scheme(scheme: FatPointScheme, field: Optional[Field] = None) -> str:
    """Serialize scheme as a JSON string."""
    return json.dumps(dump_scheme(scheme, field))


def parse_field_string(field_string: str) -> Field:
    """Parse rational, prime or prime:P into a field."""
    validator = ValidateFieldString(field_string)
    valid, error = validator.is_valid()
    if not valid:
        raise UsageError(f"Invalid field {field_string!r}: {error}")
    return validator.field


def resolve_field(
    scheme_file: SchemeFile,
    override: Optional[str] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> Field:
    """Pick the field: a command line override, then MULTIREG_FIELD, then the file."""
    if override:
        return parse_field_string(override)
    environ = os.environ if environ is None else environ
    from_env = environ.get(ENV_FIELD)
    if from_env:
        _LOGGER.warning("Field overridden by %s=%s", ENV_FIELD, from_env)
        return parse_field_string(from_env)
    return scheme_file.field
