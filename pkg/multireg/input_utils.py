"""Utilities for parsing and validating command line strings."""
from __future__ import annotations

from typing import Optional

from sympy import isprime

from .const import DEFAULT_PRIME, MIN_PRIME, MODE_PRIME, MODE_RATIONAL
from .exact_linalg import Field, field_from_config


class ValidateIntegerList:
    """Define a comma separated integer list validation object."""

    minimum = 0

    def __init__(self, list_string: str, length: Optional[int] = None) -> None:
        """Initialize the ValidateIntegerList Object."""
        self.list_str = list_string
        self.error = ""
        self.valid = False
        self.values: Optional[tuple[int, ...]] = None

        try:
            parts = self.list_str.split(",")
        except AttributeError:
            self.error = "cant_parse"
            return

        try:
            values = tuple(int(part.strip()) for part in parts)
        except ValueError:
            self.error = "cant_parse"
            return

        if length is not None and len(values) != length:
            self.error = "invalid_length"
            return

        if any(value < self.minimum for value in values):
            self.error = "out_of_range"
            return

        self.values = values
        self.valid = True

    def is_valid(self) -> tuple[bool, str]:
        """Return True if string parses, False and an error if not."""
        return (self.valid, self.error)


class ValidateMultidegreeString(ValidateIntegerList):
    """Validate a multidegree such as 3,3."""

    @property
    def multidegree(self) -> tuple[int, ...]:
        """Return parsed multidegree."""
        return self.values


class ValidateMultiplicityString(ValidateIntegerList):
    """Validate multiplicities such as 2,1,1."""

    minimum = 1

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """Return parsed multiplicities."""
        return self.values


class ValidateShapeString(ValidateIntegerList):
    """Validate factor dimensions such as 1,1."""

    minimum = 1

    @property
    def factors(self) -> tuple[int, ...]:
        """Return parsed factor dimensions."""
        return self.values


class ValidateFieldString:
    """Define a field override string validation object: rational, prime or prime:P."""

    def __init__(self, field_string: str) -> None:
        """Initialize the ValidateFieldString Object."""
        self.field_str = field_string
        self.error = ""
        self.valid = False
        self.mode = None
        self.prime = None

        try:
            mode, _, prime = self.field_str.strip().partition(":")
        except AttributeError:
            self.error = "cant_parse"
            return

        if mode == MODE_RATIONAL and not prime:
            self.mode = MODE_RATIONAL
            self.valid = True
            return

        if mode != MODE_PRIME:
            self.error = "unknown_mode"
            return

        try:
            self.prime = int(prime) if prime else DEFAULT_PRIME
        except ValueError:
            self.error = "cant_parse"
            return

        if self.prime <= MIN_PRIME:
            self.error = "prime_too_small"
            return

        if not isprime(self.prime):
            self.error = "not_prime"
            return

        self.mode = MODE_PRIME
        self.valid = True

    def is_valid(self) -> tuple[bool, str]:
        """Return True if string parses, False and an error if not."""
        return (self.valid, self.error)

    @property
    def field(self) -> Field:
        """Return parsed field."""
        return field_from_config(self.mode, self.prime)
