"""Errors raised for regime violations and unusable modular systems.

The CLI maps every ``AkschError`` to exit code 3.
"""


class AkschError(Exception):
    pass


class RegimeError(AkschError, ValueError):
    """An operation was asked for outside the parameter regime it is valid in."""


class DegenerateError(AkschError):
    """The chosen modular system does not separate a contributing pair."""


class TruncationError(AkschError):
    """A deformation exponent does not fit below the truncation order."""
