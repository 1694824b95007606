"""Rational point counts of projective varieties over finite fields."""

from ._core import *  # noqa: F401,F403
from ._core import (
    CapacityError,
    ContextMismatch,
    Field,
    FqpError,
    InvalidArgument,
    InvariantViolation,
    ParseError,
    Polynomial,
    PositiveDimension,
)

__version__ = "0.1.0"
