"""Arithmetic, geometric and harmonic means as transform-space least squares.

The core API lives in :mod:`pythagorean.means`; the other modules build on
it: :mod:`~pythagorean.geometry`, :mod:`~pythagorean.selection`,
:mod:`~pythagorean.predictor`, :mod:`~pythagorean.index` and
:mod:`~pythagorean.ellipse`.
"""

from .errors import (
    DegenerateCloud,
    DomainError,
    InvalidArgument,
    InvalidBasket,
    InvalidSample,
    ParseError,
    PythagoreanError,
)
from .means import (
    MeanKind,
    Transform,
    WeightedSample,
    arithmetic_mean,
    brute_force_mean,
    criterion_value,
    geometric_mean,
    harmonic_mean,
    mean,
    quasi_arithmetic_mean,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateCloud",
    "DomainError",
    "InvalidArgument",
    "InvalidBasket",
    "InvalidSample",
    "ParseError",
    "PythagoreanError",
    "MeanKind",
    "Transform",
    "WeightedSample",
    "arithmetic_mean",
    "brute_force_mean",
    "criterion_value",
    "geometric_mean",
    "harmonic_mean",
    "mean",
    "quasi_arithmetic_mean",
]
