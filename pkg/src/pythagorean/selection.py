"""Data-selection diagnostics.

Two ways to see how strongly each measurement pulls on a mean:

* attraction functions, a decreasing kernel of the squared distance between
  a measurement and the mean (Cauchy, optionally weighted, or Gaussian);
* velocity curves for the two-point sample ``{1, x}``: how fast each mean
  closes in on ``x`` as the weight on ``x`` grows.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument, InvalidSample
from .means import MeanKind, WeightedSample, mean

__all__ = [
    "AttractionProfile",
    "VelocityCurve",
    "OutOfRangeWarning",
    "regular_grid",
    "cauchy_attraction",
    "attraction_profile",
    "weighted_attraction_cauchy",
    "weighted_attraction_gaussian",
    "mean_velocity",
    "velocity_curve",
]


class OutOfRangeWarning(UserWarning):
    """Attraction evaluated at a point outside the sample range."""


@dataclass(frozen=True)
class AttractionProfile:
    mean_kind: MeanKind
    mu: float
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class VelocityCurve:
    mean_kind: MeanKind
    x: float
    samples: tuple[tuple[float, float], ...]


def regular_grid(start: float, stop: float, points: int) -> np.ndarray:
    """``points`` equally spaced values from ``start`` to ``stop`` inclusive."""
    if points < 2:
        raise InvalidArgument("a grid needs at least 2 points")
    if not stop > start:
        raise InvalidArgument("grid stop must exceed start")
    return np.linspace(start, stop, points)


def _bounds(s: WeightedSample) -> tuple[float, float]:
    x, _ = s.support()
    return float(np.min(x)), float(np.max(x))


def _range_squared(s: WeightedSample) -> float:
    lo, hi = _bounds(s)
    c = (hi - lo) ** 2
    if c == 0:
        raise InvalidSample("attraction needs a sample with a nonzero range")
    return c


def cauchy_attraction(s: WeightedSample, k: MeanKind, x: float, *, mu: float | None = None) -> float:
    """``range**2 / ((x - mu)**2 + 1)`` with ``mu`` the k-mean of ``s``.

    ``mu`` may be passed in to avoid recomputing it along a profile.
    """
    lo, hi = _bounds(s)
    if not lo <= x <= hi:
        warnings.warn(f"x={x!r} lies outside [{lo!r}, {hi!r}]", OutOfRangeWarning, stacklevel=2)
    if mu is None:
        mu = mean(s, k)
    return _range_squared(s) / ((x - mu) ** 2 + 1.0)


def attraction_profile(
    s: WeightedSample, k: MeanKind, xs: Iterable[float] | None = None
) -> AttractionProfile:
    """Cauchy attraction evaluated at ``xs`` (default: the sample values)."""
    mu = mean(s, k)
    c = _range_squared(s)
    pts = s.values if xs is None else tuple(float(x) for x in xs)
    lo, hi = _bounds(s)
    outside = [x for x in pts if not lo <= x <= hi]
    if outside:
        warnings.warn(
            f"{len(outside)} point(s) outside [{lo!r}, {hi!r}]", OutOfRangeWarning, stacklevel=2
        )
    return AttractionProfile(k, mu, tuple((x, c / ((x - mu) ** 2 + 1.0)) for x in pts))


def _check_index(s: WeightedSample, i: int) -> None:
    if not (isinstance(i, (int, np.integer)) and 0 <= i < len(s)):
        raise InvalidArgument(f"index {i!r} out of range for a sample of {len(s)}")


def weighted_attraction_cauchy(s: WeightedSample, k: MeanKind, i: int) -> float:
    """``C / (w_i * d**2 + 1)`` at sample point ``i``.

    ``w_i`` is the raw weight, not normalized: with all weights equal to 1
    this reduces to :func:`cauchy_attraction`. ``C`` is the squared range of
    the positively weighted values.
    """
    _check_index(s, i)
    d2 = (s.values[i] - mean(s, k)) ** 2
    return _range_squared(s) / (s.weights[i] * d2 + 1.0)


def weighted_attraction_gaussian(s: WeightedSample, k: MeanKind, i: int) -> float:
    """``C * exp(-w_i * d**2)``; the weight acts as an inverse variance.

    Positive in exact arithmetic, but underflows to 0.0 once ``w_i * d**2``
    exceeds about 745.
    """
    _check_index(s, i)
    d2 = (s.values[i] - mean(s, k)) ** 2
    return _range_squared(s) * math.exp(-s.weights[i] * d2)


def _two_point_mean(k: MeanKind, x: float, w: float) -> float:
    if k is MeanKind.ARITHMETIC:
        return (1.0 - w) + w * x
    if k is MeanKind.GEOMETRIC:
        return x**w
    return 1.0 / ((1.0 - w) + w / x)


def mean_velocity(k: MeanKind, x: float, w: float) -> float:
    """Squared gap between the mean of ``{1, x}`` (weight ``w`` on ``x``) and ``x``."""
    if not 0 < x < 1:
        raise InvalidArgument(f"x must lie in (0, 1), got {x!r}")
    if not 0 < w <= 1:
        raise InvalidArgument(f"w must lie in (0, 1], got {w!r}")
    if w == 1:
        return 0.0
    return (_two_point_mean(k, x, w) - x) ** 2


def velocity_curve(k: MeanKind, x: float, ws: Sequence[float] | None = None, points: int = 100) -> VelocityCurve:
    """Velocity over ``ws`` (default: ``points`` values evenly spaced in (0, 1])."""
    if ws is None:
        ws = np.linspace(1.0 / points, 1.0, points)
    return VelocityCurve(k, float(x), tuple((float(w), mean_velocity(k, x, w)) for w in ws))
