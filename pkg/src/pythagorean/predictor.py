"""Best prediction under a quadratic gain measured in a transformed space.

A forecaster predicting ``x`` when the outcome is ``n`` earns
``base - penalty * (T(x) - T(n))**2``. Averaging over an empirical outcome
distribution gives the return function ``R(x)``; since ``T`` is invertible,
its maximizer is ``T^-1(sum(T(n) * pr(n)))``, the quasi-arithmetic mean of
the outcomes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InvalidArgument, InvalidSample
from .means import Transform, WeightedSample

__all__ = [
    "EmpiricalDistribution",
    "GainSpec",
    "Prediction",
    "gain",
    "return_function",
    "best_predictor",
]

PROBABILITY_SUM_TOL = 1e-9


@dataclass(frozen=True)
class EmpiricalDistribution:
    outcomes: tuple[tuple[float, float], ...]

    def __init__(self, outcomes: Iterable[tuple[float, float]]):
        pairs = tuple((float(v), float(p)) for v, p in outcomes)
        if not pairs:
            raise InvalidSample("distribution has no outcomes")
        values = [v for v, _ in pairs]
        if len(set(values)) != len(values):
            raise InvalidSample("outcome values must be distinct")
        for v, p in pairs:
            if not (math.isfinite(v) and v > 0):
                raise InvalidSample(f"outcome values must be positive, got {v!r}")
            if not 0 <= p <= 1:
                raise InvalidSample(f"probability {p!r} outside [0, 1]")
        total = math.fsum(p for _, p in pairs)
        if abs(total - 1.0) > PROBABILITY_SUM_TOL:
            raise InvalidSample(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "outcomes", pairs)

    @classmethod
    def from_counts(cls, counts: Iterable[tuple[float, float]]) -> "EmpiricalDistribution":
        pairs = [(float(v), float(c)) for v, c in counts]
        for _, c in pairs:
            if not (math.isfinite(c) and c >= 0):
                raise InvalidSample(f"counts must be non-negative, got {c!r}")
        total = math.fsum(c for _, c in pairs)
        if not total > 0:
            raise InvalidSample("counts sum to zero")
        return cls((v, c / total) for v, c in pairs)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for v, _ in self.outcomes])

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([p for _, p in self.outcomes])

    def as_sample(self) -> WeightedSample:
        return WeightedSample(self.values, self.probabilities)


@dataclass(frozen=True)
class GainSpec:
    base: float = 1000.0
    penalty: float = 30.0
    transform: Transform = Transform.IDENTITY

    def __post_init__(self):
        if not (math.isfinite(self.penalty) and self.penalty > 0):
            raise InvalidArgument(f"penalty must be positive, got {self.penalty!r}")
        if not math.isfinite(self.base):
            raise InvalidArgument("base must be finite")


class Prediction(NamedTuple):
    x_star: float
    return_star: float


def gain(spec: GainSpec, x: float, n: float) -> float:
    t = spec.transform
    return spec.base - spec.penalty * (t.forward(x) - t.forward(n)) ** 2


def return_function(spec: GainSpec, dist: EmpiricalDistribution, x):
    """Expected gain of predicting ``x``.

    A scalar ``x`` gives a float, an array of predictions gives an array.
    """
    t = spec.transform
    xs = np.asarray(x, dtype=float)
    err = np.asarray(t.forward(xs))[..., None] - t.forward(dist.values)
    r = spec.base - spec.penalty * (err**2 @ dist.probabilities)
    return float(r) if r.ndim == 0 else r


def best_predictor(spec: GainSpec, dist: EmpiricalDistribution) -> Prediction:
    t = spec.transform
    a = float(np.dot(t.forward(dist.values), dist.probabilities))
    x_star = float(t.inverse(a))
    return Prediction(x_star, return_function(spec, dist, x_star))
