"""Weighted arithmetic, geometric and harmonic means.

Each mean is the arithmetic mean of transformed data, mapped back through the
inverse transform: identity gives the arithmetic mean, ``ln`` the geometric
mean and ``1/x`` the harmonic mean. Equivalently, the transformed mean ``a``
minimizes the weighted squared error ``sum(w_i * (T(x_i) - a)**2)``.

>>> s = WeightedSample.equal([8, 13, 14, 10, 1000])
>>> arithmetic_mean(s)
209.0
>>> round(harmonic_mean(s), 2)
13.36
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, InvalidArgument, InvalidSample

__all__ = [
    "Transform",
    "MeanKind",
    "WeightedSample",
    "arithmetic_mean",
    "geometric_mean",
    "harmonic_mean",
    "quasi_arithmetic_mean",
    "mean",
    "criterion_value",
    "brute_force_mean",
]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class Transform(enum.Enum):
    """Invertible monotone data transform. Used for both data and parameter."""

    IDENTITY = "identity"
    LOG = "log"
    RECIPROCAL = "reciprocal"

    def check_domain(self, x) -> None:
        if self is Transform.IDENTITY:
            return
        arr = np.asarray(x, dtype=float)
        bad = arr[~(arr > 0)]
        if bad.size:
            raise DomainError(
                f"{self.value} transform requires x > 0, got {float(bad.flat[0])!r}"
            )

    def forward(self, x):
        self.check_domain(x)
        if self is Transform.IDENTITY:
            return np.asarray(x, dtype=float) if np.ndim(x) else float(x)
        if self is Transform.LOG:
            return np.log(x) if np.ndim(x) else math.log(x)
        return 1.0 / np.asarray(x, dtype=float) if np.ndim(x) else 1.0 / x

    def inverse(self, y):
        if self is Transform.IDENTITY:
            return np.asarray(y, dtype=float) if np.ndim(y) else float(y)
        if self is Transform.LOG:
            return np.exp(y) if np.ndim(y) else math.exp(y)
        # 1/x maps (0, inf) onto itself, so the inverse needs y > 0 as well
        arr = np.asarray(y, dtype=float)
        bad = arr[~(arr > 0)]
        if bad.size:
            raise DomainError(
                f"reciprocal inverse requires y > 0, got {float(bad.flat[0])!r}"
            )
        return 1.0 / arr if np.ndim(y) else 1.0 / y

    @property
    def mean_kind(self) -> "MeanKind":
        return _KIND_BY_TRANSFORM[self]

    @classmethod
    def parse(cls, name: str) -> "Transform":
        key = name.strip().lower()
        aliases = {"id": "identity", "ln": "log", "inverse": "reciprocal", "inv": "reciprocal"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise InvalidArgument(f"unknown transform {name!r}") from None


class MeanKind(enum.Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"
    HARMONIC = "harmonic"

    @property
    def transform(self) -> Transform:
        return _TRANSFORM_BY_KIND[self]

    @property
    def short(self) -> str:
        return {"arithmetic": "AM", "geometric": "GM", "harmonic": "HM"}[self.value]

    @classmethod
    def for_transform(cls, t: Transform) -> "MeanKind":
        return _KIND_BY_TRANSFORM[t]

    @classmethod
    def parse(cls, name: str) -> "MeanKind":
        key = name.strip().lower()
        for kind in cls:
            if key in (kind.value, kind.short.lower()):
                return kind
        raise InvalidArgument(f"unknown mean {name!r}")


_TRANSFORM_BY_KIND = {
    MeanKind.ARITHMETIC: Transform.IDENTITY,
    MeanKind.GEOMETRIC: Transform.LOG,
    MeanKind.HARMONIC: Transform.RECIPROCAL,
}
_KIND_BY_TRANSFORM = {t: k for k, t in _TRANSFORM_BY_KIND.items()}


@dataclass(frozen=True)
class WeightedSample:
    """Measurements with non-negative weights.

    Weights may be counts, probabilities or relevance scores; only their
    ratios matter. Zero-weighted values are carried along but ignored by
    every mean, including the domain check.
    """

    values: tuple[float, ...]
    weights: tuple[float, ...]

    def __init__(self, values: Iterable[float], weights: Iterable[float] | None = None):
        vals = tuple(float(v) for v in values)
        wts = (1.0,) * len(vals) if weights is None else tuple(float(w) for w in weights)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weights", wts)
        self._validate()

    @classmethod
    def equal(cls, values: Iterable[float]) -> "WeightedSample":
        return cls(values)

    def _validate(self) -> None:
        if not self.values:
            raise InvalidSample("sample is empty")
        if len(self.weights) != len(self.values):
            raise InvalidSample(
                f"{len(self.values)} values but {len(self.weights)} weights"
            )
        if not all(math.isfinite(v) for v in self.values):
            raise InvalidSample("values must be finite")
        for w in self.weights:
            if not (math.isfinite(w) and w >= 0):
                raise InvalidSample(f"weights must be finite and non-negative, got {w!r}")
        if not sum(self.weights) > 0:
            raise InvalidSample("weights sum to zero")

    def __len__(self) -> int:
        return len(self.values)

    def support(self) -> tuple[np.ndarray, np.ndarray]:
        """Positively weighted values and their normalized weights.

        Pairs come back sorted so that sums do not depend on input order.
        """
        x, w = self._raw_support()
        return x, w / w.sum()

    def _raw_support(self) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(self.values, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        keep = w > 0
        x, w = x[keep], w[keep]
        order = np.lexsort((w, x))
        return x[order], w[order]

    def scaled(self, factor: float) -> "WeightedSample":
        return WeightedSample([v * factor for v in self.values], self.weights)


def _as_sample(s) -> WeightedSample:
    if isinstance(s, WeightedSample):
        return s
    return WeightedSample(s)


def _clip(mu: float, x: np.ndarray) -> float:
    # rounding can push the result an ulp outside the data range
    return float(min(max(mu, x.min()), x.max()))


def _positive_support(s: WeightedSample) -> tuple[np.ndarray, np.ndarray]:
    x, p = s.support()
    if np.any(x <= 0):
        raise DomainError(
            f"geometric/harmonic means need positive data, got {float(x[x <= 0][0])!r}"
        )
    return x, p


def _weighted_average(w: np.ndarray, y: np.ndarray) -> float:
    # compensated sums keep e.g. the mean of 0.1, 0.2, ..., 10 at exactly 5.05
    return math.fsum(w * y) / math.fsum(w)


def arithmetic_mean(s: WeightedSample | Sequence[float]) -> float:
    """Weighted arithmetic mean ``sum(p_i * x_i)`` with ``p = w / sum(w)``."""
    x, w = _as_sample(s)._raw_support()
    return _clip(_weighted_average(w, x), x)


def geometric_mean(s: WeightedSample | Sequence[float]) -> float:
    """Weighted geometric mean ``prod(x_i ** p_i)``.

    Raises DomainError if a positively weighted value is not strictly positive.
    """
    x, p = _positive_support(_as_sample(s))
    return _clip(float(np.prod(x**p)), x)


def harmonic_mean(s: WeightedSample | Sequence[float]) -> float:
    """Weighted harmonic mean ``1 / sum(p_i / x_i)``."""
    x, p = _positive_support(_as_sample(s))
    return _clip(float(1.0 / np.sum(p / x)), x)


def quasi_arithmetic_mean(s: WeightedSample | Sequence[float], t: Transform) -> float:
    """``t.inverse`` of the weighted arithmetic mean of ``t.forward(x)``."""
    x, w = _as_sample(s)._raw_support()
    y = t.forward(x)
    return _clip(float(t.inverse(_weighted_average(w, y))), x)


_CLOSED_FORMS = {
    MeanKind.ARITHMETIC: arithmetic_mean,
    MeanKind.GEOMETRIC: geometric_mean,
    MeanKind.HARMONIC: harmonic_mean,
}


def mean(s: WeightedSample | Sequence[float], kind: MeanKind) -> float:
    """Dispatch to the closed-form mean for ``kind``."""
    return _CLOSED_FORMS[kind](s)


def criterion_value(s: WeightedSample, t: Transform, a: float) -> float:
    """Normalized weighted squared error ``sum(p_i * (t(x_i) - a)**2)``.

    ``a`` lives in the transformed space.
    """
    x, p = s.support()
    y = t.forward(x)
    return float(np.dot(p, (y - a) ** 2))


def brute_force_mean(s: WeightedSample, t: Transform, grid_points: int = 201) -> float:
    """Minimize :func:`criterion_value` numerically and map back through ``t``.

    A uniform scan over the range of the transformed data locates the
    bracketing cell, then golden-section search narrows it to 1e-10. Uses
    nothing but the criterion, so it serves as an oracle for the closed forms.
    """
    if grid_points < 3:
        raise InvalidArgument("grid_points must be at least 3")
    x, p = s.support()
    y = t.forward(x)
    lo, hi = float(np.min(y)), float(np.max(y))
    if lo == hi:
        return float(t.inverse(lo))

    def cost(a: float) -> float:
        return float(np.dot(p, (y - a) ** 2))

    grid = np.linspace(lo, hi, grid_points)
    costs = ((y[None, :] - grid[:, None]) ** 2) @ p
    i = int(np.argmin(costs))
    left = grid[max(i - 1, 0)]
    right = grid[min(i + 1, grid_points - 1)]

    c = right - _GOLDEN * (right - left)
    d = left + _GOLDEN * (right - left)
    fc, fd = cost(c), cost(d)
    while right - left > 1e-10 * max(1.0, abs(left), abs(right)):
        if fc < fd:
            right, d, fd = d, c, fc
            c = right - _GOLDEN * (right - left)
            fc = cost(c)
        else:
            left, c, fc = c, d, fd
            d = left + _GOLDEN * (right - left)
            fd = cost(d)
    return float(t.inverse((left + right) / 2.0))
