"""Enclosing ellipses for 2D points, one per mean.

Coordinates are transformed (identity, log or reciprocal), the ellipse is
fitted in that space from the coordinate-wise mean and the sample
covariance, and its boundary is mapped back point by point. For the log and
reciprocal transforms the transported boundary is a closed curve but not, in
general, an exact ellipse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DegenerateCloud, DomainError, InvalidArgument
from .means import MeanKind

__all__ = ["PointCloud2D", "EllipseFit", "eig2x2_sym", "fit_ellipse"]

SINGULAR_TOL = 1e-12
Vec2 = tuple[float, float]


@dataclass(frozen=True)
class PointCloud2D:
    points: tuple[Vec2, ...]

    def __init__(self, points: Iterable[Iterable[float]]):
        pts = tuple((float(p[0]), float(p[1])) for p in (tuple(q) for q in points))
        if len(pts) < 3:
            raise DegenerateCloud(f"need at least 3 points, got {len(pts)}")
        if not all(math.isfinite(c) for p in pts for c in p):
            raise InvalidArgument("coordinates must be finite")
        arr = np.array(pts)
        centered = arr - arr.mean(axis=0)
        sv = np.linalg.svd(centered, compute_uv=False)
        if sv[0] == 0 or sv[1] <= SINGULAR_TOL * sv[0]:
            raise DegenerateCloud("points are collinear")
        object.__setattr__(self, "points", pts)

    def as_array(self) -> np.ndarray:
        return np.array(self.points)


@dataclass(frozen=True)
class EllipseFit:
    mean_kind: MeanKind
    center_original: Vec2
    center_transformed: Vec2
    directions: tuple[Vec2, Vec2]
    spreads: Vec2
    boundary: tuple[Vec2, ...]
    scale: float

    def as_dict(self) -> dict:
        return {
            "mean": self.mean_kind.value,
            "center_original": list(self.center_original),
            "center_transformed": list(self.center_transformed),
            "directions": [list(v) for v in self.directions],
            "spreads": list(self.spreads),
            "scale": self.scale,
            "boundary": [list(p) for p in self.boundary],
        }


def _fix_sign(v: np.ndarray) -> np.ndarray:
    for c in v:
        if c != 0:
            return v if c > 0 else -v
    return v


def eig2x2_sym(cxx: float, cxy: float, cyy: float) -> tuple[Vec2, tuple[Vec2, Vec2]]:
    """Eigenpairs of ``[[cxx, cxy], [cxy, cyy]]``, largest eigenvalue first.

    Closed form. Repeated eigenvalues get the coordinate axes; each vector's
    first nonzero component is positive.
    """
    half_tr = (cxx + cyy) / 2.0
    half_gap = math.hypot((cxx - cyy) / 2.0, cxy)
    l1, l2 = half_tr + half_gap, half_tr - half_gap

    if cxy == 0:
        if cxx >= cyy:
            v1 = np.array([1.0, 0.0])
        else:
            v1 = np.array([0.0, 1.0])
    else:
        # two algebraically equivalent forms; take the better conditioned one
        a = np.array([l1 - cyy, cxy])
        b = np.array([cxy, l1 - cxx])
        v1 = a if np.hypot(*a) >= np.hypot(*b) else b
        v1 = v1 / np.hypot(*v1)
    v1 = _fix_sign(v1)
    v2 = _fix_sign(np.array([-v1[1], v1[0]]))
    return (l1, l2), ((float(v1[0]), float(v1[1])), (float(v2[0]), float(v2[1])))


def fit_ellipse(
    p: PointCloud2D, k: MeanKind, scale: float = 2.0, boundary_points: int = 128
) -> EllipseFit:
    """Fit the ``k``-mean ellipse to ``p``.

    The boundary sits at Mahalanobis radius ``scale`` from the centre in the
    transformed space and is closed (last point equals the first).
    """
    if not (math.isfinite(scale) and scale > 0):
        raise InvalidArgument(f"scale must be positive, got {scale!r}")
    if boundary_points < 64:
        raise InvalidArgument("boundary needs at least 64 points")
    t = k.transform
    y = t.forward(p.as_array())
    center = y.mean(axis=0)
    cov = np.cov(y, rowvar=False, ddof=1)
    (l1, l2), (v1, v2) = eig2x2_sym(cov[0, 0], cov[0, 1], cov[1, 1])
    if l1 <= 0 or l2 <= SINGULAR_TOL * l1:
        raise DegenerateCloud(f"covariance is singular in {t.value} space")

    theta = np.linspace(0.0, 2.0 * math.pi, boundary_points)
    u = np.column_stack([np.cos(theta), np.sin(theta)])
    u[-1] = u[0]
    axes = np.array([np.sqrt(l1) * np.array(v1), np.sqrt(l2) * np.array(v2)])
    ring_t = center + scale * u @ axes
    try:
        ring = t.inverse(ring_t)
    except DomainError:
        raise DomainError(
            f"ellipse at scale {scale} leaves the valid {t.value} range; try a smaller scale"
        ) from None

    c_orig = t.inverse(center)
    return EllipseFit(
        mean_kind=k,
        center_original=(float(c_orig[0]), float(c_orig[1])),
        center_transformed=(float(center[0]), float(center[1])),
        directions=(v1, v2),
        spreads=(float(l1), float(l2)),
        boundary=tuple((float(a), float(b)) for a, b in ring),
        scale=float(scale),
    )
