"""Geometric readings of the three means.

The means of ``n`` equally weighted values are primitives of the
hyperrectangle whose edge lengths are those values:

* arithmetic mean: hyperperimeter divided by the number of edges,
* geometric mean: n-th root of the hypervolume,
* harmonic mean: hypervolume divided by the mean facet volume.

For two values there is also the classical semicircle construction, and the
arithmetic-geometric mean is the limit of alternating the first two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, InvalidArgument

__all__ = [
    "HyperRect",
    "CircleConstruction",
    "hyperperimeter",
    "am_from_perimeter",
    "hypervolume",
    "gm_from_volume",
    "facet_volume_mean",
    "hm_from_ratio",
    "circle_construction",
    "agm_sequence",
    "arithmetic_geometric_mean",
]

AGM_MAX_ITERATIONS = 100


@dataclass(frozen=True)
class HyperRect:
    edges: tuple[float, ...]

    def __init__(self, edges: Iterable[float]):
        e = tuple(float(x) for x in edges)
        if len(e) < 2:
            raise InvalidArgument("a hyperrectangle needs at least 2 edges")
        for x in e:
            if not (math.isfinite(x) and x > 0):
                raise DomainError(f"edge lengths must be positive and finite, got {x!r}")
        object.__setattr__(self, "edges", e)

    @property
    def n(self) -> int:
        return len(self.edges)


def hyperperimeter(r: HyperRect) -> float:
    """Total length of all ``2**(n-1) * n`` edges."""
    return 2.0 ** (r.n - 1) * math.fsum(r.edges)


def am_from_perimeter(r: HyperRect) -> float:
    return hyperperimeter(r) / (2.0 ** (r.n - 1) * r.n)


def hypervolume(r: HyperRect) -> float:
    return math.prod(r.edges)


def gm_from_volume(r: HyperRect) -> float:
    return hypervolume(r) ** (1.0 / r.n)


def _facet_volumes(r: HyperRect) -> list[float]:
    v = hypervolume(r)
    if math.isfinite(v) and v > 0:
        return [v / x for x in r.edges]
    # product over/underflowed, so V/x_j is meaningless
    return [
        math.prod(x for i, x in enumerate(r.edges) if i != j) for j in range(r.n)
    ]


def facet_volume_mean(r: HyperRect) -> float:
    """Mean (n-1)-volume over the facets.

    Facets come in n pairs of equal ones, so averaging over the n distinct
    volumes ``prod(x_i for i != j)`` gives the same value as over all 2n.
    """
    return math.fsum(_facet_volumes(r)) / r.n


def hm_from_ratio(r: HyperRect) -> float:
    return hypervolume(r) / facet_volume_mean(r)


@dataclass(frozen=True)
class CircleConstruction:
    """Semicircle on the diameter BC with BG = x1 and GC = x2.

    O is the centre, H the point on the circle above G, and D the foot of the
    perpendicular from G onto OH. Then OH, HG and HD are the arithmetic,
    geometric and harmonic means of x1 and x2.
    """

    x1: float
    x2: float
    radius_OH: float
    chord_HG: float
    segment_HD: float

    def points(self) -> dict[str, tuple[float, float]]:
        """Coordinates of B, G, C, O, H, D with B at the origin and BC on the x axis."""
        d = self.x1 + self.x2
        o = (d / 2.0, 0.0)
        g = (self.x1, 0.0)
        h = (self.x1, self.chord_HG)
        t = self.segment_HD / self.radius_OH
        dpt = (h[0] + t * (o[0] - h[0]), h[1] + t * (o[1] - h[1]))
        return {"B": (0.0, 0.0), "G": g, "C": (d, 0.0), "O": o, "H": h, "D": dpt}


def circle_construction(x1: float, x2: float) -> CircleConstruction:
    if not (x1 > 0 and x2 > 0):
        raise DomainError(f"circle construction needs positive lengths, got {x1!r}, {x2!r}")
    oh = (x1 + x2) / 2.0
    hg = math.sqrt(x1 * x2)
    # HD = HG**2 / OH by similar triangles
    hd = 2.0 * x1 * x2 / (x1 + x2)
    return CircleConstruction(float(x1), float(x2), oh, hg, hd)


def agm_sequence(a: float, b: float) -> Iterator[tuple[float, float]]:
    """Yield successive (arithmetic, geometric) pairs, starting from (a, b).

    Stops once the pair agrees to 1e-12 relative, or after
    ``AGM_MAX_ITERATIONS`` steps.
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"AGM needs positive arguments, got {a!r}, {b!r}")
    a, b = float(a), float(b)
    yield a, b
    for _ in range(AGM_MAX_ITERATIONS):
        if abs(a - b) <= 1e-12 * max(a, b):
            return
        a, b = (a + b) / 2.0, math.sqrt(a * b)
        yield a, b


def arithmetic_geometric_mean(a: float, b: float) -> float:
    """Common limit of iterating ``(a, b) -> ((a + b)/2, sqrt(a*b))``.

    >>> arithmetic_geometric_mean(3.0, 3.0)
    3.0
    """
    if a == b and a > 0:
        return float(a)
    *_, (a_n, b_n) = agm_sequence(a, b)
    return (a_n + b_n) / 2.0
