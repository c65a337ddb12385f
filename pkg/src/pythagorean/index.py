"""All-items price index from a weighted basket of category sub-indices."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidBasket
from .means import MeanKind, WeightedSample, mean

__all__ = ["BasketEntry", "IndexBasket", "IndexReport", "aggregate_index", "index_report"]

WEIGHT_SUM_TOL = 1e-6


@dataclass(frozen=True)
class BasketEntry:
    category: str
    weight: float
    sub_index: float


@dataclass(frozen=True)
class IndexBasket:
    """Categories with basket weights summing to 1 and positive sub-indices.

    Published weights are usually rounded to four decimals, hence the loose
    sum tolerance.
    """

    entries: tuple[BasketEntry, ...]

    def __init__(self, entries: Iterable[BasketEntry | tuple[str, float, float]]):
        items = tuple(e if isinstance(e, BasketEntry) else BasketEntry(str(e[0]), float(e[1]), float(e[2]))
                      for e in entries)
        if not items:
            raise InvalidBasket("basket is empty")
        seen = set()
        for e in items:
            if e.category in seen:
                raise InvalidBasket(f"duplicate category {e.category!r}")
            seen.add(e.category)
            if not (0 < e.weight <= 1):
                raise InvalidBasket(f"weight of {e.category!r} must lie in (0, 1], got {e.weight!r}")
            if not (math.isfinite(e.sub_index) and e.sub_index > 0):
                raise InvalidBasket(f"sub-index of {e.category!r} must be positive, got {e.sub_index!r}")
        total = math.fsum(e.weight for e in items)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidBasket(f"weights sum to {total!r}, not 1")
        object.__setattr__(self, "entries", items)

    def as_sample(self) -> WeightedSample:
        return WeightedSample([e.sub_index for e in self.entries], [e.weight for e in self.entries])

    def rebased(self, factor: float) -> "IndexBasket":
        return IndexBasket(BasketEntry(e.category, e.weight, e.sub_index * factor) for e in self.entries)


def aggregate_index(b: IndexBasket, k: MeanKind) -> float:
    return mean(b.as_sample(), k)


@dataclass(frozen=True)
class IndexReport:
    aggregates: dict[MeanKind, float]
    differences: dict[str, float] = field(default_factory=dict)
    spread_pct: float = 0.0

    def as_dict(self) -> dict:
        return {
            "aggregates": {k.value: v for k, v in self.aggregates.items()},
            "differences": dict(self.differences),
            "spread_pct": self.spread_pct,
        }


def index_report(b: IndexBasket) -> IndexReport:
    """All three aggregates, their pairwise gaps and the AM-to-HM spread.

    ``spread_pct`` is ``100 * (AM - HM) / AM``: how far the harmonic
    aggregate sits below the arithmetic one.
    """
    agg = {k: aggregate_index(b, k) for k in MeanKind}
    am, gm, hm = agg[MeanKind.ARITHMETIC], agg[MeanKind.GEOMETRIC], agg[MeanKind.HARMONIC]
    diffs = {"AM-GM": am - gm, "GM-HM": gm - hm, "AM-HM": am - hm}
    return IndexReport(agg, diffs, 100.0 * (am - hm) / am)
