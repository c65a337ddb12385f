"""CSV readers and writers for samples, distributions, baskets and point clouds.

Every reader validates the file against the target type and reports
problems with a 1-based line number (the header is line 1).
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterator

from .ellipse import PointCloud2D
from .errors import ParseError, PythagoreanError
from .index import BasketEntry, IndexBasket
from .means import WeightedSample
from .predictor import EmpiricalDistribution

__all__ = [
    "parse_weighted_csv",
    "parse_distribution_csv",
    "parse_basket_csv",
    "parse_points_csv",
    "write_weighted_csv",
    "write_distribution_csv",
    "write_basket_csv",
    "write_points_csv",
]


def _rows(path, allowed_headers: list[tuple[str, ...]]) -> tuple[tuple[str, ...], Iterator[tuple[int, list[str]]]]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ParseError("file not found", path=path) from None
    except UnicodeDecodeError:
        raise ParseError("file is not valid UTF-8", path=path) from None
    reader = csv.reader(text.splitlines())
    try:
        header = tuple(c.strip().lower() for c in next(reader))
    except StopIteration:
        raise ParseError("file is empty", line=1, path=path) from None
    if header not in allowed_headers:
        expected = " or ".join(",".join(h) for h in allowed_headers)
        raise ParseError(f"header {','.join(header)!r}, expected {expected!r}", line=1, path=path)

    def body():
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, got {len(row)}", line=lineno, path=path
                )
            yield lineno, [c.strip() for c in row]

    return header, body()


def _number(cell: str, name: str, lineno: int, path) -> float:
    try:
        x = float(cell)
    except ValueError:
        raise ParseError(f"{name} {cell!r} is not a number", line=lineno, path=path) from None
    if not math.isfinite(x):
        raise ParseError(f"{name} {cell!r} is not finite", line=lineno, path=path)
    return x


def _nonnegative(cell: str, name: str, lineno: int, path) -> float:
    x = _number(cell, name, lineno, path)
    if x < 0:
        raise ParseError(f"{name} {cell!r} is negative", line=lineno, path=path)
    return x


def _wrap(path, build):
    try:
        return build()
    except ParseError:
        raise
    except PythagoreanError as exc:
        raise ParseError(str(exc), path=path) from exc


def parse_weighted_csv(path) -> WeightedSample:
    """Header ``value`` (equal weights) or ``value,weight``."""
    header, rows = _rows(path, [("value",), ("value", "weight")])
    values, weights = [], []
    for lineno, row in rows:
        values.append(_number(row[0], "value", lineno, path))
        weights.append(_nonnegative(row[1], "weight", lineno, path) if len(header) == 2 else 1.0)
    if not values:
        raise ParseError("no data rows", path=path)
    return _wrap(path, lambda: WeightedSample(values, weights))


def parse_distribution_csv(path) -> EmpiricalDistribution:
    """Header ``value,probability``, or ``value,count`` normalized on load."""
    header, rows = _rows(path, [("value", "probability"), ("value", "count")])
    pairs = []
    seen: dict[float, int] = {}
    for lineno, row in rows:
        v = _number(row[0], "value", lineno, path)
        if v in seen:
            raise ParseError(f"duplicate outcome {row[0]!r} (first on line {seen[v]})", line=lineno, path=path)
        seen[v] = lineno
        if v <= 0:
            raise ParseError(f"outcome {row[0]!r} must be positive", line=lineno, path=path)
        pairs.append((v, _nonnegative(row[1], header[1], lineno, path)))
    if not pairs:
        raise ParseError("no data rows", path=path)
    if header[1] == "count":
        return _wrap(path, lambda: EmpiricalDistribution.from_counts(pairs))
    return _wrap(path, lambda: EmpiricalDistribution(pairs))


def parse_basket_csv(path) -> IndexBasket:
    """Header ``category,weight,index``."""
    _, rows = _rows(path, [("category", "weight", "index")])
    entries = []
    seen: dict[str, int] = {}
    for lineno, row in rows:
        cat = row[0]
        if not cat:
            raise ParseError("empty category", line=lineno, path=path)
        if cat in seen:
            raise ParseError(f"duplicate category {cat!r} (first on line {seen[cat]})", line=lineno, path=path)
        seen[cat] = lineno
        w = _nonnegative(row[1], "weight", lineno, path)
        idx = _number(row[2], "index", lineno, path)
        if idx <= 0:
            raise ParseError(f"index {row[2]!r} must be positive", line=lineno, path=path)
        entries.append(BasketEntry(cat, w, idx))
    return _wrap(path, lambda: IndexBasket(entries))


def parse_points_csv(path) -> PointCloud2D:
    """Header ``x,y``."""
    _, rows = _rows(path, [("x", "y")])
    pts = [
        (_number(row[0], "x", lineno, path), _number(row[1], "y", lineno, path))
        for lineno, row in rows
    ]
    return _wrap(path, lambda: PointCloud2D(pts))


def _write(path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def write_weighted_csv(path, s: WeightedSample) -> None:
    _write(path, ["value", "weight"], ([repr(v), repr(w)] for v, w in zip(s.values, s.weights)))


def write_distribution_csv(path, d: EmpiricalDistribution) -> None:
    _write(path, ["value", "probability"], ([repr(v), repr(p)] for v, p in d.outcomes))


def write_basket_csv(path, b: IndexBasket) -> None:
    _write(path, ["category", "weight", "index"],
           ([e.category, repr(e.weight), repr(e.sub_index)] for e in b.entries))


def write_points_csv(path, p: PointCloud2D) -> None:
    _write(path, ["x", "y"], ([repr(x), repr(y)] for x, y in p.points))
