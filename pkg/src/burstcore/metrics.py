"""Community quality scores over temporal edges: average density and separability."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .temporal_graph import TemporalGraph, node_mask

__all__ = ["MetricReport", "average_density", "average_separability", "score", "edge_counts"]


@dataclass(frozen=True)
class MetricReport:
    ad: float
    as_: float
    internal_edges: int
    cross_edges: int
    community_size: int

    def to_json(self) -> dict:
        return {
            "AD": self.ad,
            "AS": "inf" if math.isinf(self.as_) else self.as_,
            "internal": self.internal_edges,
            "cross": self.cross_edges,
            "size": self.community_size,
        }


def _members(g: TemporalGraph, C) -> tuple[bytearray, int]:
    mask = node_mask(g, C)
    size = sum(mask)
    if size == 0:
        raise ValueError("community must be nonempty")
    return mask, size


def edge_counts(g: TemporalGraph, C: Iterable[int]) -> tuple[int, int]:
    """Temporal edges with both ends in ``C`` and with exactly one end in ``C``."""
    mask, _ = _members(g, C)
    internal = cross = 0
    for u in range(g.n):
        if not mask[u]:
            continue
        for w, _t in g.adjacency[u]:
            if mask[w]:
                internal += 1
            else:
                cross += 1
    return internal // 2, cross


def average_density(g: TemporalGraph, C: Iterable[int]) -> float:
    """Internal temporal edges incident to members, per member (``2 * internal / |C|``)."""
    mask, size = _members(g, C)
    internal, _ = edge_counts(g, mask)
    return 2 * internal / size


def average_separability(g: TemporalGraph, C: Iterable[int]) -> float:
    """Internal over cross temporal-edge count; ``inf`` with no cross edges, 0 with no internal ones."""
    internal, cross = edge_counts(g, C)
    if internal == 0:
        return 0.0
    if cross == 0:
        return math.inf
    return internal / cross


def score(g: TemporalGraph, C: Iterable[int]) -> MetricReport:
    mask, size = _members(g, C)
    internal, cross = edge_counts(g, mask)
    if internal == 0:
        sep = 0.0
    elif cross == 0:
        sep = math.inf
    else:
        sep = internal / cross
    return MetricReport(2 * internal / size, sep, internal, cross, size)
