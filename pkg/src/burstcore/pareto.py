"""Pareto-optimal (l, delta) dense cores.

Starting at ``l = 2`` the search alternates two sweeps: raise delta as far as
the core at the current ``l`` allows, then raise ``l`` with that delta fixed.
Each stop is a frontier point. Before the next round the candidates shrink
to the de-temporal k-core with ``k = delta * l / (l + 1)``: extending the
last core's windows by one snapshot keeps density at least that high, so
the next point's delta can not fall below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core_mining import PeelState, k_core, peel_incremental
from .density import Density, fraction_to_json
from .temporal_graph import TemporalGraph, detemporal

__all__ = ["ParetoPoint", "max_delta", "max_l", "pomdc", "pomdc_baseline", "frontier_to_json"]


@dataclass(frozen=True)
class ParetoPoint:
    l: int
    delta: Density
    nodes: tuple[int, ...]

    def to_json(self, g: TemporalGraph) -> dict:
        return {"l": self.l, "delta": fraction_to_json(self.delta),
                "nodes": [g.labels[u] for u in self.nodes]}


def frontier_to_json(points: Iterable[ParetoPoint], g: TemporalGraph) -> list:
    return [pt.to_json(g) for pt in sorted(points, key=lambda pt: pt.l)]


def _prime_all(g: TemporalGraph, l: int, candidates) -> PeelState:
    state = PeelState(g, l, candidates)
    for u in range(g.n):
        if state.present[u]:
            state.prime(u)
    return state


def max_delta(g: TemporalGraph, l: int, candidates: Iterable[int],
              state: PeelState | None = None) -> tuple[Density, tuple[int, ...]]:
    """Largest delta whose (l, delta)-core inside ``candidates`` is nonempty.

    Each round reads the smallest density among survivors, then peels every
    node at or below it. The last round before the set empties gives the
    answer and its node set. ``state`` may carry caches already primed for
    exactly ``candidates`` at this ``l``.

    A zero density comes back when no candidate has a positive one.
    """
    candidates = sorted(set(candidates))
    if not candidates:
        raise ValueError("empty candidate set")
    if l > g.horizon:
        raise ValueError("window longer than horizon")
    if state is None:
        state = _prime_all(g, l, candidates)
    caches = state.caches
    survivors = candidates
    while True:
        p, q = -1, 1
        for u in survivors:
            c = caches[u][1]
            num, den = c.num[c.best], c.den[c.best]
            if p < 0 or num * q < p * den:
                p, q = num, den
        for u in survivors:
            c = caches[u][1]
            if c.num[c.best] * q <= p * c.den[c.best]:
                state.enqueue(u)
        state.drain(p, q, True)
        left = state.survivors
        if not left:
            return Density(p, q), tuple(survivors)
        survivors = left


def max_l(g: TemporalGraph, l_start: int, delta, candidates: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Largest ``l >= l_start - 1`` keeping the (l, delta)-core inside ``candidates`` nonempty.

    If ``l_start`` already empties the core (or exceeds the horizon) the
    candidates come back unchanged with ``l_start - 1``.
    """
    nodes = tuple(sorted(set(candidates)))
    l = l_start
    best = l_start - 1
    while l <= g.horizon and nodes:
        state = peel_incremental(g, l, delta, candidates=nodes)
        left = state.survivors
        if not left:
            break
        nodes = tuple(left)
        best = l
        l += 1
    return best, nodes


def _frontier(g: TemporalGraph, prune: bool) -> list[ParetoPoint]:
    if g.m == 0 or g.horizon < 2:
        return []
    det = detemporal(g)
    everyone = [u for u in range(g.n) if det.adjacency[u]]
    candidates = everyone
    points: list[ParetoPoint] = []
    l = 2
    while l <= g.horizon and candidates:
        delta, core = max_delta(g, l, candidates)
        if delta.sum == 0:
            break
        l, core = max_l(g, l + 1, delta, core)
        points.append(ParetoPoint(l, delta, core))
        if prune:
            candidates = sorted(k_core(det, Fraction(delta.sum * l, delta.len * (l + 1))))
        else:
            candidates = everyone
        l += 1
    return points


def pomdc(g: TemporalGraph) -> list[ParetoPoint]:
    """All Pareto-optimal dense cores, sorted by increasing ``l``."""
    return _frontier(g, prune=True)


def pomdc_baseline(g: TemporalGraph) -> list[ParetoPoint]:
    """Same frontier without the k-core candidate pruning between rounds."""
    return _frontier(g, prune=False)
