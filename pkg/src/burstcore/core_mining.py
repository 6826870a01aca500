"""Peeling algorithms for the (l, delta)-maximal dense core.

A node survives when its de-temporal degree inside the surviving set is at
least ``delta`` and its maximum l-segment density inside that set is at least
``delta``. Deleting a node can break both conditions for its neighbors, so
deletions cascade until a fixpoint, which is unique.

Three variants share that loop:

* :func:`mdc_baseline` re-checks density by brute force over all windows,
* :func:`mdc` re-checks density with the hull sweep,
* :func:`mdc_plus` computes densities lazily and patches cached values per
  removed temporal edge instead of recomputing them.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .density import Density, as_fraction, fraction_to_json
from .segment_density import (
    MtsCache,
    _hull_sweep,
    brute_force_msd,
    build_cache,
    cumulative_curve,
    msd_value,
    update_msd,
    witness_window,
)
from .temporal_graph import DetemporalGraph, TemporalGraph, _ds_values, detemporal

__all__ = [
    "MdcResult",
    "PeelState",
    "k_core",
    "mdc_baseline",
    "mdc",
    "mdc_plus",
    "peel_incremental",
    "check_parameters",
]

log = logging.getLogger(__name__)


@dataclass
class MdcResult:
    l: int
    delta: Fraction
    nodes: tuple[int, ...]
    witnesses: dict[int, tuple[tuple[int, int], Density]] = field(default_factory=dict)

    def __len__(self):
        return len(self.nodes)

    def to_json(self, g: TemporalGraph) -> dict:
        return {
            "l": self.l,
            "delta": fraction_to_json(self.delta),
            "nodes": [g.labels[u] for u in self.nodes],
            "witnesses": [
                {"node": g.labels[u], "window": list(self.witnesses[u][0]),
                 "density": self.witnesses[u][1].to_json()}
                for u in self.nodes
            ],
        }


def check_parameters(l, delta) -> Fraction:
    if isinstance(l, bool) or not isinstance(l, int) or l < 2:
        raise ValueError(f"l must be an integer >= 2, got {l!r}")
    delta = as_fraction(delta)
    if delta <= 0:
        raise ValueError(f"delta must be > 0, got {delta}")
    return delta


def k_core(g: DetemporalGraph | TemporalGraph, k, candidates: Iterable[int] | None = None) -> frozenset:
    """Largest node set whose induced simple subgraph has every degree >= k.

    ``k`` may be any rational; integer degrees are compared exactly.
    ``candidates`` restricts the starting set.
    """
    if isinstance(g, TemporalGraph):
        g = detemporal(g)
    need = math.ceil(as_fraction(k))
    adj = g.adjacency
    alive = bytearray(g.n)
    if candidates is None:
        for u in range(g.n):
            alive[u] = 1
    else:
        for u in candidates:
            alive[u] = 1
    deg = [0] * g.n
    for u in range(g.n):
        if alive[u]:
            deg[u] = sum(alive[w] for w in adj[u])
    stack = []
    for u in range(g.n):
        if alive[u] and deg[u] < need:
            stack.append(u)
            alive[u] = 0
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < need:
                    alive[w] = 0
                    stack.append(w)
    return frozenset(u for u in range(g.n) if alive[u])


def _witnesses(g: TemporalGraph, l: int, nodes: Sequence[int]) -> dict:
    mask = bytearray(g.n)
    for u in nodes:
        mask[u] = 1
    out = {}
    for u in nodes:
        csc = cumulative_curve(_ds_values(g, u, mask)).csc
        num, den = _hull_sweep(csc, l)
        out[u] = (witness_window(csc, l, num, den), Density(num, den))
    return out


def _result(g, l, delta, survivors) -> MdcResult:
    nodes = tuple(sorted(survivors))
    return MdcResult(l, delta, nodes, _witnesses(g, l, nodes) if nodes else {})


def _peel_recompute(g: TemporalGraph, l: int, delta: Fraction, density_fn, order=None, threads: int = 1):
    p, q = delta.numerator, delta.denominator
    core = k_core(detemporal(g), delta)
    n = g.n
    present = bytearray(n)
    for u in core:
        present[u] = 1
    if not core:
        return []
    nbrs = g._nbrs
    deg = [0] * n
    for u in core:
        deg[u] = sum(present[w] for w in nbrs[u])
    queued = bytearray(n)
    queue: deque[int] = deque()
    seeds = sorted(core) if order is None else [u for u in order if present[u]]

    def density_of(u):
        return density_fn(_ds_values(g, u, present), l)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            initial = list(pool.map(density_of, seeds))
    else:
        initial = [density_of(u) for u in seeds]
    for u, d in zip(seeds, initial):
        if d.sum * q < p * d.len:
            queued[u] = 1
            queue.append(u)

    while queue:
        v = queue.popleft()
        present[v] = 0
        for w in nbrs[v]:
            if not present[w] or queued[w]:
                continue
            deg[w] -= 1
            if deg[w] * q < p:
                queued[w] = 1
                queue.append(w)
                continue
            d = density_of(w)
            if d.sum * q < p * d.len:
                queued[w] = 1
                queue.append(w)
    return [u for u in range(n) if present[u]]


def _brute_density(ds, l):
    return brute_force_msd(ds, l)[0]


def mdc_baseline(g: TemporalGraph, l: int, delta, order: Sequence[int] | None = None) -> MdcResult:
    """Peel with an O(T^2) window scan as the density check."""
    delta = check_parameters(l, delta)
    if g.m == 0 or l > g.horizon:
        return MdcResult(l, delta, ())
    return _result(g, l, delta, _peel_recompute(g, l, delta, _brute_density, order))


def mdc(g: TemporalGraph, l: int, delta, order: Sequence[int] | None = None, threads: int = 1) -> MdcResult:
    """Peel, recomputing each touched node's density with the hull sweep.

    The initial per-node densities only read the graph and may be spread over
    ``threads`` workers; results merge in seed order.
    """
    delta = check_parameters(l, delta)
    if g.m == 0 or l > g.horizon:
        return MdcResult(l, delta, ())
    return _result(g, l, delta, _peel_recompute(g, l, delta, msd_value, order, threads))


class PeelState:
    """Working state of an incremental peel.

    ``present`` marks nodes not yet popped from the queue; degree sequences
    and degrees count present neighbors, so a popped node's temporal edges
    are subtracted exactly once. ``caches`` holds ``(ds, MtsCache)`` for
    present nodes whose density has been computed; entries are dropped as
    soon as a node is queued.
    """

    def __init__(self, g: TemporalGraph, l: int, nodes: Iterable[int]):
        self.g = g
        self.l = l
        n = g.n
        self.present = bytearray(n)
        for u in nodes:
            self.present[u] = 1
        nbrs = g._nbrs
        present = self.present
        self.deg = [0] * n
        for u in range(n):
            if present[u]:
                self.deg[u] = sum(present[w] for w in nbrs[u])
        self.queued = bytearray(n)
        self.queue: deque[int] = deque()
        self.deleted: list[int] = []
        self.caches: dict[int, tuple[list[int], MtsCache]] = {}
        self.updates = 0

    @property
    def survivors(self) -> list[int]:
        return [u for u in range(self.g.n) if self.present[u] and not self.queued[u]]

    def prime(self, u: int, p: int = 0, q: int = 1) -> Density:
        """Compute ``u``'s density; keep a cache unless it is below ``p/q``."""
        ds = _ds_values(self.g, u, self.present)
        csc = cumulative_curve(ds).csc
        num, den = _hull_sweep(csc, self.l)
        if num * q >= p * den:
            self.caches[u] = (ds, build_cache(csc, self.l, num, den))
        return Density(num, den)

    def msd(self, u: int) -> Density:
        return self.caches[u][1].best_density

    def enqueue(self, u: int) -> None:
        self.queued[u] = 1
        self.queue.append(u)
        self.caches.pop(u, None)

    def drain(self, p: int, q: int, strict: bool) -> None:
        """Pop queued nodes until the queue is empty.

        A neighbor is queued once its degree or density falls below ``p/q``
        (or to ``p/q`` or below when ``strict``).
        """
        g = self.g
        l = self.l
        nbrs, times = g._nbrs, g._times
        present, queued, deg, caches = self.present, self.queued, self.deg, self.caches
        queue = self.queue
        while queue:
            v = queue.popleft()
            present[v] = 0
            self.deleted.append(v)
            for w, ts in zip(nbrs[v], times[v]):
                if not present[w] or queued[w]:
                    continue
                deg[w] -= 1
                dq = deg[w] * q
                if dq < p or (strict and dq == p):
                    self.enqueue(w)
                    continue
                entry = caches.get(w)
                if entry is None:
                    continue
                ds, cache = entry
                for t in ts:
                    ds[t - 1] -= 1
                    update_msd(ds, cache, t, l, lazy=True)
                self.updates += len(ts)
                b = cache.best
                lhs = cache.num[b] * q
                rhs = p * cache.den[b]
                if lhs < rhs or (strict and lhs == rhs):
                    self.enqueue(w)


def peel_incremental(g: TemporalGraph, l: int, delta, order: Sequence[int] | None = None,
                     candidates: Iterable[int] | None = None) -> PeelState:
    """Lazy, incrementally maintained peel; returns the final :class:`PeelState`.

    Nodes of the delta-core (optionally intersected with ``candidates``) are
    visited by increasing degree, ties by id, unless ``order`` is given. A
    node's density is computed only when it is visited; later edge removals
    patch its cache.
    """
    delta = check_parameters(l, delta)
    p, q = delta.numerator, delta.denominator
    core = k_core(detemporal(g), delta, candidates)
    state = PeelState(g, l, core)
    if not core or l > g.horizon:
        for u in core:
            state.enqueue(u)
        state.drain(p, q, False)
        return state
    deg = state.deg
    if order is None:
        seeds = sorted(core, key=lambda u: (deg[u], u))
    else:
        seeds = [u for u in order if u in core]
    present, queued = state.present, state.queued
    for u in seeds:
        if not present[u] or queued[u]:
            continue
        d = state.prime(u, p, q)
        if d.sum * q < p * d.len:
            state.enqueue(u)
            state.drain(p, q, False)
    return state


def mdc_plus(g: TemporalGraph, l: int, delta, order: Sequence[int] | None = None) -> MdcResult:
    """Incremental peel with lazily computed, patched density caches."""
    delta = check_parameters(l, delta)
    if g.m == 0 or l > g.horizon:
        return MdcResult(l, delta, ())
    state = peel_incremental(g, l, delta, order)
    log.debug("mdc_plus: %d deleted, %d cache updates", len(state.deleted), state.updates)
    return _result(g, l, delta, state.survivors)
