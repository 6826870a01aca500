"""Synthetic temporal graphs: Erdos-Renyi background noise plus one planted bursting clique."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = ["GenConfig", "generate_edges", "write_instance"]


@dataclass(frozen=True)
class GenConfig:
    """Generator settings.

    Each snapshot draws background edges independently with probability
    ``p_background``. Nodes ``0..clique_size-1`` form the planted clique; each
    of its edges is present with probability ``p_burst`` at every snapshot of
    the inclusive ``window``.
    """

    n: int
    horizon: int
    p_background: float = 0.0
    clique_size: int = 0
    window: tuple[int, int] = (1, 1)
    p_burst: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.horizon < 1:
            raise ValueError("horizon must be at least 1")
        for name in ("p_background", "p_burst"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if not 0 <= self.clique_size <= self.n:
            raise ValueError("clique_size must lie in [0, n]")
        lo, hi = self.window
        if self.clique_size and not 1 <= lo <= hi <= self.horizon:
            raise ValueError(f"window {self.window} must lie within [1, {self.horizon}]")


def _row_start(u, n):
    return u * (2 * n - u - 1) // 2


def _decode_pairs(idx: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Map pair indices (row-major over ``u < v``) back to ``(u, v)``."""
    k = idx.astype(np.int64)
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(b * b - 8.0 * k)) / 2).astype(np.int64)
    # float rounding can leave u off by one either way
    u -= _row_start(u, n) > k
    u += _row_start(u + 1, n) <= k
    v = k - _row_start(u, n) + u + 1
    return u, v


def generate_edges(cfg: GenConfig) -> list[tuple[int, int, int]]:
    """Sorted, duplicate-free ``(u, v, t)`` triples with ``u < v``."""
    rng = np.random.default_rng(cfg.seed)
    n_pairs = cfg.n * (cfg.n - 1) // 2
    edges: set[tuple[int, int, int]] = set()
    for t in range(1, cfg.horizon + 1):
        k = int(rng.binomial(n_pairs, cfg.p_background)) if cfg.p_background > 0 else 0
        if k:
            idx = rng.choice(n_pairs, size=k, replace=False)
            us, vs = _decode_pairs(idx, cfg.n)
            edges.update(zip(us.tolist(), vs.tolist(), [t] * k))
    if cfg.clique_size >= 2:
        lo, hi = cfg.window
        s = cfg.clique_size
        for t in range(lo, hi + 1):
            keep = rng.random((s, s)) < cfg.p_burst
            for u in range(s):
                for v in range(u + 1, s):
                    if keep[u, v]:
                        edges.add((u, v, t))
    return sorted(edges, key=lambda e: (e[2], e[0], e[1]))


def write_instance(cfg: GenConfig, path) -> tuple[int, Path]:
    """Write the edge list to ``path`` and clique members to ``path + '.planted'``.

    Returns the edge count and the sidecar path.
    """
    path = Path(path)
    edges = generate_edges(cfg)
    with open(path, "w", encoding="utf-8") as fh:
        for u, v, t in edges:
            fh.write(f"{u} {v} {t}\n")
    sidecar = path.with_name(path.name + ".planted")
    with open(sidecar, "w", encoding="utf-8") as fh:
        for u in range(cfg.clique_size):
            fh.write(f"{u}\n")
    return len(edges), sidecar
