"""Temporal graph ingestion, storage and per-node degree sequences.

Edges are undirected ``(u, v, t)`` triples over contiguous snapshot indices
``1..horizon``. Node labels from the input are interned to dense ids
``0..n-1`` so peeling state can live in flat arrays.
"""

from __future__ import annotations

import io
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

__all__ = [
    "ParseError",
    "IngestStats",
    "ParsedEdges",
    "TemporalGraph",
    "DetemporalGraph",
    "DegreeSequence",
    "parse_edge_list",
    "read_edge_list",
    "build_graph",
    "load_graph",
    "degree_sequence",
    "detemporal",
    "write_edge_list",
    "node_mask",
]


class ParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass
class IngestStats:
    lines: int = 0
    comments: int = 0
    self_loops: int = 0
    duplicates: int = 0
    edges: int = 0


@dataclass
class ParsedEdges:
    triples: list[tuple[int, int, int]]
    labels: list[str]
    stats: IngestStats = field(default_factory=IngestStats)


def _label_key(labels: Sequence[str]):
    # all-integer label sets sort numerically, anything else as text
    try:
        ints = {lab: int(lab) for lab in labels}
    except ValueError:
        return lambda lab: lab
    return lambda lab: ints[lab]


def parse_edge_list(stream: Iterable[str] | str, bucket_width: int | str = 1) -> ParsedEdges:
    """Parse ``u v t`` lines into normalized triples.

    ``bucket_width`` is either a positive integer, mapping a raw time ``t`` to
    ``(t - t_min) // bucket_width + 1``, or ``"raw"``, which assumes the raw
    timestamps lie on an arithmetic grid and maps them to
    ``(t - t_min) // step + 1`` with ``step`` the gcd of all offsets, so gaps in
    the grid survive as empty snapshots.

    Self-loops are dropped and repeated ``(u, v, bucket)`` triples collapse to
    one edge; both are counted in the returned stats.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    if bucket_width != "raw":
        if isinstance(bucket_width, bool) or not isinstance(bucket_width, int) or bucket_width < 1:
            raise ValueError(f"bucket_width must be a positive integer or 'raw', got {bucket_width!r}")

    stats = IngestStats()
    raw: list[tuple[str, str, int]] = []
    data_lines = 0
    for lineno, line in enumerate(stream, start=1):
        stats.lines += 1
        body = line.split("#", 1)[0]
        fields_ = body.split()
        if not fields_:
            if line.strip():
                stats.comments += 1
            continue
        if len(fields_) != 3:
            raise ParseError(f"expected 'u v t', got {len(fields_)} field(s)", lineno)
        u, v, t_text = fields_
        try:
            t = int(t_text)
        except ValueError:
            raise ParseError(f"timestamp {t_text!r} is not an integer", lineno) from None
        data_lines += 1
        if u == v:
            stats.self_loops += 1
            continue
        raw.append((u, v, t))

    if data_lines == 0:
        raise ParseError("no edges")

    if not raw:
        return ParsedEdges([], [], stats)

    t_min = min(t for _, _, t in raw)
    if bucket_width == "raw":
        step = 0
        for _, _, t in raw:
            step = math.gcd(step, t - t_min)
        width = step or 1
    else:
        width = bucket_width

    seen_labels = {lab for u, v, _ in raw for lab in (u, v)}
    labels = sorted(seen_labels, key=_label_key(list(seen_labels)))
    ids = {lab: i for i, lab in enumerate(labels)}

    seen: set[tuple[int, int, int]] = set()
    triples = []
    for u, v, t in raw:
        a, b = ids[u], ids[v]
        if a > b:
            a, b = b, a
        key = (a, b, (t - t_min) // width + 1)
        if key in seen:
            stats.duplicates += 1
            continue
        seen.add(key)
        triples.append(key)
    stats.edges = len(triples)
    return ParsedEdges(triples, labels, stats)


def read_edge_list(path, bucket_width: int | str = 1) -> ParsedEdges:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, bucket_width)


@dataclass(frozen=True)
class DegreeSequence:
    """Per-snapshot degree of ``owner`` restricted to a node subset.

    ``values[i]`` is the degree at snapshot ``i + 1``.
    """

    values: list[int]
    owner: int
    restriction: frozenset | None = None

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


class TemporalGraph:
    """Immutable snapshot-indexed undirected graph.

    ``adjacency[u]`` is a tuple of ``(neighbor, t)`` pairs sorted by neighbor
    then time. Each undirected temporal edge appears once in each endpoint's
    adjacency.
    """

    def __init__(self, n: int, horizon: int, adjacency: Sequence[Sequence[tuple[int, int]]],
                 labels: Sequence[str] | None = None):
        self.n = n
        self.horizon = horizon
        self.adjacency = tuple(tuple(sorted(pairs)) for pairs in adjacency)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n or len(adjacency) != n:
            raise ValueError("labels/adjacency length does not match n")
        self.labels = tuple(labels)
        self._ids = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._ids) != n:
            raise ValueError("node labels must be unique")

        nbrs, times = [], []
        pairs_total = 0
        for pairs in self.adjacency:
            pairs_total += len(pairs)
            ns: list[int] = []
            ts: list[tuple[int, ...]] = []
            cur: list[int] = []
            for w, t in pairs:
                if not 1 <= t <= horizon:
                    raise ValueError(f"timestamp {t} outside [1, {horizon}]")
                if ns and ns[-1] == w:
                    cur.append(t)
                else:
                    if ns:
                        ts.append(tuple(cur))
                    ns.append(w)
                    cur = [t]
            if ns:
                ts.append(tuple(cur))
            nbrs.append(tuple(ns))
            times.append(tuple(ts))
        if pairs_total % 2:
            raise ValueError("adjacency is not symmetric")
        self.m = pairs_total // 2
        self._nbrs = tuple(nbrs)
        self._times = tuple(times)

    def __repr__(self):
        return f"TemporalGraph(n={self.n}, m={self.m}, horizon={self.horizon})"

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Distinct neighbors of ``u`` in the de-temporal projection, sorted."""
        return self._nbrs[u]

    def neighbor_times(self, u: int) -> tuple[tuple[int, ...], ...]:
        """Snapshot lists aligned with :meth:`neighbors`."""
        return self._times[u]

    def edge_times(self, u: int, v: int) -> tuple[int, ...]:
        ns = self._nbrs[u]
        k = bisect_left(ns, v)
        if k < len(ns) and ns[k] == v:
            return self._times[u][k]
        return ()

    def temporal_degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for u, pairs in enumerate(self.adjacency):
            for v, t in pairs:
                if u < v:
                    yield u, v, t

    def node_id(self, label) -> int:
        return self._ids[str(label)]

    def label(self, u: int) -> str:
        return self.labels[u]

    def stats(self) -> dict:
        return {
            "n": self.n,
            "m_temporal": self.m,
            "m_detemporal": sum(len(ns) for ns in self._nbrs) // 2,
            "horizon": self.horizon,
            "d_max": max((len(p) for p in self.adjacency), default=0),
        }


class DetemporalGraph:
    """Simple graph keeping each node pair that interacts at least once."""

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adjacency = tuple(tuple(a) for a in adjacency)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, ns in enumerate(self.adjacency):
            for v in ns:
                if u < v:
                    yield u, v


def build_graph(triples: Iterable[tuple[int, int, int]] | ParsedEdges, labels: Sequence[str] | None = None,
                n: int | None = None, allow_empty: bool = False) -> TemporalGraph:
    """Assemble a :class:`TemporalGraph` from normalized ``(u, v, t)`` triples.

    ``n`` may exceed the largest id seen to keep isolated nodes. Raises
    ``ValueError("no edges")`` on empty input unless ``allow_empty``.
    """
    if isinstance(triples, ParsedEdges):
        labels = triples.labels if labels is None else labels
        triples = triples.triples
    seen: set[tuple[int, int, int]] = set()
    max_id = -1
    horizon = 0
    for u, v, t in triples:
        if u == v:
            raise ValueError(f"self-loop on node {u}")
        if t < 1:
            raise ValueError(f"timestamp index must be >= 1, got {t}")
        a, b = (u, v) if u < v else (v, u)
        seen.add((a, b, t))
        max_id = max(max_id, b)
        horizon = max(horizon, t)
    if not seen and not allow_empty:
        raise ValueError("no edges")
    if n is None:
        n = len(labels) if labels is not None else max_id + 1
    if max_id >= n:
        raise ValueError(f"node id {max_id} out of range for n={n}")
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a, b, t in seen:
        adjacency[a].append((b, t))
        adjacency[b].append((a, t))
    return TemporalGraph(n, horizon, adjacency, labels)


def load_graph(path, bucket_width: int | str = 1) -> TemporalGraph:
    return build_graph(read_edge_list(path, bucket_width))


def node_mask(g: TemporalGraph, nodes) -> bytearray:
    """Boolean membership array over ``g``'s ids; accepts ids or an existing mask."""
    if isinstance(nodes, (bytearray, bytes)) and len(nodes) == g.n:
        return bytearray(nodes)
    mask = bytearray(g.n)
    for u in nodes:
        mask[u] = 1
    return mask


def _ds_values(g: TemporalGraph, u: int, mask) -> list[int]:
    ds = [0] * g.horizon
    for w, ts in zip(g._nbrs[u], g._times[u]):
        if mask[w]:
            for t in ts:
                ds[t - 1] += 1
    return ds


def degree_sequence(g: TemporalGraph, u: int, S=None) -> DegreeSequence:
    """Degree of ``u`` at each snapshot, counting only neighbors inside ``S``.

    ``S`` defaults to every node. Raises ``ValueError`` if ``u`` is not in ``S``.
    """
    if S is None:
        mask = bytearray(b"\x01") * g.n
        restriction = None
    else:
        mask = node_mask(g, S)
        restriction = frozenset(i for i in range(g.n) if mask[i])
    if not mask[u]:
        raise ValueError(f"node {u} is not in the restriction set")
    return DegreeSequence(_ds_values(g, u, mask), u, restriction)


def detemporal(g: TemporalGraph) -> DetemporalGraph:
    return DetemporalGraph(g.n, g._nbrs)


def write_edge_list(g: TemporalGraph, fp: TextIO) -> None:
    """Write ``g`` back in the ``u v t`` text format (labels, snapshot indices)."""
    for u, v, t in g.edges():
        fp.write(f"{g.labels[u]} {g.labels[v]} {t}\n")
