"""scikit-learn style front end for dense-core mining."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .core_mining import check_parameters, mdc, mdc_baseline, mdc_plus
from .pareto import pomdc, pomdc_baseline
from .temporal_graph import TemporalGraph, build_graph, parse_edge_list

__all__ = ["check_temporal_graph", "DenseCoreMiner", "ParetoCoreMiner", "ALGORITHMS"]

ALGORITHMS = {"baseline": mdc_baseline, "dp": mdc, "incremental": mdc_plus}


def check_temporal_graph(X, bucket_width=1) -> TemporalGraph:
    """Coerce ``X`` to a :class:`TemporalGraph`.

    Accepts a graph, an ``(m, 3)`` array or list of ``(u, v, t)`` rows with
    arbitrary node labels and integer times, or edge-list text.
    """
    if isinstance(X, TemporalGraph):
        return X
    if isinstance(X, str):
        return build_graph(parse_edge_list(X, bucket_width))
    arr = np.asarray(X, dtype=object)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"expected an (m, 3) array of (u, v, t) rows, got shape {arr.shape}")
    lines = []
    for u, v, t in arr:
        if int(t) != t:
            raise ValueError(f"timestamp {t!r} is not an integer")
        lines.append(f"{u} {v} {int(t)}")
    return build_graph(parse_edge_list(lines, bucket_width))


class DenseCoreMiner(BaseEstimator):
    """Find the (l, delta)-maximal dense core of a temporal graph.

    Parameters
    ----------
    l : int
        Minimum window length, at least 2.
    delta : int, Fraction or str
        Density threshold; strings like ``"3/2"`` or ``"1.5"`` are exact.
    algorithm : {"baseline", "dp", "incremental"}
    bucket_width : int or "raw"
        Time bucketing used when ``X`` is not already a graph.

    Attributes
    ----------
    graph_ : TemporalGraph
    result_ : MdcResult
    core_labels_ : list of str
        Labels of the core members.
    """

    def __init__(self, l=3, delta=3, algorithm="incremental", bucket_width=1):
        self.l = l
        self.delta = delta
        self.algorithm = algorithm
        self.bucket_width = bucket_width

    def fit(self, X, y=None):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {sorted(ALGORITHMS)}, got {self.algorithm!r}")
        delta = check_parameters(self.l, self.delta)
        self.graph_ = check_temporal_graph(X, self.bucket_width)
        self.result_ = ALGORITHMS[self.algorithm](self.graph_, self.l, delta)
        self.core_labels_ = [self.graph_.labels[u] for u in self.result_.nodes]
        return self

    def predict(self, labels):
        """Membership mask for node labels; unknown labels are not members."""
        check_is_fitted(self, "result_")
        members = set(self.core_labels_)
        return np.array([str(lab) in members for lab in labels], dtype=bool)

    def fit_predict(self, X, y=None):
        self.fit(X)
        return self.predict(self.graph_.labels)


class ParetoCoreMiner(BaseEstimator):
    """Enumerate the Pareto frontier of (l, delta) dense cores.

    Attributes
    ----------
    graph_ : TemporalGraph
    frontier_ : list of ParetoPoint
    """

    def __init__(self, prune=True, bucket_width=1):
        self.prune = prune
        self.bucket_width = bucket_width

    def fit(self, X, y=None):
        self.graph_ = check_temporal_graph(X, self.bucket_width)
        self.frontier_ = (pomdc if self.prune else pomdc_baseline)(self.graph_)
        return self

    def transform(self, X=None):
        """Frontier as an array of ``(l, delta)`` rows, delta as float."""
        check_is_fitted(self, "frontier_")
        return np.array([(pt.l, float(pt.delta)) for pt in self.frontier_], dtype=float).reshape(-1, 2)
