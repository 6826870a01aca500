"""Bursting dense-core mining on temporal graphs."""

__version__ = "0.1.0"

from .density import Density, as_fraction
from .temporal_graph import (
    DetemporalGraph,
    ParseError,
    TemporalGraph,
    build_graph,
    degree_sequence,
    detemporal,
    load_graph,
    parse_edge_list,
)
from .segment_density import CacheStateError, brute_force_msd, compute_msd, update_msd
from .core_mining import MdcResult, k_core, mdc, mdc_baseline, mdc_plus
from .pareto import ParetoPoint, max_delta, max_l, pomdc, pomdc_baseline
from .metrics import MetricReport, average_density, average_separability, score
from .estimators import DenseCoreMiner, ParetoCoreMiner

__all__ = [
    "Density", "as_fraction",
    "TemporalGraph", "DetemporalGraph", "ParseError", "build_graph", "degree_sequence",
    "detemporal", "load_graph", "parse_edge_list",
    "CacheStateError", "brute_force_msd", "compute_msd", "update_msd",
    "MdcResult", "k_core", "mdc", "mdc_baseline", "mdc_plus",
    "ParetoPoint", "max_delta", "max_l", "pomdc", "pomdc_baseline",
    "MetricReport", "average_density", "average_separability", "score",
    "DenseCoreMiner", "ParetoCoreMiner",
]
