import json
import math
import random

import pytest

from burstcore import build_graph
from burstcore.metrics import average_density, average_separability, edge_counts, score
from oracles import planted_clique, random_triples


def scan_counts(triples, members):
    internal = sum(1 for u, v, _ in triples if u in members and v in members)
    cross = sum(1 for u, v, _ in triples if (u in members) != (v in members))
    return internal, cross


def test_isolated_node_has_zero_density():
    g = build_graph([(0, 1, 1)], n=3)
    assert average_density(g, {2}) == 0


def test_clique_density_and_separability():
    g = build_graph(planted_clique(4, [1, 2, 3]))
    assert average_density(g, range(4)) == 9
    assert math.isinf(average_separability(g, range(4)))


def test_no_internal_edges_means_zero_separability():
    g = build_graph(planted_clique(4, [1]))
    assert average_separability(g, {0}) == 0


def test_empty_community_rejected():
    g = build_graph([(0, 1, 1)])
    with pytest.raises(ValueError):
        average_density(g, [])
    with pytest.raises(ValueError):
        average_separability(g, set())


def test_counts_match_edge_scan():
    rng = random.Random(12)
    for _ in range(50):
        n = rng.randint(2, 25)
        triples = random_triples(rng, n, rng.randint(1, 6), 0.3) or [(0, 1, 1)]
        g = build_graph(triples, n=n)
        members = {u for u in range(n) if rng.random() < 0.5} or {0}
        internal, cross = scan_counts(triples, members)
        assert edge_counts(g, members) == (internal, cross)
        assert average_density(g, members) == pytest.approx(2 * internal / len(members))
        sep = average_separability(g, members)
        if internal == 0:
            assert sep == 0
        elif cross == 0:
            assert math.isinf(sep)
        else:
            assert sep == pytest.approx(internal / cross)


def test_relabeling_and_time_permutation_keep_density():
    rng = random.Random(2)
    triples = random_triples(rng, 10, 5, 0.4)
    perm = list(range(10))
    rng.shuffle(perm)
    tperm = [0, 3, 1, 5, 2, 4]
    h = build_graph([(perm[u], perm[v], tperm[t]) for u, v, t in triples], n=10)
    g = build_graph(triples, n=10)
    C = {0, 2, 3, 7}
    assert average_density(g, C) == average_density(h, {perm[u] for u in C})


def test_adding_edges_moves_scores():
    base = planted_clique(3, [1]) + [(2, 3, 1)]
    g = build_graph(base)
    more_internal = build_graph(base + [(0, 1, 2)])
    more_cross = build_graph(base + [(0, 3, 2)])
    C = {0, 1, 2}
    assert average_density(more_internal, C) > average_density(g, C)
    assert average_separability(more_cross, C) < average_separability(g, C)


def test_report_json():
    g = build_graph(planted_clique(4, [1, 2, 3]))
    out = json.loads(json.dumps(score(g, range(4)).to_json()))
    assert out == {"AD": 9.0, "AS": "inf", "internal": 18, "cross": 0, "size": 4}
    out = score(g, {0, 1}).to_json()
    assert out["AS"] == pytest.approx(3 / 12)
