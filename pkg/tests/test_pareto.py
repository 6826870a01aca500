import json
import random
from fractions import Fraction

import pytest

from burstcore import TemporalGraph, build_graph
from burstcore.core_mining import mdc, mdc_baseline
from burstcore.pareto import frontier_to_json, max_delta, max_l, pomdc, pomdc_baseline
from oracles import attainable_densities, planted_clique, random_graph


def induced(g, members):
    """Subgraph on ``members`` keeping ids, labels and the full horizon."""
    adjacency = [[(w, t) for w, t in g.adjacency[u] if u in members and w in members] for u in range(g.n)]
    return TemporalGraph(g.n, g.horizon, adjacency, g.labels)


def best_delta(g, l, members=None):
    """Largest attainable threshold with a nonempty core, by descending sweep."""
    h = g if members is None else induced(g, members)
    if h.m == 0:
        return None
    top = max(len(p) for p in h.adjacency)
    for d in reversed(attainable_densities(h.horizon, top * h.horizon)):
        if mdc_baseline(h, l, d).nodes:
            return d
    return None


def exhaustive_frontier(g):
    rows = [(l, best_delta(g, l)) for l in range(2, g.horizon + 1)]
    rows = [(l, d) for l, d in rows if d is not None]
    return [(l, d) for l, d in rows
            if not any(l2 >= l and d2 >= d and (l2, d2) != (l, d) for l2, d2 in rows)]


def clique5():
    return build_graph(planted_clique(4, range(1, 6)))


def two_regime():
    return build_graph(planted_clique(5, [1, 2]) + planted_clique(3, range(3, 11), offset=5))


def test_max_delta_clique():
    g = clique5()
    d, nodes = max_delta(g, 2, range(4))
    assert d == 3 and nodes == (0, 1, 2, 3)


def test_max_delta_single_edge():
    g = build_graph([(0, 1, t) for t in range(1, 5)])
    d, nodes = max_delta(g, 2, [0, 1])
    assert d == 1 and nodes == (0, 1)


def test_max_delta_empty_candidates():
    with pytest.raises(ValueError, match="empty candidate set"):
        max_delta(clique5(), 2, [])


def test_max_l_clique():
    g = clique5()
    assert max_l(g, 3, 3, range(4)) == (5, (0, 1, 2, 3))
    assert max_l(g, 6, 3, range(4)) == (5, (0, 1, 2, 3))


def test_pomdc_clique():
    pts = pomdc(clique5())
    assert [(p.l, p.delta, p.nodes) for p in pts] == [(5, 3, (0, 1, 2, 3))]


def test_pomdc_empty_graph():
    g = build_graph([], allow_empty=True)
    assert pomdc(g) == [] and pomdc_baseline(g) == []


def test_pomdc_two_regimes():
    g = two_regime()
    pts = pomdc(g)
    assert [(p.l, p.delta.value) for p in pts] == exhaustive_frontier(g)
    assert pts[0].nodes == (0, 1, 2, 3, 4)
    assert pts[-1].nodes == (5, 6, 7)
    assert [(p.l, p.delta.value, p.nodes) for p in pomdc_baseline(g)] == \
        [(p.l, p.delta.value, p.nodes) for p in pts]


def test_max_delta_matches_threshold_sweep():
    rng = random.Random(3)
    for _ in range(40):
        g, _ = random_graph(rng, n_max=10, horizon_max=6)
        l = rng.randint(2, g.horizon)
        members = {u for u in range(g.n) if g.adjacency[u] and rng.random() < 0.8}
        if not members:
            continue
        d, nodes = max_delta(g, l, members)
        ref = best_delta(g, l, members)
        if ref is None:
            assert d == 0
            continue
        assert d == ref
        assert nodes == mdc_baseline(induced(g, members), l, ref).nodes


def test_max_l_matches_l_sweep():
    rng = random.Random(4)
    for _ in range(40):
        g, _ = random_graph(rng, n_max=12, horizon_max=8)
        delta = rng.choice([Fraction(1), Fraction(3, 2), Fraction(2)])
        start = rng.randint(2, g.horizon)
        cands = {u for u in range(g.n) if rng.random() < 0.8}
        h = induced(g, cands)
        alive = [l for l in range(start, g.horizon + 1) if mdc(h, l, delta).nodes]
        l, nodes = max_l(g, start, delta, cands)
        if alive:
            assert l == max(alive)
            assert nodes == mdc(h, l, delta).nodes
        else:
            assert (l, nodes) == (start - 1, tuple(sorted(cands)))


def check_frontier(g, pts):
    rows = [(p.l, p.delta.value) for p in pts]
    for (l1, d1), (l2, d2) in zip(rows, rows[1:]):
        assert l1 < l2 and d1 > d2
    for a in rows:
        assert not any(b != a and b[0] >= a[0] and b[1] >= a[1] for b in rows)
    ladder = attainable_densities(g.horizon, max(len(p) for p in g.adjacency) * g.horizon)
    for p in pts:
        assert p.nodes and p.nodes == mdc(g, p.l, p.delta).nodes
        if p.l < g.horizon:
            assert not mdc(g, p.l + 1, p.delta).nodes
        above = [d for d in ladder if d > p.delta.value]
        if above:
            assert not mdc(g, p.l, above[0]).nodes


def test_random_frontiers():
    rng = random.Random(6)
    for _ in range(25):
        g, _ = random_graph(rng, n_max=12, horizon_max=6)
        pts = pomdc(g)
        base = pomdc_baseline(g)
        assert [(p.l, p.delta.value, p.nodes) for p in pts] == [(p.l, p.delta.value, p.nodes) for p in base]
        assert [(p.l, p.delta.value) for p in pts] == exhaustive_frontier(g)
        check_frontier(g, pts)
        # every nonempty core has a frontier point dominating its parameters,
        # and that point's nodes lie inside it
        for _ in range(5):
            l = rng.randint(2, g.horizon)
            d = rng.choice([Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)])
            nodes = set(mdc(g, l, d).nodes)
            if nodes:
                assert any(p.l >= l and p.delta >= d and set(p.nodes) <= nodes for p in pts)


def test_low_threshold_core_need_not_sit_inside_a_frontier_point():
    # a 5-clique and a disjoint triangle, both alive at t=1..3
    g = build_graph(planted_clique(5, [1, 2, 3]) + planted_clique(3, [1, 2, 3], offset=5))
    pts = pomdc(g)
    assert [(p.l, p.delta.value, p.nodes) for p in pts] == [(3, 4, (0, 1, 2, 3, 4))]
    assert mdc(g, 3, 2).nodes == tuple(range(8))


def test_frontier_json():
    g = two_regime()
    out = json.loads(json.dumps(frontier_to_json(pomdc(g), g)))
    assert [row["l"] for row in out] == sorted(row["l"] for row in out)
    assert out[0]["delta"] == {"num": 8, "den": 2}
    assert out[0]["nodes"] == ["0", "1", "2", "3", "4"]
