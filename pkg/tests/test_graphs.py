from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import scc_by_closure
from sdomega.graphs import bfs_path, reachable, tarjan, topological_sccs


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    succ = [draw(st.lists(st.integers(0, n - 1), max_size=3)) for _ in range(n)]
    return n, succ


@given(graphs())
def test_tarjan_matches_closure(g):
    n, succ = g
    assert {frozenset(c) for c in tarjan(n, succ)} == set(scc_by_closure(n, succ))


@given(graphs())
def test_tarjan_lists_sinks_first(g):
    n, succ = g
    comps = tarjan(n, succ)
    pos = {v: i for i, c in enumerate(comps) for v in c}
    for v in range(n):
        for w in succ[v]:
            assert pos[w] <= pos[v]


@given(graphs())
def test_topological_order_sources_first(g):
    n, succ = g
    comps = topological_sccs(n, succ)
    assert sorted(v for c in comps for v in c) == list(range(n))
    pos = {v: i for i, c in enumerate(comps) for v in c}
    for v in range(n):
        for w in succ[v]:
            assert pos[v] <= pos[w]


def test_topological_tie_break_by_smallest_id():
    # two independent sources 3 and 1; smaller id first
    succ = [[], [0], [], [2]]
    assert topological_sccs(4, succ) == [[1], [0], [3], [2]]


def test_deep_chain_does_not_recurse():
    n = 50_000
    succ = [[i + 1] for i in range(n - 1)] + [[0]]
    assert len(tarjan(n, succ)) == 1


@settings(max_examples=50)
@given(graphs())
def test_reachable_and_bfs_path(g):
    n, succ = g
    seen = set(reachable(succ, [0]))
    labelled = [[(w, w) for w in s] for s in succ]
    for t in range(n):
        found = bfs_path(labelled, [0], {t})
        assert (found is not None) == (t in seen)
        if found:
            labels, end = found
            assert end == t
            v = 0
            for w in labels:
                assert w in succ[v]
                v = w
            assert v == t


def test_bfs_path_respects_allowed():
    succ = [[(0, 1), (0, 2)], [(1, 3)], [(2, 3)], []]
    assert bfs_path(succ, [0], {3}, allowed={0, 2, 3}) == ([0, 2], 3)
    assert bfs_path(succ, [0], {3}, allowed={0, 3}) is None
