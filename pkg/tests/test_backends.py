"""The compiled kernels and the pure-Python twin must agree bit for bit."""

import pytest

from domindex import _pykern
from domindex.backend import available_backends, backend_name, kernels_for
from domindex.verify import enumerate_labeled_graphs, random_graph

compiled = available_backends().get("compiled")
needs_compiled = pytest.mark.skipif(compiled is None, reason="extension not built")


def corpus():
    graphs = [random_graph(n, p, seed=n * 10 + int(p * 10)) for n in (1, 2, 5, 9, 13)
              for p in (0.2, 0.5, 0.8)]
    graphs += list(enumerate_labeled_graphs(4))
    return graphs


@needs_compiled
def test_solve_dd_identical_results_and_witnesses():
    for g in corpus():
        closed = list(g.closed_adj)
        for v in [-1] + list(range(g.n)):
            lo = 1 if v >= 0 else 0
            a = _pykern.solve_dd(closed, v, lo, g.n)
            b = compiled.solve_dd(closed, v, lo, g.n)
            assert a == b, (g.edges(), v)


@needs_compiled
def test_scans_identical():
    for g in corpus():
        closed = list(g.closed_adj)
        if not closed:
            continue
        assert _pykern.scan_minimal_ds(closed) == compiled.scan_minimal_ds(closed)
        assert _pykern.scan_irredundance(closed) == compiled.scan_irredundance(closed)


@needs_compiled
def test_greedy_mode_identical():
    for g in corpus():
        closed = list(g.closed_adj)
        for v in range(g.n):
            assert _pykern.solve_dd(closed, v, g.n, g.n) == compiled.solve_dd(
                closed, v, g.n, g.n
            )


def test_backend_reports_name():
    assert backend_name() in ("compiled", "python")
    assert kernels_for(100) is _pykern  # wider than one machine word


def test_python_twin_handles_wide_graphs():
    # 70 isolated vertices: every vertex must be chosen
    closed = [1 << i for i in range(70)]
    size, mask = _pykern.solve_dd(closed, 3, 1, 70)
    assert size == 70 and mask == (1 << 70) - 1
