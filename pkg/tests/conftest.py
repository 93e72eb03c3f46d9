import pathlib

import pytest

from domindex import FamilySpec, generate, new_graph, parse_edgelist

DATA = pathlib.Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def f9():
    """The 9-vertex worked example; ids follow first appearance in the file."""
    return parse_edgelist((DATA / "f9.edges").read_text())


@pytest.fixture(scope="session")
def f9_by_label():
    """Same graph with ids 0..8 matching labels a1..a9."""
    edges = [(0, 1), (0, 8), (0, 7), (1, 8), (1, 7), (1, 2), (2, 7), (2, 3),
             (2, 6), (3, 6), (3, 4), (4, 5), (5, 6), (7, 8)]
    return new_graph(9, edges, [f"a{i}" for i in range(1, 10)])


@pytest.fixture(scope="session")
def petersen():
    return generate(FamilySpec("petersen")).graph


def vset(g, labels):
    return g.vertex_set_from_labels(labels.split())
