import hypothesis
import pytest

from hosoya.graphs import graph_from_edge_list

hypothesis.settings.register_profile(
    "graphs", deadline=None, max_examples=40
)
hypothesis.settings.load_profile("graphs")

# Two-generation degree-3 dendrimer, written out by hand: center c0 with
# three branches, each branch vertex carrying two leaves. Independent of
# the package's dendrimer generator on purpose.
T23_EDGES = [
    ("c0", "b1"),
    ("c0", "b2"),
    ("c0", "b3"),
    ("b1", "l1a"),
    ("b1", "l1b"),
    ("b2", "l2a"),
    ("b2", "l2b"),
    ("b3", "l3a"),
    ("b3", "l3b"),
]


@pytest.fixture
def t23_graph():
    return graph_from_edge_list(T23_EDGES)


@pytest.fixture
def star4_graph():
    return graph_from_edge_list([("c", "x"), ("c", "y"), ("c", "z")])


@pytest.fixture
def path3_graph():
    return graph_from_edge_list([("a", "b"), ("b", "c")])


@pytest.fixture
def triangle_graph():
    return graph_from_edge_list([("a", "b"), ("b", "c"), ("c", "a")])
