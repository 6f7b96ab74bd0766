import pytest

from fourcolor.embedding import compute_embedding
from fourcolor.fixtures import (
    K33_MINUS_E_EDGES,
    icosahedron,
    k4,
    k5_minus_e_inner,
    k5_minus_e_outer,
)

#: Adjacency of K4 plus E inside face ACD, written out by hand from the
#: operation definition; used as an independent oracle for the ops module.
K5E_INNER_ADJ = {
    "A": {"B", "C", "D", "E"},
    "B": {"A", "C", "D"},
    "C": {"A", "B", "D", "E"},
    "D": {"A", "B", "C", "E"},
    "E": {"A", "C", "D"},
}

#: Adjacency of K4 plus E joined to the boundary vertices A, B, C.
K5E_OUTER_ADJ = {
    "A": {"B", "C", "D", "E"},
    "B": {"A", "C", "D", "E"},
    "C": {"A", "B", "D", "E"},
    "D": {"A", "B", "C"},
    "E": {"A", "B", "C"},
}


def adjacency_of(g):
    return {v: set(g.adjacency[v]) for v in g.vertices}


@pytest.fixture
def base_k4():
    return k4()


@pytest.fixture
def inner_k5e():
    return k5_minus_e_inner()


@pytest.fixture
def outer_k5e():
    return k5_minus_e_outer()


@pytest.fixture
def ico():
    return icosahedron()


@pytest.fixture
def k33e_graph():
    return compute_embedding(K33_MINUS_E_EDGES)
