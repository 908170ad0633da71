# File: tests/test_graph_core.py

import itertools

import networkx as nx
import pytest

from cubictsp.core.errors import NotCubicError, ResourceBoundError, StructuralError, UnsupportedArityError
from cubictsp.schemas.family import FamilyKind
from cubictsp.schemas.graph import CubicGraph, Pole
from cubictsp.schemas.reports import SymmetryStatus
from cubictsp.services.constructions import (
    complete_bipartite_k33,
    complete_graph_k4,
    cube_graph,
    cut_edge_to_2pole,
    pole_chain,
    prime,
    prism_graph,
    remove_vertex_to_3pole,
    seed_pole,
)
from cubictsp.services.graph_core import (
    connectivity_level,
    edge_connectivity_level,
    graph_summary,
    is_bipartite,
    is_planar,
    is_symmetric_3pole,
    is_truly_bipartite,
    pole_to_graph,
    require_cubic,
    symmetry_status,
    validate_cubic,
)
from cubictsp.services.tsp_solver import tsp_length


def _brute_force_connectivity(g: CubicGraph) -> int:
    graph = g.to_networkx()
    level = 0
    for k in range(1, 4):
        if not nx.is_connected(graph):
            break
        for cut in itertools.combinations(range(g.vertex_count), k - 1):
            rest = graph.copy()
            rest.remove_nodes_from(cut)
            if rest.number_of_nodes() and not nx.is_connected(rest):
                return level
        level = k
    return level


def test_validate_cubic(k4, petersen):
    assert validate_cubic(k4)
    assert validate_cubic(petersen)
    k4_minus_edge = CubicGraph(vertex_count=4, edges=tuple(e for e in k4.edges if e != (0, 1)))
    assert not validate_cubic(k4_minus_edge)
    assert not validate_cubic(CubicGraph(vertex_count=0))
    with pytest.raises(NotCubicError):
        require_cubic(k4_minus_edge)


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 0)],
        [(0, 1), (1, 0)],
        [(0, 7)],
    ],
)
def test_malformed_edge_lists_are_rejected(edges):
    with pytest.raises(StructuralError):
        CubicGraph.from_edges(4, edges)


def test_edges_are_canonical():
    g = CubicGraph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges == ((0, 1), (0, 2), (2, 3))
    assert g.has_edge(2, 3) and g.has_edge(3, 2)
    assert g.neighbors(0) == (1, 2)


def test_connectivity_levels(k4, petersen):
    assert connectivity_level(k4) == 3
    assert connectivity_level(petersen) == 3
    two_triangles = CubicGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert connectivity_level(two_triangles) == 1
    assert edge_connectivity_level(two_triangles) == 1
    disconnected = CubicGraph.from_edges(4, [(0, 1), (2, 3)])
    assert connectivity_level(disconnected) == 0


def test_connectivity_matches_brute_force(named_corpus):
    for name, g in named_corpus.items():
        if g.vertex_count <= 12:
            assert connectivity_level(g) == _brute_force_connectivity(g), name


def test_bipartite_and_planar(k4, k33, petersen):
    assert is_bipartite(k33) and not is_bipartite(k4) and not is_bipartite(petersen)
    assert is_bipartite(cube_graph())
    assert is_planar(k4) and is_planar(prism_graph()) and is_planar(cube_graph())
    assert not is_planar(k33)
    assert not is_planar(petersen)


def test_truly_bipartite():
    assert is_truly_bipartite(cut_edge_to_2pole(complete_bipartite_k33(), (0, 1)))
    assert not is_truly_bipartite(cut_edge_to_2pole(complete_graph_k4(), (0, 1)))
    assert is_truly_bipartite(prime(cut_edge_to_2pole(complete_bipartite_k33(), (0, 1))))
    with pytest.raises(UnsupportedArityError):
        is_truly_bipartite(seed_pole(FamilyKind.THREECONN_PETERSEN))


def test_symmetric_3poles(petersen):
    assert is_symmetric_3pole(seed_pole(FamilyKind.THREECONN_PETERSEN))
    assert is_symmetric_3pole(remove_vertex_to_3pole(petersen, 0))
    assert is_symmetric_3pole(remove_vertex_to_3pole(complete_graph_k4(), 0))


def test_prism_minus_vertex_is_asymmetric():
    # one stub lands on a triangle, the other two do not
    pole = remove_vertex_to_3pole(prism_graph(), 0)
    assert symmetry_status(pole) == SymmetryStatus.ASYMMETRIC
    assert not is_symmetric_3pole(pole)


def test_symmetry_over_budget_is_unverified(petersen):
    pole = remove_vertex_to_3pole(petersen, 0)
    assert symmetry_status(pole, budget=5) == SymmetryStatus.UNVERIFIED
    with pytest.raises(ResourceBoundError):
        is_symmetric_3pole(pole, budget=5)


def test_pole_degree_rule_enforced(k4):
    with pytest.raises(StructuralError):
        Pole(inner=k4, stubs=(0, 1))
    with pytest.raises(UnsupportedArityError):
        Pole(inner=CubicGraph(vertex_count=1), stubs=(0,))


def test_pole_to_graph_and_summary(petersen):
    pole = remove_vertex_to_3pole(petersen, 0)
    assert pole_to_graph(pole).vertex_count == 9
    summary = graph_summary(petersen)
    assert (summary.vertices, summary.edges) == (10, 15)
    assert summary.cubic
    assert summary.vertex_connectivity == 3 and summary.edge_connectivity == 3
    assert not summary.bipartite and not summary.planar


def test_odd_closed_walk_rules_out_bipartite(named_corpus):
    for name, g in named_corpus.items():
        graph = g.to_networkx()
        has_odd_cycle = any(len(cycle) % 2 for cycle in nx.cycle_basis(graph))
        assert is_bipartite(g) == (not has_odd_cycle), name
        # an optimal tour is a closed walk, so its length is even on a bipartite graph
        if tsp_length(g).witness_tour.length % 2:
            assert not is_bipartite(g), name


def _close_with_path(pole: Pole, inner_vertices: int) -> CubicGraph:
    """Join the two stub vertices through a path with inner_vertices new vertices."""
    n = pole.inner.vertex_count
    first, second = pole.stubs
    path = [first] + list(range(n, n + inner_vertices)) + [second]
    return CubicGraph.from_edges(n + inner_vertices, list(pole.inner.edges) + list(zip(path, path[1:])))


@pytest.mark.parametrize("k", [0, 1, 2])
def test_truly_bipartite_pole_closes_to_bipartite_graph(k):
    pole = pole_chain(FamilyKind.BIPARTITE_K33, k)
    assert is_truly_bipartite(pole)
    for inner_vertices in (2, 4):
        closure = _close_with_path(pole, inner_vertices)
        assert nx.is_bipartite(closure.to_networkx())
        assert is_bipartite(closure)
    assert not is_bipartite(_close_with_path(pole, 1))
