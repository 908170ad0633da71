# File: cubictsp/services/graph_core.py
"""
GRAPH CORE - structural predicates for cubic graphs and poles

The theorems about the three families claim specific structure of the graphs
they build: simple and cubic, planar (first family), bipartite with truly
bipartite poles (second family), 3-connected with symmetric 3-poles (third
family). This module decides each of those properties exactly.

Connectivity, planarity, bipartiteness and the automorphism search all go
through networkx; graphs are converted with CubicGraph.to_networkx().
"""

import itertools
from typing import Dict, Optional, Tuple

import networkx as nx
from loguru import logger
from networkx.algorithms.isomorphism import GraphMatcher

from cubictsp.core.config import get_settings
from cubictsp.core.errors import NotCubicError, ResourceBoundError, UnsupportedArityError
from cubictsp.schemas.graph import CubicGraph, Pole
from cubictsp.schemas.reports import GraphSummary, SymmetryStatus

# below K4 there is no simple cubic graph
MIN_CUBIC_ORDER = 4


def validate_cubic(g: CubicGraph) -> bool:
    """True iff g has at least four vertices and every vertex has degree 3."""
    if g.vertex_count < MIN_CUBIC_ORDER:
        return False
    return all(g.degree(v) == 3 for v in range(g.vertex_count))


def require_cubic(g: CubicGraph) -> CubicGraph:
    if g.vertex_count < MIN_CUBIC_ORDER:
        raise NotCubicError(f"a simple cubic graph has at least {MIN_CUBIC_ORDER} vertices, got {g.vertex_count}")
    for v in range(g.vertex_count):
        if g.degree(v) != 3:
            raise NotCubicError(f"vertex {v} has degree {g.degree(v)}")
    return g


def is_connected(g: CubicGraph) -> bool:
    if g.vertex_count == 0:
        return False
    return nx.is_connected(g.to_networkx())


def connectivity_level(g: CubicGraph) -> int:
    """Largest k <= 3 such that g is k-vertex-connected."""
    if not is_connected(g):
        return 0
    if g.vertex_count == 1:
        return 0
    return min(3, nx.node_connectivity(g.to_networkx()))


def edge_connectivity_level(g: CubicGraph) -> int:
    """Largest k <= 3 such that g is k-edge-connected."""
    if not is_connected(g) or g.vertex_count == 1:
        return 0
    return min(3, nx.edge_connectivity(g.to_networkx()))


def is_bipartite(g: CubicGraph) -> bool:
    return nx.is_bipartite(g.to_networkx())


def is_planar(g: CubicGraph) -> bool:
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


def pole_to_graph(p: Pole) -> CubicGraph:
    """The inner graph of a pole, dangling edges dropped."""
    return p.inner


def is_truly_bipartite(p: Pole) -> bool:
    """
    No odd circuit inside the pole, and every path between the two dangling
    edges has an even number of vertices, i.e. the two stub vertices fall in
    different colour classes.
    """
    if p.arity != 2:
        raise UnsupportedArityError(f"truly bipartite is defined for 2-poles, got arity {p.arity}")
    graph = p.inner.to_networkx()
    if not nx.is_bipartite(graph):
        return False
    first, second = p.stubs
    if first == second:
        return False
    if not nx.has_path(graph, first, second):
        return True
    colors = nx.bipartite.color(graph)
    return colors[first] != colors[second]


def _stub_tagged_graph(p: Pole, tags: Dict[int, int]) -> nx.Graph:
    """Inner graph plus one terminal node per stub; terminal i carries tag tags[i]."""
    graph = p.inner.to_networkx()
    nx.set_node_attributes(graph, -1, "tag")
    for index, vertex in enumerate(p.stubs):
        terminal = ("stub", index)
        graph.add_node(terminal, tag=tags[index])
        graph.add_edge(terminal, vertex)
    return graph


def _realizes_permutation(p: Pole, perm: Tuple[int, ...]) -> bool:
    identity = _stub_tagged_graph(p, {i: i for i in range(p.arity)})
    # terminal perm[i] is tagged i, so a tag-preserving isomorphism sends stub i to stub perm[i]
    permuted = _stub_tagged_graph(p, {perm[i]: i for i in range(p.arity)})
    matcher = GraphMatcher(identity, permuted, node_match=lambda a, b: a["tag"] == b["tag"])
    return matcher.is_isomorphic()


def symmetry_status(p: Pole, budget: Optional[int] = None) -> SymmetryStatus:
    """
    Exhaustive automorphism search over all six stub permutations.

    Poles with more inner vertices than the budget are not searched.
    """
    if p.arity != 3:
        raise UnsupportedArityError(f"symmetry is defined for 3-poles, got arity {p.arity}")
    budget = budget or get_settings().symmetry_budget
    if p.vertex_count > budget:
        logger.info(f"Symmetry of a {p.vertex_count}-vertex 3-pole not searched (budget {budget})")
        return SymmetryStatus.UNVERIFIED
    for perm in itertools.permutations(range(3)):
        if not _realizes_permutation(p, perm):
            logger.debug(f"No automorphism realizes stub permutation {perm}")
            return SymmetryStatus.ASYMMETRIC
    return SymmetryStatus.SYMMETRIC


def is_symmetric_3pole(p: Pole, budget: Optional[int] = None) -> bool:
    status = symmetry_status(p, budget)
    if status == SymmetryStatus.UNVERIFIED:
        limit = budget or get_settings().symmetry_budget
        raise ResourceBoundError("symmetry_budget", limit, p.vertex_count, "symmetry is unverified for this pole")
    return status == SymmetryStatus.SYMMETRIC


def graph_summary(g: CubicGraph) -> GraphSummary:
    connected = is_connected(g)
    return GraphSummary(
        vertices=g.vertex_count,
        edges=g.edge_count,
        cubic=validate_cubic(g),
        vertex_connectivity=connectivity_level(g),
        edge_connectivity=edge_connectivity_level(g),
        bipartite=is_bipartite(g),
        planar=is_planar(g) if connected else False,
    )
