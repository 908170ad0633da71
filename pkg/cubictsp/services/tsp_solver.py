# File: cubictsp/services/tsp_solver.py
"""
TSP SOLVER - exact graphic TSP on connected cubic graphs

A shortest closed spanning walk T and a minimum-excess even factor F satisfy

    |T| = |V| - 2 + 2c + v

Lower bound: the edges T uses once form an even factor, and the doubled edges
span the graph with its circuits contracted. Upper bound (constructive, see
tour_from_even_factor): contract every circuit of F, double a spanning tree of
the contracted graph and walk the resulting Eulerian multigraph.

held_karp_tsp is an independent oracle: the optimal Hamiltonian cycle of the
shortest-path metric, by subset dynamic programming.
"""

from collections import Counter
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
from loguru import logger

from cubictsp.core.config import get_settings
from cubictsp.core.errors import DomainError, NoTourError, ResourceBoundError, TourError
from cubictsp.schemas.family import FamilyId, FamilyKind
from cubictsp.schemas.graph import CubicGraph, EvenFactor, Tour, TspResult, normalize_edge
from cubictsp.services.constructions import closed_form
from cubictsp.services.excess import factor_stats, min_excess
from cubictsp.services.graph_core import is_connected, require_cubic
from cubictsp.utils.debug_utils import debug_performance


@debug_performance
def tsp_length(g: CubicGraph, budget: Optional[int] = None) -> TspResult:
    """Exact tsp(G) = |V| - 2 + min_excess(G), with a tour realizing it."""
    if not is_connected(g):
        raise NoTourError(f"graph with {g.vertex_count} vertices is disconnected; no closed spanning walk exists")
    require_cubic(g)

    excess, factor = min_excess(g, budget=budget)
    tour = tour_from_even_factor(g, factor)
    length = g.vertex_count - 2 + excess
    if tour.length != length:
        raise TourError(f"tour from the minimizing factor has length {tour.length}, expected {length}")
    logger.info(f"tsp = {length} on {g.vertex_count} vertices (excess {excess})")
    return TspResult(length=length, witness_tour=tour, witness_factor=factor, excess=excess)


def _supernodes(g: CubicGraph, f: EvenFactor) -> List[int]:
    """Map each vertex to its contracted node: the smallest vertex of its circuit, or itself."""
    factor_graph = nx.Graph()
    factor_graph.add_nodes_from(range(g.vertex_count))
    factor_graph.add_edges_from(f.internal_edges)
    label = list(range(g.vertex_count))
    for component in nx.connected_components(factor_graph):
        root = min(component)
        for v in component:
            label[v] = root
    return label


def _spanning_tree_edges(g: CubicGraph, label: List[int]) -> List[Tuple[int, int]]:
    """BFS tree of the contracted graph from its lowest node; each tree edge is a real edge of g."""
    links = {}
    for u, v in g.edges:
        a, b = label[u], label[v]
        if a != b:
            links.setdefault(a, []).append((b, u, v))
            links.setdefault(b, []).append((a, u, v))

    start = min(label)
    seen = {start}
    queue = [start]
    tree = []
    for node in queue:
        for other, u, v in sorted(links.get(node, [])):
            if other not in seen:
                seen.add(other)
                tree.append((u, v))
                queue.append(other)
    if len(seen) != len(set(label)):
        raise NoTourError("graph is disconnected; no closed spanning walk exists")
    return tree


def _euler_walk(vertex_count: int, edges: List[Tuple[int, int]], start: int) -> List[int]:
    """Hierholzer's algorithm on a multigraph, always leaving by the lowest-id neighbour."""
    incidence = [[] for _ in range(vertex_count)]
    for index, (u, v) in enumerate(edges):
        incidence[u].append((v, index))
        incidence[v].append((u, index))
    for entries in incidence:
        entries.sort()

    used = bytearray(len(edges))
    pointer = [0] * vertex_count
    stack = [start]
    circuit = []
    while stack:
        x = stack[-1]
        entries = incidence[x]
        while pointer[x] < len(entries) and used[entries[pointer[x]][1]]:
            pointer[x] += 1
        if pointer[x] < len(entries):
            y, index = entries[pointer[x]]
            used[index] = 1
            stack.append(y)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def tour_from_even_factor(g: CubicGraph, f: EvenFactor) -> Tour:
    """
    Turn an even factor into a closed spanning walk of length |V| - 2 + 2c + v.

    Circuit edges are walked once, the spanning tree of the contracted graph
    twice. The walk starts at vertex 0.
    """
    stats = factor_stats(g, f)
    label = _supernodes(g, f)
    tree = _spanning_tree_edges(g, label)
    multigraph = list(f.sorted_edges()) + tree + tree

    if not multigraph:
        # single vertex: the empty walk would not be closed
        raise NoTourError("graph has no edges")
    circuit = _euler_walk(g.vertex_count, multigraph, start=0)
    tour = Tour(walk=tuple(circuit[:-1]))

    expected = g.vertex_count - 2 + stats.excess
    if tour.length != expected:
        raise TourError(f"walk has length {tour.length}, expected {expected}")
    return tour


def validate_tour(g: CubicGraph, tour: Tour) -> None:
    """
    Raise TourError unless tour is a closed spanning walk of g using no edge
    more than twice.
    """
    walk = tour.walk
    if not walk:
        raise TourError("empty walk")
    traversals = Counter()
    for i, u in enumerate(walk):
        v = walk[(i + 1) % len(walk)]
        if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count) or not g.has_edge(u, v):
            raise TourError(f"walk steps {u} -> {v} along a non-edge")
        traversals[normalize_edge(u, v)] += 1
    missing = set(range(g.vertex_count)) - set(walk)
    if missing:
        raise TourError(f"walk misses vertices {sorted(missing)}")
    overused = [edge for edge, count in traversals.items() if count > 2]
    if overused:
        raise TourError(f"edges traversed more than twice: {sorted(overused)}")


# === HELD-KARP ORACLE ===

def _distance_matrix(g: CubicGraph) -> np.ndarray:
    if not is_connected(g):
        raise NoTourError("graph is disconnected; no closed spanning walk exists")
    return nx.floyd_warshall_numpy(g.to_networkx(), nodelist=list(range(g.vertex_count)))


@debug_performance
def held_karp_cycle(g: CubicGraph, budget: Optional[int] = None) -> Tuple[int, List[int]]:
    """
    Optimal Hamiltonian cycle of the shortest-path metric of g.

    Returns:
        (length, visiting order starting at vertex 0)
    """
    n = g.vertex_count
    budget = budget or get_settings().oracle_budget
    if n > budget:
        raise ResourceBoundError("oracle_budget", budget, n, "Held-Karp needs 2^n * n states")
    dist = _distance_matrix(g)
    if n == 1:
        return 0, [0]

    full = 1 << n
    dp = np.full((full, n), np.inf)
    parent = np.full((full, n), -1, dtype=np.int16)
    dp[1, 0] = 0.0
    vertex_bits = 1 << np.arange(n)

    # masks always contain vertex 0, so only odd masks are reachable
    for mask in range(1, full, 2):
        row = dp[mask]
        if not np.isfinite(row).any():
            continue
        free = np.flatnonzero((mask & vertex_bits) == 0)
        if free.size == 0:
            continue
        totals = row[:, None] + dist[:, free]
        best_from = totals.argmin(axis=0)
        candidate = totals[best_from, np.arange(free.size)]
        targets = mask | vertex_bits[free]
        better = candidate < dp[targets, free]
        dp[targets[better], free[better]] = candidate[better]
        parent[targets[better], free[better]] = best_from[better]

    closing = dp[full - 1] + dist[:, 0]
    last = int(closing.argmin())
    length = int(round(closing[last]))

    order = []
    mask, vertex = full - 1, last
    while vertex != -1:
        order.append(vertex)
        previous = int(parent[mask, vertex])
        mask ^= 1 << vertex
        vertex = previous
    order.reverse()
    return length, order


def held_karp_tsp(g: CubicGraph, budget: Optional[int] = None) -> int:
    """Oracle value for tsp(G); independent of the even-factor machinery."""
    return held_karp_cycle(g, budget)[0]


# === FAMILY BOUNDS ===

def _closed_vertex_count(family_id: FamilyId) -> Tuple[int, int, int]:
    kind, k = family_id.kind, family_id.k
    if kind == FamilyKind.THREECONN_PETERSEN and k < 1:
        raise DomainError("the threeconn family starts at k = 1")
    form = closed_form(kind, k)
    return form.pole_vertices + kind.host_vertices, form.pole_vertices, form.excess_param


def family_lower_bound(family_id: FamilyId) -> int:
    """|V(G_k)| - 2 + (excess parameter + 2), from the closed forms alone."""
    closed_vertices, _, excess_param = _closed_vertex_count(family_id)
    return closed_vertices - 2 + excess_param + 2


def printed_bound(family_id: FamilyId) -> int:
    """The per-k bound written with the pole order: n_k + a_k (or n_k + b_k)."""
    _, pole_vertices, excess_param = _closed_vertex_count(family_id)
    return pole_vertices + excess_param
