# File: cubictsp/services/excess.py
"""
EXCESS - the even-factor engine's public operations

q(G, F) = 2c + v for an even factor F with c circuits and v isolated vertices.
For a pole, a path entering and leaving through dangling edges adds nothing.

    factor_stats      decompose one factor
    min_excess        minimum over all factors of a closed graph
    pole_triple       t(P) = (q0, q2, n)
    per_pair_q2       q2 restricted to each pair of dangling edges (3-poles)
    prime_triple      t(A') of the prime construction from t(A) alone

Minima are computed by walking the cycle space when its dimension is within
the enumeration budget and by branch-and-bound otherwise.
"""

import itertools
from enum import Enum
from typing import Dict, Optional, Tuple, Union

import networkx as nx
from loguru import logger

from cubictsp.core.config import get_settings
from cubictsp.core.errors import InvalidFactorError, ResourceBoundError, StructuralError, UnsupportedArityError
from cubictsp.schemas.factor import ExcessTriple, FactorStats
from cubictsp.schemas.graph import CubicGraph, EvenFactor, Pole
from cubictsp.services.branch_and_bound import branch_and_bound_min_excess
from cubictsp.services.constructions import remove_vertex_to_3pole
from cubictsp.services.even_factors import CycleSpaceEnumerator, host_parts
from cubictsp.services.graph_core import require_cubic
from cubictsp.utils.debug_utils import debug_performance

Host = Union[CubicGraph, Pole]
StubPair = Tuple[int, int]


class Strategy(str, Enum):
    # cycle-space walk only; ResourceBoundError above the enumeration budget
    EXHAUSTIVE = "exhaustive"
    # walk within budget, branch-and-bound above it
    AUTO = "auto"


class Method(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "branch-and-bound"
    # t(A') assembled from t(A) and the new vertices of the prime construction
    COMPOSITION = "composition"


def factor_stats(host: Host, f: EvenFactor) -> FactorStats:
    """
    Decompose f into circuits, stub-to-stub paths and isolated vertices.

    Raises:
        InvalidFactorError: unknown edge or stub, or a vertex of odd degree
    """
    graph, stubs = host_parts(host)
    degree = [0] * graph.vertex_count
    component_graph = nx.Graph()
    component_graph.add_nodes_from(range(graph.vertex_count))

    for u, v in f.internal_edges:
        if not (u < graph.vertex_count and v < graph.vertex_count and graph.has_edge(u, v)):
            raise InvalidFactorError(f"edge ({u}, {v}) is not an edge of the host")
        degree[u] += 1
        degree[v] += 1
        component_graph.add_edge(u, v)
    for i in f.stub_indices:
        if not 0 <= i < len(stubs):
            raise InvalidFactorError(f"stub index {i} outside [0, {len(stubs)})")
        degree[stubs[i]] += 1
        component_graph.add_edge(stubs[i], ("stub", i))

    for v, d in enumerate(degree):
        if d % 2:
            raise InvalidFactorError(f"vertex {v} has degree {d} in the factor")

    circuits = stub_paths = 0
    for component in nx.connected_components(component_graph):
        if len(component) == 1:
            continue
        if any(isinstance(x, tuple) for x in component):
            stub_paths += 1
        else:
            circuits += 1
    isolated = sum(1 for d in degree if d == 0)
    return FactorStats.of(circuits=circuits, isolated=isolated, stub_paths=stub_paths)


def cycle_space_dimension(host: Host) -> int:
    return CycleSpaceEnumerator(host).dimension


def choose_method(host: Host, strategy: Strategy = Strategy.EXHAUSTIVE, budget: Optional[int] = None) -> Method:
    """Exhaustive when the cycle space fits the budget; otherwise B&B if the strategy allows it."""
    budget = budget or get_settings().enum_budget
    dimension = cycle_space_dimension(host)
    if dimension <= budget:
        return Method.EXHAUSTIVE
    if Strategy(strategy) == Strategy.AUTO:
        return Method.BRANCH_AND_BOUND
    raise ResourceBoundError(
        "enum_budget",
        budget,
        dimension,
        "cycle space too large for exhaustive enumeration; use min_excess (branch-and-bound)",
    )


@debug_performance
def min_excess(
    host: CubicGraph, budget: Optional[int] = None, node_budget: Optional[int] = None
) -> Tuple[int, EvenFactor]:
    """
    Minimum of 2c + v over all even factors of a closed graph, with a witness.

    Exhaustive within the enumeration budget, branch-and-bound above it.
    node_budget caps the branch-and-bound (default: run to completion).
    """
    if choose_method(host, Strategy.AUTO, budget) == Method.EXHAUSTIVE:
        excess, witness = CycleSpaceEnumerator(host).minima(budget)[()]
    else:
        logger.info(f"min_excess: {host.vertex_count}-vertex graph over enumeration budget, using branch-and-bound")
        excess, witness = branch_and_bound_min_excess(host, stub_count=0, node_budget=node_budget)
    logger.debug(f"min_excess = {excess} on {host.vertex_count} vertices")
    return excess, witness


def _pole_minima(
    p: Pole, strategy: Strategy, budget: Optional[int], node_budget: Optional[int], per_pair: bool
) -> Dict[Tuple[int, ...], int]:
    """Minimum excess for () and for each stub pair (or for "any pair" under key (-1,))."""
    if choose_method(p, strategy, budget) == Method.EXHAUSTIVE:
        minima = CycleSpaceEnumerator(p).minima(budget)
        return {key: value[0] for key, value in minima.items()}

    node_budget = node_budget or get_settings().bnb_node_budget
    result: Dict[Tuple[int, ...], int] = {}
    zero = branch_and_bound_min_excess(p, stub_count=0, node_budget=node_budget)
    if zero is not None:
        result[()] = zero[0]
    if per_pair:
        for pair in itertools.combinations(range(p.arity), 2):
            found = branch_and_bound_min_excess(p, stub_count=2, allowed_stubs=set(pair), node_budget=node_budget)
            if found is not None:
                result[pair] = found[0]
    else:
        found = branch_and_bound_min_excess(p, stub_count=2, node_budget=node_budget)
        if found is not None:
            result[(-1,)] = found[0]
    return result


@debug_performance
def pole_triple(
    p: Pole,
    strategy: Strategy = Strategy.EXHAUSTIVE,
    budget: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> ExcessTriple:
    """
    t(P) = (q0, q2, n).

    q2 of a 3-pole is minimized over all three pairs of dangling edges.
    """
    minima = _pole_minima(p, Strategy(strategy), budget, node_budget, per_pair=False)
    pair_values = [value for key, value in minima.items() if len(key) != 0]
    if () not in minima or not pair_values:
        raise StructuralError("pole has no even factor through two dangling edges; is it connected?")
    triple = ExcessTriple(q0=minima[()], q2=min(pair_values), n=p.vertex_count)
    logger.debug(f"pole_triple = {triple}")
    return triple


def per_pair_q2(
    p: Pole,
    strategy: Strategy = Strategy.EXHAUSTIVE,
    budget: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> Dict[StubPair, int]:
    """Minimum excess over factors through exactly the stub pair (i, j), for every pair."""
    if p.arity != 3:
        raise UnsupportedArityError(f"per-pair q2 is defined for 3-poles, got arity {p.arity}")
    minima = _pole_minima(p, Strategy(strategy), budget, node_budget, per_pair=True)
    pairs = {}
    for pair in itertools.combinations(range(3), 2):
        if pair not in minima:
            raise StructuralError(f"no even factor uses dangling edges {pair}")
        pairs[pair] = minima[pair]
    return pairs


# skeleton of prime(A): new vertices x1, x2, y1, y2 and the outer stub terminals
_NEW_VERTICES = ("x1", "x2", "y1", "y2")
_TERMINALS = frozenset({"t1", "t2"})
_SKELETON_EDGES = (("x1", "y1"), ("y1", "y2"), ("y2", "x2"), ("y1", "t1"), ("y2", "t2"))


def _skeleton_excess(crossed: Tuple[str, ...], chosen: Tuple[Tuple[str, str], ...]) -> Optional[int]:
    """Excess of the new vertices, or None when some new vertex has odd degree."""
    skeleton = nx.Graph()
    skeleton.add_nodes_from(_NEW_VERTICES)
    skeleton.add_edges_from(chosen)
    for copy in crossed:
        skeleton.add_edges_from((("x1", copy), (copy, "x2")))
    if any(skeleton.degree(v) % 2 for v in _NEW_VERTICES):
        return None
    isolated = sum(1 for v in _NEW_VERTICES if skeleton.degree(v) == 0)
    circuits = sum(
        1 for component in nx.connected_components(skeleton) if len(component) > 1 and not component & _TERMINALS
    )
    return 2 * circuits + isolated


@debug_performance
def prime_triple(t: ExcessTriple) -> ExcessTriple:
    """
    t(A') computed from t(A) = (q0, q2, n) without building A'.

    An even factor of A' meets each copy of A in an even factor of that copy,
    so the copy uses both of its connecting edges or neither. A crossed copy
    costs at least q2 and behaves as one x1-x2 path; an untouched copy costs
    at least q0. Both bounds are attained independently, so minimizing over
    the crossing choices and the edges at y1 and y2 is exact.
    """
    best: Dict[int, int] = {}
    for crossing in itertools.product((False, True), repeat=2):
        crossed = tuple(f"copy{i}" for i, used in enumerate(crossing) if used)
        inside = sum(t.q2 if used else t.q0 for used in crossing)
        for mask in itertools.product((False, True), repeat=len(_SKELETON_EDGES)):
            chosen = tuple(edge for edge, keep in zip(_SKELETON_EDGES, mask) if keep)
            outer = _skeleton_excess(crossed, chosen)
            if outer is None:
                continue
            stubs = sum(1 for edge in chosen if edge[1] in _TERMINALS)
            total = inside + outer
            if stubs not in best or total < best[stubs]:
                best[stubs] = total
    triple = ExcessTriple(q0=best[0], q2=best[2], n=2 * t.n + 4)
    logger.debug(f"prime_triple {t} -> {triple}")
    return triple


def is_hamiltonian(g: CubicGraph) -> bool:
    require_cubic(g)
    return min_excess(g)[0] == 2


def _vertex_deleted_hamiltonian(g: CubicGraph, v: int) -> bool:
    # with at least three vertices left, q0 = 2 forces a single circuit and no isolated vertex
    p = remove_vertex_to_3pole(g, v)
    if choose_method(p, Strategy.AUTO) == Method.EXHAUSTIVE:
        q0 = CycleSpaceEnumerator(p).minima()[()][0]
    else:
        q0 = branch_and_bound_min_excess(p, stub_count=0)[0]
    return q0 == 2


@debug_performance
def is_hypohamiltonian(g: CubicGraph) -> bool:
    """Not Hamiltonian, yet every vertex-deleted subgraph is."""
    if is_hamiltonian(g):
        return False
    for v in range(g.vertex_count):
        if not _vertex_deleted_hamiltonian(g, v):
            logger.debug(f"G - {v} is not Hamiltonian")
            return False
    return True
