# File: cubictsp/services/constructions.py
"""
POLE CONSTRUCTIONS - seed graphs, gadget compositions and the three families

Vertex labelings are fixed so every construction is reproducible:

- K4: complete graph on 0..3.
- K3,3: even vertices {0, 2, 4} against odd vertices {1, 3, 5}, so {0, 1} is an edge.
- Petersen: outer 5-cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2) mod 5), spokes i ~ i+5.

Compositions:

    prime(A)          2-pole A'  = two copies of A, x1, x2 and the path x1 y1 y2 x2
    double_prime(B)   3-pole B'' = nine copies of B placed on Petersen minus vertex 0

Families (closure of the k-th pole):

    PLANAR_K4           A_k from K4,   inserted into edge {0,1} of K4
    BIPARTITE_K33       A_k from K3,3, inserted into edge {0,1} of K3,3
    THREECONN_PETERSEN  B_k,           closed with one new vertex (k >= 1)
"""

from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Set

from loguru import logger

from cubictsp.core.config import get_settings
from cubictsp.core.errors import (
    DomainError,
    MissingEdgeError,
    MultigraphError,
    ResourceBoundError,
    StructuralError,
    UnsupportedArityError,
)
from cubictsp.schemas.family import ClosedForm, FamilyId, FamilyKind, FamilyMember
from cubictsp.schemas.graph import CubicGraph, Edge, Pole, normalize_edge
from cubictsp.services.graph_core import require_cubic
from cubictsp.utils.debug_utils import debug_performance


class SeedName(str, Enum):
    K4 = "K4"
    K33 = "K33"
    PETERSEN = "PETERSEN"


# insertion / cut edge for both 2-pole families; K4 and K3,3 are edge-transitive
HOST_EDGE: Edge = (0, 1)
# Petersen vertex replaced by the dangling edges of B''
REMOVED_PETERSEN_VERTEX = 0


# === SEED AND CORPUS GRAPHS ===

def complete_graph_k4() -> CubicGraph:
    return CubicGraph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def complete_bipartite_k33() -> CubicGraph:
    return CubicGraph.from_edges(6, [(u, v) for u in range(0, 6, 2) for v in range(1, 6, 2)])


def generalized_petersen(n: int, k: int) -> CubicGraph:
    """GP(n, k): outer cycle 0..n-1, inner vertices n..2n-1 joined i ~ i+k, spokes i ~ n+i."""
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return CubicGraph.from_edges(2 * n, edges)


def petersen_graph() -> CubicGraph:
    return generalized_petersen(5, 2)


def prism_graph() -> CubicGraph:
    """Triangular prism: triangles 0-1-2 and 3-4-5, rungs i ~ i+3."""
    return generalized_petersen(3, 1)


def cube_graph() -> CubicGraph:
    """The 3-cube; vertices are 3-bit words, edges flip one bit."""
    return CubicGraph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def mobius_kantor_graph() -> CubicGraph:
    return generalized_petersen(8, 3)


def seed_graph(name: SeedName) -> CubicGraph:
    name = SeedName(name)
    if name == SeedName.K4:
        return complete_graph_k4()
    if name == SeedName.K33:
        return complete_bipartite_k33()
    return petersen_graph()


# === CUTTING AND REMOVING ===

def cut_edge_to_2pole(g: CubicGraph, e: Iterable[int]) -> Pole:
    """Cut edge e of a cubic graph into two dangling edges, stubs at (lower, higher) endpoint."""
    require_cubic(g)
    u, v = normalize_edge(*e)
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u}, {v}) is not in the graph")
    inner = CubicGraph(vertex_count=g.vertex_count, edges=tuple(x for x in g.edges if x != (u, v)))
    return Pole(inner=inner, stubs=(u, v))


def remove_vertex_to_3pole(g: CubicGraph, v: int) -> Pole:
    """
    Delete v and turn its three edges into dangling edges.

    Vertices above v shift down by one; stubs follow the former neighbours in
    increasing id order.
    """
    if not 0 <= v < g.vertex_count:
        raise StructuralError(f"vertex {v} outside [0, {g.vertex_count})")
    require_cubic(g)

    def relabel(x: int) -> int:
        return x if x < v else x - 1

    edges = [(relabel(a), relabel(b)) for a, b in g.edges if v not in (a, b)]
    stubs = tuple(relabel(w) for w in g.neighbors(v))
    return Pole(inner=CubicGraph.from_edges(g.vertex_count - 1, edges), stubs=stubs)


# === COMPOSITIONS ===

def _shifted(edges: Iterable[Edge], offset: int) -> List[Edge]:
    return [(u + offset, v + offset) for u, v in edges]


def prime(a: Pole) -> Pole:
    """
    A -> A'.

    Copy 1 keeps ids 0..n-1, copy 2 takes n..2n-1, then x1 = 2n, x2 = 2n+1,
    y1 = 2n+2, y2 = 2n+3. First stubs of both copies go to x1, second stubs to
    x2. A' has its stubs at y1 and y2.
    """
    if a.arity != 2:
        raise UnsupportedArityError(f"prime needs a 2-pole, got arity {a.arity}")
    n = a.vertex_count
    x1, x2, y1, y2 = 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3
    s0, s1 = a.stubs

    edges = list(a.inner.edges) + _shifted(a.inner.edges, n)
    edges += [(s0, x1), (s0 + n, x1), (s1, x2), (s1 + n, x2)]
    edges += [(x1, y1), (y1, y2), (y2, x2)]

    result = Pole(inner=CubicGraph.from_edges(2 * n + 4, edges), stubs=(y1, y2))
    logger.debug(f"prime: {n}-vertex 2-pole -> {result.vertex_count}-vertex 2-pole")
    return result


def _petersen_ports() -> dict:
    petersen = petersen_graph()
    return {p: petersen.neighbors(p) for p in range(petersen.vertex_count)}


def double_prime(b: Pole) -> Pole:
    """
    B -> B''.

    Position p in 1..9 of Petersen minus vertex 0 holds a copy of B at ids
    (p-1)*n .. p*n-1. The copy's stub i is wired towards the i-th neighbour of
    p in increasing order. Edges towards vertex 0 become the three dangling
    edges of B'', ordered by that neighbour's id (1, 4, 5).
    """
    if b.arity != 3:
        raise UnsupportedArityError(f"double prime needs a 3-pole, got arity {b.arity}")
    n = b.vertex_count
    ports = _petersen_ports()
    removed = REMOVED_PETERSEN_VERTEX

    def offset(p: int) -> int:
        return (p - 1) * n

    def port_vertex(p: int, towards: int) -> int:
        return offset(p) + b.stubs[ports[p].index(towards)]

    edges: List[Edge] = []
    for p in range(1, 10):
        edges += _shifted(b.inner.edges, offset(p))
    for p, q in petersen_graph().edges:
        if removed in (p, q):
            continue
        edges.append((port_vertex(p, q), port_vertex(q, p)))

    stubs = tuple(port_vertex(r, removed) for r in ports[removed])
    result = Pole(inner=CubicGraph.from_edges(9 * n, edges), stubs=stubs)
    logger.debug(f"double_prime: {n}-vertex 3-pole -> {result.vertex_count}-vertex 3-pole")
    return result


# === INSERTION AND CLOSURE ===

def _check_simple(edges: List[Edge]) -> None:
    seen: Set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise MultigraphError(f"construction creates a loop at vertex {u}")
        edge = normalize_edge(u, v)
        if edge in seen:
            raise MultigraphError(f"construction creates a parallel edge {edge}")
        seen.add(edge)


def insert_2pole(host: CubicGraph, e: Iterable[int], p: Pole) -> CubicGraph:
    """
    Replace edge e = {u, v} of host by the 2-pole p.

    p's vertices are shifted by |V(host)|; u joins p's first stub vertex, v its second.
    """
    require_cubic(host)
    if p.arity != 2:
        raise UnsupportedArityError(f"only 2-poles can be inserted into an edge, got arity {p.arity}")
    u, v = normalize_edge(*e)
    if not host.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u}, {v}) is not in the host graph")

    offset = host.vertex_count
    edges = [x for x in host.edges if x != (u, v)]
    edges += _shifted(p.inner.edges, offset)
    edges += [(u, p.stubs[0] + offset), (v, p.stubs[1] + offset)]
    _check_simple(edges)
    return CubicGraph.from_edges(host.vertex_count + p.vertex_count, edges)


def contract_inserted_block(g: CubicGraph, start: int, size: int) -> CubicGraph:
    """
    Inverse of insert_2pole: drop vertices start..start+size-1 and rejoin the two
    outside vertices that were attached to the block. Higher ids shift down by size.
    """
    block = range(start, start + size)
    if start < 0 or start + size > g.vertex_count:
        raise StructuralError(f"block [{start}, {start + size}) outside [0, {g.vertex_count})")

    attachments = []
    kept = []
    for u, v in g.edges:
        inside = (u in block) + (v in block)
        if inside == 0:
            kept.append((u, v))
        elif inside == 1:
            attachments.append(v if u in block else u)
    if len(attachments) != 2:
        raise StructuralError(f"block is attached by {len(attachments)} edges, expected 2")

    def relabel(x: int) -> int:
        return x if x < start else x - size

    edges = [(relabel(u), relabel(v)) for u, v in kept]
    edges.append((relabel(attachments[0]), relabel(attachments[1])))
    _check_simple(edges)
    return CubicGraph.from_edges(g.vertex_count - size, edges)


def close_3pole_with_vertex(p: Pole) -> CubicGraph:
    """Attach one new vertex (id |V(p)|) to the three dangling edges."""
    if p.arity != 3:
        raise UnsupportedArityError(f"closing with a vertex needs a 3-pole, got arity {p.arity}")
    if len(set(p.stubs)) != 3:
        raise MultigraphError(f"stub vertices {p.stubs} are not distinct; the closure would have parallel edges")
    apex = p.vertex_count
    edges = list(p.inner.edges) + [(s, apex) for s in p.stubs]
    return CubicGraph.from_edges(apex + 1, edges)


# === FAMILIES ===

def seed_pole(kind: FamilyKind) -> Pole:
    kind = FamilyKind(kind)
    if kind == FamilyKind.PLANAR_K4:
        return cut_edge_to_2pole(complete_graph_k4(), HOST_EDGE)
    if kind == FamilyKind.BIPARTITE_K33:
        return cut_edge_to_2pole(complete_bipartite_k33(), HOST_EDGE)
    # B_0: one vertex carrying all three dangling edges
    return Pole(inner=CubicGraph(vertex_count=1), stubs=(0, 0, 0))


def closed_form(kind: FamilyKind, k: int) -> ClosedForm:
    if k < 0:
        raise DomainError(f"family index must be nonnegative, got {k}")
    kind = FamilyKind(kind)
    if kind == FamilyKind.PLANAR_K4:
        return ClosedForm(excess_param=2 * 2**k - 2, pole_vertices=8 * 2**k - 4)
    if kind == FamilyKind.BIPARTITE_K33:
        return ClosedForm(excess_param=2 * 2**k - 2, pole_vertices=10 * 2**k - 4)
    return ClosedForm(excess_param=(9**k - 1) // 8, pole_vertices=9**k)


def iterate_recurrence(kind: FamilyKind, k: int) -> ClosedForm:
    """The same values as closed_form, obtained by running the recurrences k times."""
    if k < 0:
        raise DomainError(f"family index must be nonnegative, got {k}")
    kind = FamilyKind(kind)
    if kind == FamilyKind.THREECONN_PETERSEN:
        b, n = 0, 1
        for _ in range(k):
            b, n = 9 * b + 1, 9 * n
        return ClosedForm(excess_param=b, pole_vertices=n)
    a, n = 0, (4 if kind == FamilyKind.PLANAR_K4 else 6)
    for _ in range(k):
        a, n = 2 * a + 2, 2 * n + 4
    return ClosedForm(excess_param=a, pole_vertices=n)


def _check_vertex_limit(kind: FamilyKind, k: int, vertex_limit: Optional[int]) -> None:
    limit = vertex_limit or get_settings().family_vertex_limit
    required = closed_form(kind, k).pole_vertices + kind.host_vertices
    if required > limit:
        raise ResourceBoundError("family_vertex_limit", limit, required, f"k={k} is too large for {kind.value}")


def pole_chain(kind: FamilyKind, k: int, vertex_limit: Optional[int] = None) -> Pole:
    """A_k (2-pole families) or B_k (THREECONN, k = 0 allowed)."""
    kind = FamilyKind(kind)
    if k < 0:
        raise DomainError(f"family index must be nonnegative, got {k}")
    _check_vertex_limit(kind, k, vertex_limit)
    step = double_prime if kind == FamilyKind.THREECONN_PETERSEN else prime
    pole = seed_pole(kind)
    for _ in range(k):
        pole = step(pole)
    return pole


def close_family_pole(kind: FamilyKind, pole: Pole) -> CubicGraph:
    kind = FamilyKind(kind)
    if kind == FamilyKind.PLANAR_K4:
        return insert_2pole(complete_graph_k4(), HOST_EDGE, pole)
    if kind == FamilyKind.BIPARTITE_K33:
        return insert_2pole(complete_bipartite_k33(), HOST_EDGE, pole)
    return close_3pole_with_vertex(pole)


@debug_performance
def family(family_id: FamilyId, vertex_limit: Optional[int] = None) -> FamilyMember:
    """
    Build the k-th member of a family: its pole, the closed cubic graph and the
    closed-form prediction (excess parameter, pole order).
    """
    kind, k = family_id.kind, family_id.k
    if kind == FamilyKind.THREECONN_PETERSEN and k == 0:
        raise MultigraphError("B_0 closed with a vertex is a multigraph; the threeconn family starts at k = 1")
    pole = pole_chain(kind, k, vertex_limit)
    closed = close_family_pole(kind, pole)
    predicted = closed_form(kind, k)
    logger.info(
        f"Built {kind.value} k={k}: pole {pole.vertex_count} vertices, closed graph {closed.vertex_count} vertices"
    )
    return FamilyMember(id=family_id, pole=pole, closed=closed, predicted=predicted)


def family_limit(kind: FamilyKind) -> Fraction:
    """tsp/|V| of the closures tends to this value from below: 5/4, 6/5, 9/8."""
    return FamilyKind(kind).limit
