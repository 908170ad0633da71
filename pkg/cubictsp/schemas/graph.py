# File: cubictsp/schemas/graph.py
"""
Graph-level domain types: CubicGraph, Pole, EvenFactor, Tour.

Vertices are dense integers 0..n-1. Edges are stored as sorted (u, v) pairs with
u < v, and the edge tuple itself is sorted, so two graphs built from the same
edge set compare equal and serialize identically.

All models are frozen. Structural problems raise StructuralError subclasses
directly rather than pydantic ValidationError.
"""

from typing import FrozenSet, Iterable, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, NonNegativeInt, PrivateAttr, computed_field, field_validator, model_validator

from cubictsp.core.errors import InvalidFactorError, StructuralError, UnsupportedArityError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class CubicGraph(BaseModel):
    """
    A simple undirected graph on vertices 0..vertex_count-1.

    Degrees are not restricted here; poles store their inner graph in this type
    with degrees below three. Cubicity is checked by graph_core.validate_cubic.
    """

    model_config = ConfigDict(frozen=True)

    vertex_count: NonNegativeInt
    edges: Tuple[Edge, ...] = ()

    _adjacency: Tuple[Tuple[int, ...], ...] = PrivateAttr(default=())
    _edge_set: FrozenSet[Edge] = PrivateAttr(default=frozenset())

    @model_validator(mode="before")
    @classmethod
    def _normalize_edges(cls, data):
        if not isinstance(data, dict):
            return data
        n = data.get("vertex_count")
        raw = data.get("edges", ())
        if not isinstance(n, int) or n < 0:
            raise StructuralError(f"vertex_count must be a nonnegative integer, got {n!r}")
        seen = set()
        for pair in raw:
            try:
                u, v = (int(x) for x in pair)
            except (TypeError, ValueError):
                raise StructuralError(f"edge {pair!r} is not a pair of integers")
            if not (0 <= u < n and 0 <= v < n):
                raise StructuralError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            edge = normalize_edge(u, v)
            if edge in seen:
                raise StructuralError(f"duplicate edge {edge}")
            seen.add(edge)
        return {**data, "edges": tuple(sorted(seen))}

    def model_post_init(self, __context) -> None:
        neighbors = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        self._adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        self._edge_set = frozenset(self.edges)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> "CubicGraph":
        return cls(vertex_count=vertex_count, edges=tuple(tuple(e) for e in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self._edge_set

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph


class Pole(BaseModel):
    """
    A 2-pole or 3-pole: an inner graph plus an ordered list of dangling edges.

    stubs[i] is the inner vertex the i-th dangling edge is attached to. A vertex
    may carry several stubs (the one-vertex 3-pole carries all three). Every
    inner vertex has degree three once its stubs are counted.
    """

    model_config = ConfigDict(frozen=True)

    inner: CubicGraph
    stubs: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_degrees(self) -> "Pole":
        if len(self.stubs) not in (2, 3):
            raise UnsupportedArityError(f"poles have 2 or 3 dangling edges, got {len(self.stubs)}")
        n = self.inner.vertex_count
        stub_load = [0] * n
        for s in self.stubs:
            if not 0 <= s < n:
                raise StructuralError(f"stub vertex {s} outside [0, {n})")
            stub_load[s] += 1
        for v in range(n):
            if self.inner.degree(v) + stub_load[v] != 3:
                raise StructuralError(
                    f"vertex {v} has degree {self.inner.degree(v)} plus {stub_load[v]} stubs, expected 3"
                )
        return self

    @property
    def arity(self) -> int:
        return len(self.stubs)

    @property
    def vertex_count(self) -> int:
        return self.inner.vertex_count


class EvenFactor(BaseModel):
    """
    An edge subset of a graph or pole, plus the selected dangling edges.

    Parity against a host is checked by excess.factor_stats; this model only
    enforces what it can see on its own (an even number of dangling edges).
    """

    model_config = ConfigDict(frozen=True)

    internal_edges: FrozenSet[Edge] = frozenset()
    stub_indices: FrozenSet[int] = frozenset()

    @field_validator("internal_edges", mode="before")
    @classmethod
    def _normalize(cls, value):
        return frozenset(normalize_edge(int(u), int(v)) for u, v in value)

    @model_validator(mode="after")
    def _even_stubs(self) -> "EvenFactor":
        if len(self.stub_indices) % 2:
            raise InvalidFactorError(f"an even factor uses an even number of dangling edges, got {sorted(self.stub_indices)}")
        return self

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.internal_edges))


class Tour(BaseModel):
    """A closed spanning walk; walk[-1] is followed by walk[0]."""

    model_config = ConfigDict(frozen=True)

    walk: Tuple[int, ...]

    @computed_field
    @property
    def length(self) -> int:
        return len(self.walk)


class TspResult(BaseModel):
    """Optimal tour length with the tour and the even factor it was built from."""

    model_config = ConfigDict(frozen=True)

    length: NonNegativeInt
    witness_tour: Tour
    witness_factor: EvenFactor
    excess: NonNegativeInt
