# File: cubictsp/services/even_factors.py
"""
EVEN FACTOR ENUMERATION - walks the binary cycle space of a graph or pole

Even subgraphs of a graph are exactly the elements of its cycle space. A pole
is handled by joining its dangling edges to one auxiliary apex vertex: even
subgraphs of that closure with apex degree 0 or 2 are the even factors using
0 or 2 dangling edges, and the circuit through the apex is the stub-to-stub
path (it contributes nothing to the excess).

The basis is the set of fundamental cycles of a BFS spanning forest, shortest
first, walked in Gray-code order: consecutive states differ by one basis cycle,
so degrees and the isolated-vertex count are updated incrementally.

Edge indices: 0..m-1 are the inner edges in sorted order, m+i is stub i.
"""

from typing import Dict, Iterator, List, Optional, Tuple, Union

from loguru import logger

from cubictsp.core.config import get_settings
from cubictsp.core.errors import ResourceBoundError
from cubictsp.schemas.factor import FactorStats
from cubictsp.schemas.graph import CubicGraph, EvenFactor, Pole

Host = Union[CubicGraph, Pole]

# stub_count value meaning "any even number of dangling edges"
ANY = None


def host_parts(host: Host) -> Tuple[CubicGraph, Tuple[int, ...]]:
    if isinstance(host, Pole):
        return host.inner, host.stubs
    return host, ()


class CycleSpaceEnumerator:
    """
    Incremental walk over every even subgraph of a host.

    states() yields the enumerator itself once per even subgraph; read the
    current state through isolated, apex_degree, selected_stubs(), stats()
    and factor().
    """

    def __init__(self, host: Host):
        graph, stubs = host_parts(host)
        self.graph = graph
        self.stubs = stubs
        self.inner_count = graph.vertex_count
        self.apex: Optional[int] = graph.vertex_count if stubs else None
        self.node_count = graph.vertex_count + (1 if stubs else 0)
        self.internal_edge_count = graph.edge_count

        self.ends: List[Tuple[int, int]] = list(graph.edges) + [(s, graph.vertex_count) for s in stubs]
        self.incidence: List[List[Tuple[int, int]]] = [[] for _ in range(self.node_count)]
        for index, (u, v) in enumerate(self.ends):
            self.incidence[u].append((index, v))
            self.incidence[v].append((index, u))

        self.basis = self._fundamental_cycles()
        self._reset()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _fundamental_cycles(self) -> List[List[int]]:
        parent = [-1] * self.node_count
        parent_edge = [-1] * self.node_count
        depth = [-1] * self.node_count
        tree_edges = set()

        for root in range(self.node_count):
            if depth[root] >= 0:
                continue
            depth[root] = 0
            queue = [root]
            for x in queue:
                for index, y in sorted(self.incidence[x], key=lambda item: (item[1], item[0])):
                    if depth[y] < 0:
                        depth[y] = depth[x] + 1
                        parent[y] = x
                        parent_edge[y] = index
                        tree_edges.add(index)
                        queue.append(y)

        cycles = []
        for index, (u, v) in enumerate(self.ends):
            if index in tree_edges:
                continue
            cycle = [index]
            a, b = u, v
            while a != b:
                if depth[a] >= depth[b]:
                    cycle.append(parent_edge[a])
                    a = parent[a]
                else:
                    cycle.append(parent_edge[b])
                    b = parent[b]
            cycles.append(cycle)
        cycles.sort(key=len)
        return cycles

    def _reset(self) -> None:
        self.degree = [0] * self.node_count
        self.selected = bytearray(len(self.ends))
        self.isolated = self.inner_count

    def _toggle(self, cycle: List[int]) -> None:
        degree, selected, ends, apex = self.degree, self.selected, self.ends, self.apex
        isolated = self.isolated
        for index in cycle:
            u, v = ends[index]
            if selected[index]:
                selected[index] = 0
                degree[u] -= 1
                degree[v] -= 1
                if degree[u] == 0 and u != apex:
                    isolated += 1
                if degree[v] == 0 and v != apex:
                    isolated += 1
            else:
                selected[index] = 1
                if degree[u] == 0 and u != apex:
                    isolated -= 1
                if degree[v] == 0 and v != apex:
                    isolated -= 1
                degree[u] += 1
                degree[v] += 1
        self.isolated = isolated

    def states(self, budget: Optional[int] = None) -> Iterator["CycleSpaceEnumerator"]:
        budget = budget or get_settings().enum_budget
        if self.dimension > budget:
            raise ResourceBoundError(
                "enum_budget",
                budget,
                self.dimension,
                "cycle space too large for exhaustive enumeration; use min_excess (branch-and-bound)",
            )
        logger.debug(f"Enumerating 2^{self.dimension} even subgraphs")
        self._reset()
        yield self
        basis = self.basis
        for step in range(1, 1 << self.dimension):
            self._toggle(basis[(step & -step).bit_length() - 1])
            yield self

    # --- reading the current state ---

    @property
    def apex_degree(self) -> int:
        return 0 if self.apex is None else self.degree[self.apex]

    def selected_stubs(self) -> Tuple[int, ...]:
        m = self.internal_edge_count
        return tuple(i for i in range(len(self.stubs)) if self.selected[m + i])

    def circuit_count(self) -> int:
        """Components of the selected edges, not counting the one through the apex."""
        degree, selected, incidence, apex = self.degree, self.selected, self.incidence, self.apex
        visited = bytearray(self.node_count)
        circuits = 0
        for start in range(self.node_count):
            if not degree[start] or visited[start]:
                continue
            visited[start] = 1
            stack = [start]
            through_apex = False
            while stack:
                x = stack.pop()
                if x == apex:
                    through_apex = True
                for index, y in incidence[x]:
                    if selected[index] and not visited[y]:
                        visited[y] = 1
                        stack.append(y)
            if not through_apex:
                circuits += 1
        return circuits

    def stats(self) -> FactorStats:
        return FactorStats.of(
            circuits=self.circuit_count(),
            isolated=self.isolated,
            stub_paths=1 if self.apex_degree else 0,
        )

    def factor(self) -> EvenFactor:
        m = self.internal_edge_count
        return EvenFactor(
            internal_edges=[self.ends[i] for i in range(m) if self.selected[i]],
            stub_indices=frozenset(self.selected_stubs()),
        )

    def minima(self, budget: Optional[int] = None) -> Dict[Tuple[int, ...], Tuple[int, EvenFactor]]:
        """
        Minimum excess and a first minimizing factor for every stub selection.

        Keys are the sorted tuples of selected stub indices: () for factors with
        no dangling edge, (i, j) for factors through stubs i and j.
        """
        closed = self.apex is None
        n = self.inner_count
        best: Dict[Tuple[int, ...], Tuple[int, EvenFactor]] = {}
        for state in self.states(budget):
            key = state.selected_stubs() if not closed else ()
            isolated = state.isolated
            # a closed graph with any edge selected has at least one circuit
            bound = isolated + 2 if closed and isolated < n else isolated
            current = best.get(key)
            if current is not None and bound >= current[0]:
                continue
            excess = 2 * state.circuit_count() + isolated
            if current is None or excess < current[0]:
                best[key] = (excess, state.factor())
        return best


def enumerate_even_factors(
    host: Host, stub_count: Optional[int] = ANY, budget: Optional[int] = None
) -> Iterator[EvenFactor]:
    """
    Yield every even factor of host exactly once.

    Args:
        host: closed graph or pole
        stub_count: 0 or 2 to keep only factors with that many dangling edges, ANY for all
        budget: maximum cycle-space dimension (defaults to settings.enum_budget)
    """
    enumerator = CycleSpaceEnumerator(host)
    for state in enumerator.states(budget):
        if stub_count is not ANY and len(state.selected_stubs()) != stub_count:
            continue
        yield state.factor()


def enumerate_with_stats(host: Host, budget: Optional[int] = None) -> Iterator[Tuple[EvenFactor, FactorStats]]:
    """Every even factor together with the statistics tracked during the walk."""
    enumerator = CycleSpaceEnumerator(host)
    for state in enumerator.states(budget):
        yield state.factor(), state.stats()
