# File: cubictsp/services/branch_and_bound.py
"""
BRANCH-AND-BOUND MIN EXCESS - exact search over partial edge assignments

Used when the cycle space is too large to enumerate. Every dangling edge of a
pole becomes an edge to its own degree-1 terminal node, so the same search
handles closed graphs and poles.

Edges are decided one at a time (include first, then exclude) in BFS order.
Included edges form disjoint paths and circuits; each path is tracked by its
two end vertices (partner[end] = other end) so closing a circuit is O(1) and
every change is undone on backtrack.

Lower bound at a node:

    2 * closed circuits + inner vertices settled at degree 0
    (+ 2 when an open inner path exists and can no longer reach a terminal)

Both terms only grow along a branch, so pruning at bound >= incumbent is exact.
"""

import sys
from typing import List, Optional, Set, Tuple, Union

from loguru import logger

from cubictsp.core.errors import ResourceBoundError
from cubictsp.schemas.graph import CubicGraph, EvenFactor, Pole
from cubictsp.services.even_factors import ANY, host_parts

Host = Union[CubicGraph, Pole]

_INFINITY = float("inf")


class ExcessBranchAndBound:
    """
    Minimum of 2c + v over the even factors of a host with a given stub selection.

    Args:
        host: closed graph or pole
        stub_count: 0 or 2 dangling edges, or ANY (an even number)
        allowed_stubs: restrict which dangling edges may be selected (default: all)
        node_budget: maximum search nodes; None searches to completion
    """

    def __init__(
        self,
        host: Host,
        stub_count: Optional[int] = ANY,
        allowed_stubs: Optional[Set[int]] = None,
        node_budget: Optional[int] = None,
    ):
        graph, stubs = host_parts(host)
        self.graph = graph
        self.stubs = stubs
        self.n = graph.vertex_count
        self.stub_count = stub_count
        self.allowed = set(range(len(stubs))) if allowed_stubs is None else set(allowed_stubs)
        self.cap = 0 if stub_count == 0 else 2
        self.node_budget = node_budget

        # terminal for stub i is node n + i
        self.ends: List[Tuple[int, int]] = list(graph.edges) + [(s, self.n + i) for i, s in enumerate(stubs)]
        self.node_count = self.n + len(stubs)
        self.order = self._edge_order()

        self.nodes = 0
        self.best = _INFINITY
        self.best_edges: Optional[List[int]] = None

    def _edge_order(self) -> List[int]:
        incidence = [[] for _ in range(self.node_count)]
        for index, (u, v) in enumerate(self.ends):
            incidence[u].append((v, index))
            incidence[v].append((u, index))

        order, placed = [], set()
        seen = [False] * self.node_count
        for root in range(self.node_count):
            if seen[root]:
                continue
            seen[root] = True
            queue = [root]
            for x in queue:
                for y, index in sorted(incidence[x]):
                    if index not in placed:
                        placed.add(index)
                        order.append(index)
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
        return order

    def _reset_state(self) -> None:
        self.degree = [0] * self.node_count
        self.undecided = [0] * self.node_count
        for u, v in self.ends:
            self.undecided[u] += 1
            self.undecided[v] += 1
        self.partner = list(range(self.node_count))
        self.included = bytearray(len(self.ends))

        self.circuits = 0
        self.open_inner = 0
        self.half_open = 0
        self.stubs_used = 0
        self.undecided_terminal = len(self.stubs)
        self.settled = sum(1 for v in range(self.n) if self.undecided[v] == 0)
        self.trail = []

    # === PATH BOOKKEEPING ===

    def _path_delta(self, a: int, b: int, sign: int) -> None:
        terminals = (a >= self.n) + (b >= self.n)
        if terminals == 0:
            self.open_inner += sign
        elif terminals == 1:
            self.half_open += sign

    def _counters(self) -> tuple:
        return (
            self.circuits,
            self.open_inner,
            self.half_open,
            self.stubs_used,
            self.undecided_terminal,
            self.settled,
        )

    def _restore(self) -> None:
        index, counters, changes, was_included = self.trail.pop()
        (
            self.circuits,
            self.open_inner,
            self.half_open,
            self.stubs_used,
            self.undecided_terminal,
            self.settled,
        ) = counters
        for vertex, old in reversed(changes):
            self.partner[vertex] = old
        u, v = self.ends[index]
        if was_included:
            self.degree[u] -= 1
            self.degree[v] -= 1
            self.included[index] = 0
        self.undecided[u] += 1
        self.undecided[v] += 1

    # === BRANCHING ===

    def _can_include(self, index: int) -> bool:
        degree, n = self.degree, self.n
        for w in self.ends[index]:
            if w >= n:
                if degree[w] or self.stubs_used >= self.cap or (w - n) not in self.allowed:
                    return False
            elif degree[w] >= 2:
                return False
        return True

    def _include(self, index: int) -> bool:
        u, v = self.ends[index]
        n, degree, partner = self.n, self.degree, self.partner
        changes = []
        self.trail.append((index, self._counters(), changes, True))
        self.included[index] = 1
        self.undecided[u] -= 1
        self.undecided[v] -= 1
        if v >= n:
            self.undecided_terminal -= 1
            self.stubs_used += 1

        if degree[u] == 1 and degree[v] == 1 and partner[u] == v and v < n:
            self.circuits += 1
            self.open_inner -= 1
        else:
            a = partner[u] if degree[u] == 1 else u
            b = partner[v] if degree[v] == 1 else v
            if degree[u] == 1:
                self._path_delta(u, partner[u], -1)
            if degree[v] == 1:
                self._path_delta(v, partner[v], -1)
            self._path_delta(a, b, +1)
            changes.append((a, partner[a]))
            changes.append((b, partner[b]))
            partner[a] = b
            partner[b] = a
        degree[u] += 1
        degree[v] += 1

        for w in (u, v):
            if w < n and self.undecided[w] == 0 and degree[w] == 1:
                return False
        return self._terminals_feasible()

    def _exclude(self, index: int) -> bool:
        u, v = self.ends[index]
        n, degree = self.n, self.degree
        self.trail.append((index, self._counters(), [], False))
        self.undecided[u] -= 1
        self.undecided[v] -= 1
        if v >= n:
            self.undecided_terminal -= 1

        feasible = True
        for w in (u, v):
            if w < n and self.undecided[w] == 0:
                if degree[w] == 1:
                    feasible = False
                elif degree[w] == 0:
                    self.settled += 1
        return feasible and self._terminals_feasible()

    def _terminals_feasible(self) -> bool:
        reachable = self.stubs_used + self.undecided_terminal
        if self.stub_count == 2:
            return reachable >= 2
        if self.stub_count is ANY:
            return self.stubs_used % 2 == 0 or self.undecided_terminal > 0
        return True

    def _lower_bound(self) -> int:
        bound = 2 * self.circuits + self.settled
        if self.open_inner and not self.half_open:
            can_add_stub = self.stubs_used < self.cap and self.undecided_terminal > 0
            if not can_add_stub:
                bound += 2
        return bound

    def _leaf(self) -> None:
        if self.stub_count is ANY:
            if self.stubs_used % 2:
                return
        elif self.stubs_used != self.stub_count:
            return
        excess = 2 * self.circuits + self.settled
        if excess < self.best:
            self.best = excess
            self.best_edges = [i for i in range(len(self.ends)) if self.included[i]]
            logger.debug(f"B&B incumbent {excess} after {self.nodes} nodes")

    def _search(self, position: int) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise ResourceBoundError(
                "bnb_node_budget", self.node_budget, hint="branch-and-bound did not finish; raise the node budget"
            )
        if self._lower_bound() >= self.best:
            return
        if position == len(self.order):
            self._leaf()
            return

        index = self.order[position]
        if self._can_include(index):
            if self._include(index):
                self._search(position + 1)
            self._restore()
        if self._exclude(index):
            self._search(position + 1)
        self._restore()

    # === PUBLIC ===

    def _witness(self) -> EvenFactor:
        internal, stub_indices = [], []
        for index in self.best_edges:
            u, v = self.ends[index]
            if v >= self.n:
                stub_indices.append(v - self.n)
            else:
                internal.append((u, v))
        return EvenFactor(internal_edges=internal, stub_indices=frozenset(stub_indices))

    def solve(self) -> Optional[Tuple[int, EvenFactor]]:
        """
        Run the search.

        Returns:
            (minimum excess, first minimizing factor), or None when no factor
            has the requested stub selection.

        Raises:
            ResourceBoundError: node budget exhausted before the search finished
        """
        self._reset_state()
        self.nodes = 0
        self.best = _INFINITY
        self.best_edges = None

        needed = len(self.order) + 100
        if sys.getrecursionlimit() < needed:
            sys.setrecursionlimit(needed)

        self._search(0)
        logger.debug(f"B&B finished: {self.nodes} nodes, best {self.best}")
        if self.best_edges is None:
            return None
        return int(self.best), self._witness()


def branch_and_bound_min_excess(
    host: Host,
    stub_count: Optional[int] = ANY,
    allowed_stubs: Optional[Set[int]] = None,
    node_budget: Optional[int] = None,
) -> Optional[Tuple[int, EvenFactor]]:
    return ExcessBranchAndBound(host, stub_count, allowed_stubs, node_budget).solve()
