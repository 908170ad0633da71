# File: cubictsp/services/random_cubic.py
"""
Random connected simple cubic graphs from the pairing (configuration) model.

Each vertex contributes three points; a uniform perfect matching of the 3n
points is drawn and the sample is rejected if it has a loop, a parallel edge or
more than one component.
"""

from typing import Optional

import networkx as nx
import numpy as np
from loguru import logger

from cubictsp.core.errors import DomainError, ResourceBoundError
from cubictsp.schemas.graph import CubicGraph

MAX_ATTEMPTS = 10_000


def _try_pairing(n: int, rng: np.random.Generator) -> Optional[CubicGraph]:
    points = rng.permutation(np.repeat(np.arange(n), 3))
    edges = set()
    for u, v in points.reshape(-1, 2):
        u, v = int(u), int(v)
        if u == v:
            return None
        edge = (u, v) if u < v else (v, u)
        if edge in edges:
            return None
        edges.add(edge)
    graph = CubicGraph.from_edges(n, edges)
    if not nx.is_connected(graph.to_networkx()):
        return None
    return graph


def random_cubic_graph(n: int, seed=None) -> CubicGraph:
    """
    Sample a connected simple cubic graph on n vertices.

    Args:
        n: even number of vertices, at least 4
        seed: int seed or a numpy Generator
    """
    if n < 4 or n % 2:
        raise DomainError(f"cubic graphs need an even vertex count >= 4, got {n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for attempt in range(1, MAX_ATTEMPTS + 1):
        graph = _try_pairing(n, rng)
        if graph is not None:
            logger.debug(f"Pairing model accepted a {n}-vertex sample after {attempt} attempts")
            return graph
    raise ResourceBoundError("pairing_attempts", MAX_ATTEMPTS, hint=f"no simple connected sample for n={n}")
