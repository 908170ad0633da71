# File: tests/conftest.py
"""Shared fixtures: the graph corpus and quiet, stderr-only logging."""

import numpy as np
import pytest

from cubictsp.core.console_logger import setup_logger
from cubictsp.schemas.family import FamilyId, FamilyKind
from cubictsp.services.constructions import (
    complete_bipartite_k33,
    complete_graph_k4,
    cube_graph,
    family,
    mobius_kantor_graph,
    petersen_graph,
    prism_graph,
)
from cubictsp.services.random_cubic import random_cubic_graph

RANDOM_SEED = 20240611


@pytest.fixture(autouse=True)
def quiet_logs():
    setup_logger(level="WARNING", enable_file_logs=False)
    yield
    # CLI tests swap sys.stderr; point the sink back at the real one
    setup_logger(level="WARNING", enable_file_logs=False)


@pytest.fixture(scope="session")
def k4():
    return complete_graph_k4()


@pytest.fixture(scope="session")
def k33():
    return complete_bipartite_k33()


@pytest.fixture(scope="session")
def petersen():
    return petersen_graph()


@pytest.fixture(scope="session")
def named_corpus():
    """Small named cubic graphs (all with at most 16 vertices)."""
    return {
        "K4": complete_graph_k4(),
        "K33": complete_bipartite_k33(),
        "petersen": petersen_graph(),
        "prism": prism_graph(),
        "cube": cube_graph(),
        "mobius_kantor": mobius_kantor_graph(),
        "planar_k0": family(FamilyId(kind=FamilyKind.PLANAR_K4, k=0)).closed,
        "planar_k1": family(FamilyId(kind=FamilyKind.PLANAR_K4, k=1)).closed,
        "bipartite_k0": family(FamilyId(kind=FamilyKind.BIPARTITE_K33, k=0)).closed,
        "threeconn_k1": family(FamilyId(kind=FamilyKind.THREECONN_PETERSEN, k=1)).closed,
    }


@pytest.fixture(scope="session")
def random_corpus():
    """50 connected simple cubic graphs with 8 to 14 vertices."""

    rng = np.random.default_rng(RANDOM_SEED)
    sizes = [8, 10, 12, 14]
    return [random_cubic_graph(sizes[i % len(sizes)], seed=rng) for i in range(50)]
