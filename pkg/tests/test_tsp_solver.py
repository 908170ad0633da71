# File: tests/test_tsp_solver.py

import pytest

from cubictsp.core.errors import DomainError, NoTourError, ResourceBoundError, TourError
from cubictsp.schemas.family import FamilyId, FamilyKind
from cubictsp.schemas.graph import CubicGraph, EvenFactor, Tour
from cubictsp.services.even_factors import enumerate_even_factors
from cubictsp.services.tsp_solver import (
    family_lower_bound,
    held_karp_cycle,
    held_karp_tsp,
    printed_bound,
    tour_from_even_factor,
    tsp_length,
    validate_tour,
)

PETERSEN_CYCLES = EvenFactor(
    internal_edges=[
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
    ]
)


@pytest.mark.parametrize(
    "name,expected",
    [
        ("K4", 4),
        ("K33", 6),
        ("petersen", 11),
        ("planar_k0", 8),
        ("bipartite_k0", 12),
        ("planar_k1", 18),
        ("threeconn_k1", 11),
    ],
)
def test_tsp_values(named_corpus, name, expected):
    result = tsp_length(named_corpus[name])
    assert result.length == expected
    assert result.witness_tour.length == expected
    assert result.length == named_corpus[name].vertex_count - 2 + result.excess
    validate_tour(named_corpus[name], result.witness_tour)


def test_oracle_agrees_on_named_graphs(named_corpus):
    for name, g in named_corpus.items():
        assert held_karp_tsp(g) == tsp_length(g).length, name


def test_oracle_agrees_on_random_graphs(random_corpus):
    for g in random_corpus:
        result = tsp_length(g)
        validate_tour(g, result.witness_tour)
        assert held_karp_tsp(g) == result.length


def test_held_karp_order_is_a_permutation(petersen):
    length, order = held_karp_cycle(petersen)
    assert length == 11
    assert order[0] == 0
    assert sorted(order) == list(range(10))


def test_tour_from_even_factor_lengths(k4, petersen):
    empty = tour_from_even_factor(k4, EvenFactor())
    assert empty.length == 6
    assert empty.walk[0] == 0
    validate_tour(k4, empty)

    two_circuits = tour_from_even_factor(petersen, PETERSEN_CYCLES)
    assert two_circuits.length == 12
    validate_tour(petersen, two_circuits)


def test_every_factor_gives_a_tour_no_shorter_than_optimum(petersen):
    for f in enumerate_even_factors(petersen):
        tour = tour_from_even_factor(petersen, f)
        validate_tour(petersen, tour)
        assert tour.length >= 11


def test_validate_tour_errors(k4, petersen):
    with pytest.raises(TourError, match="non-edge"):
        validate_tour(petersen, Tour(walk=(0, 2, 1)))
    with pytest.raises(TourError, match="misses"):
        validate_tour(k4, Tour(walk=(0, 1, 2)))
    with pytest.raises(TourError, match="more than twice"):
        validate_tour(k4, Tour(walk=(0, 1, 0, 1, 2, 3)))
    with pytest.raises(TourError):
        validate_tour(k4, Tour(walk=()))


def test_disconnected_graph_has_no_tour():
    two_k4 = CubicGraph.from_edges(
        8, [(u, v) for block in (0, 4) for u in range(block, block + 4) for v in range(u + 1, block + 4)]
    )
    with pytest.raises(NoTourError):
        tsp_length(two_k4)
    with pytest.raises(NoTourError):
        held_karp_tsp(two_k4)


def test_oracle_budget(petersen):
    with pytest.raises(ResourceBoundError) as info:
        held_karp_tsp(petersen, budget=8)
    assert info.value.budget_name == "oracle_budget"


def test_tsp_over_enumeration_budget(petersen):
    assert tsp_length(petersen, budget=3).length == 11


@pytest.mark.parametrize(
    "kind,k,expected",
    [
        (FamilyKind.PLANAR_K4, 0, 8),
        (FamilyKind.PLANAR_K4, 1, 18),
        (FamilyKind.BIPARTITE_K33, 0, 12),
        (FamilyKind.BIPARTITE_K33, 1, 24),
        (FamilyKind.THREECONN_PETERSEN, 1, 11),
    ],
)
def test_family_lower_bound(kind, k, expected):
    assert family_lower_bound(FamilyId(kind=kind, k=k)) == expected


def test_printed_bound_is_weaker():
    family_id = FamilyId(kind=FamilyKind.PLANAR_K4, k=1)
    assert printed_bound(family_id) == 14
    assert printed_bound(family_id) < family_lower_bound(family_id)


def test_threeconn_starts_at_one():
    with pytest.raises(DomainError):
        family_lower_bound(FamilyId(kind=FamilyKind.THREECONN_PETERSEN, k=0))
