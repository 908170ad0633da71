# File: tests/test_even_factors.py

import pytest

from cubictsp.core.errors import InvalidFactorError, ResourceBoundError
from cubictsp.schemas.factor import ExcessTriple
from cubictsp.schemas.family import FamilyId, FamilyKind
from cubictsp.schemas.graph import EvenFactor
from cubictsp.services.constructions import (
    cut_edge_to_2pole,
    family,
    petersen_graph,
    pole_chain,
    prime,
    prism_graph,
    remove_vertex_to_3pole,
)
from cubictsp.services.even_factors import CycleSpaceEnumerator, enumerate_even_factors, enumerate_with_stats
from cubictsp.services.excess import (
    Strategy,
    factor_stats,
    is_hamiltonian,
    is_hypohamiltonian,
    min_excess,
    per_pair_q2,
    pole_triple,
    prime_triple,
)

K4_HAMILTONIAN = EvenFactor(internal_edges=[(0, 1), (1, 2), (2, 3), (0, 3)])


def test_factor_stats_examples(k4):
    stats = factor_stats(k4, K4_HAMILTONIAN)
    assert (stats.circuits, stats.isolated, stats.excess) == (1, 0, 2)
    empty = factor_stats(k4, EvenFactor())
    assert (empty.circuits, empty.isolated, empty.excess) == (0, 4, 4)


def test_stub_path_contributes_nothing():
    a0 = pole_chain(FamilyKind.PLANAR_K4, 0)
    path = EvenFactor(internal_edges=[(0, 2), (2, 3), (1, 3)], stub_indices=frozenset({0, 1}))
    stats = factor_stats(a0, path)
    assert (stats.circuits, stats.isolated, stats.excess, stats.stub_paths) == (0, 0, 0, 1)


def test_invalid_factors_are_rejected(k4):
    with pytest.raises(InvalidFactorError):
        factor_stats(k4, EvenFactor(internal_edges=[(0, 1)]))
    with pytest.raises(InvalidFactorError):
        factor_stats(k4, EvenFactor(stub_indices=frozenset({0, 1})))
    with pytest.raises(InvalidFactorError):
        EvenFactor(stub_indices=frozenset({0}))
    a0 = pole_chain(FamilyKind.PLANAR_K4, 0)
    with pytest.raises(InvalidFactorError):
        # (0, 1) was cut to make the pole
        factor_stats(a0, EvenFactor(internal_edges=[(0, 1), (1, 2), (0, 2)]))


def test_enumeration_counts(k4, petersen):
    k4_factors = list(enumerate_even_factors(k4))
    assert len(k4_factors) == 8
    assert len(set(k4_factors)) == 8
    assert CycleSpaceEnumerator(petersen).dimension == 6
    assert len(set(enumerate_even_factors(petersen))) == 64


def test_every_enumerated_factor_is_even(named_corpus):
    for name in ("K4", "K33", "prism", "cube", "petersen"):
        g = named_corpus[name]
        for f in enumerate_even_factors(g):
            factor_stats(g, f)


def test_two_stub_factors_have_one_stub_path():
    a0 = pole_chain(FamilyKind.PLANAR_K4, 0)
    factors = list(enumerate_even_factors(a0, stub_count=2))
    assert factors
    for f in factors:
        assert len(f.stub_indices) == 2
        assert factor_stats(a0, f).stub_paths == 1
    assert all(not f.stub_indices for f in enumerate_even_factors(a0, stub_count=0))


def test_incremental_stats_match_recomputation(petersen):
    b1 = pole_chain(FamilyKind.THREECONN_PETERSEN, 1)
    for host in (petersen, b1, pole_chain(FamilyKind.BIPARTITE_K33, 0)):
        for f, stats in enumerate_with_stats(host):
            assert factor_stats(host, f) == stats


def test_enumeration_budget(petersen):
    with pytest.raises(ResourceBoundError) as info:
        list(enumerate_even_factors(petersen, budget=5))
    assert info.value.required == 6
    assert "min_excess" in str(info.value)


@pytest.mark.parametrize(
    "name,expected",
    [("K4", 2), ("K33", 2), ("petersen", 3), ("prism", 2), ("cube", 2), ("planar_k1", 4)],
)
def test_min_excess_values(named_corpus, name, expected):
    g = named_corpus[name]
    excess, witness = min_excess(g)
    assert excess == expected
    assert factor_stats(g, witness).excess == expected


def test_min_excess_at_least_two(named_corpus, random_corpus):
    for g in list(named_corpus.values()) + random_corpus[:10]:
        assert min_excess(g)[0] >= 2


def test_seed_pole_triples():
    assert pole_triple(pole_chain(FamilyKind.PLANAR_K4, 0)) == ExcessTriple(q0=2, q2=0, n=4)
    assert pole_triple(pole_chain(FamilyKind.BIPARTITE_K33, 0)) == ExcessTriple(q0=2, q2=0, n=6)
    assert pole_triple(pole_chain(FamilyKind.THREECONN_PETERSEN, 0)) == ExcessTriple(q0=1, q2=0, n=1)


def test_composed_pole_triples():
    assert pole_triple(pole_chain(FamilyKind.PLANAR_K4, 1)).as_tuple() == (4, 2, 12)
    assert pole_triple(pole_chain(FamilyKind.THREECONN_PETERSEN, 1)).as_tuple() == (2, 1, 9)


def test_per_pair_q2():
    assert set(per_pair_q2(pole_chain(FamilyKind.THREECONN_PETERSEN, 0)).values()) == {0}
    b1 = pole_chain(FamilyKind.THREECONN_PETERSEN, 1)
    pairs = per_pair_q2(b1)
    assert pairs == {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    assert pole_triple(b1).q2 == min(pairs.values())


def test_auto_strategy_falls_back_to_branch_and_bound():
    b1 = pole_chain(FamilyKind.THREECONN_PETERSEN, 1)
    with pytest.raises(ResourceBoundError):
        pole_triple(b1, budget=2)
    assert pole_triple(b1, Strategy.AUTO, budget=2) == ExcessTriple(q0=2, q2=1, n=9)
    assert per_pair_q2(b1, Strategy.AUTO, budget=2) == {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    a1 = pole_chain(FamilyKind.PLANAR_K4, 1)
    assert pole_triple(a1, Strategy.AUTO, budget=2).as_tuple() == (4, 2, 12)


def test_hamiltonicity(k4, petersen):
    assert is_hamiltonian(k4)
    assert not is_hamiltonian(petersen)
    assert is_hypohamiltonian(petersen)
    assert not is_hypohamiltonian(k4)


def test_petersen_minus_vertex_has_hamiltonian_circuit(petersen):
    # q0 = 2 of Petersen minus a vertex is the 9-circuit
    assert pole_triple(remove_vertex_to_3pole(petersen, 3)).q0 == 2


def test_planar_closure_k1_witness_is_valid():
    closed = family(FamilyId(kind=FamilyKind.PLANAR_K4, k=1)).closed
    _, witness = min_excess(closed)
    stats = factor_stats(closed, witness)
    assert stats.excess == 2 * stats.circuits + stats.isolated == 4


@pytest.mark.parametrize(
    "pole",
    [
        pole_chain(FamilyKind.PLANAR_K4, 0),
        pole_chain(FamilyKind.PLANAR_K4, 1),
        pole_chain(FamilyKind.BIPARTITE_K33, 0),
        pole_chain(FamilyKind.BIPARTITE_K33, 1),
        cut_edge_to_2pole(prism_graph(), (0, 1)),
        cut_edge_to_2pole(petersen_graph(), (0, 1)),
    ],
)
def test_prime_triple_matches_direct_solve(pole):
    assert prime_triple(pole_triple(pole)) == pole_triple(prime(pole))


def test_prime_triple_of_a_premise_free_triple():
    # (3, 2, 6) is not of the form (a+2, a, n); the composition still applies
    assert prime_triple(ExcessTriple(q0=3, q2=2, n=6)).as_tuple() == (7, 5, 16)
