# File: tests/test_verification.py

from fractions import Fraction

import pytest

from cubictsp.core.errors import PremiseError, UnsupportedArityError
from cubictsp.schemas.family import FamilyKind
from cubictsp.schemas.graph import CubicGraph, Pole
from cubictsp.schemas.reports import SymmetryStatus, Verdict
from cubictsp.services.constructions import pole_chain, prism_graph, remove_vertex_to_3pole
from cubictsp.services.excess import Strategy, pole_triple
from cubictsp.tasks.verification import (
    theorem_table,
    verify_closed_forms,
    verify_lemma1,
    verify_lemma2,
    verify_structure,
)


def _lopsided_2pole() -> Pole:
    # both dangling edges on vertex 0, which hangs off a 5-vertex wheel-like block
    inner = CubicGraph.from_edges(6, [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)])
    return Pole(inner=inner, stubs=(0, 0))


@pytest.mark.parametrize(
    "kind,k,premise,expected",
    [
        (FamilyKind.PLANAR_K4, 0, (2, 0, 4), (4, 2, 12)),
        (FamilyKind.PLANAR_K4, 1, (4, 2, 12), (8, 6, 28)),
        (FamilyKind.BIPARTITE_K33, 0, (2, 0, 6), (4, 2, 16)),
        (FamilyKind.BIPARTITE_K33, 1, (4, 2, 16), (8, 6, 36)),
    ],
)
def test_lemma1_passes(kind, k, premise, expected):
    report = verify_lemma1(pole_chain(kind, k))
    assert report.verdict == Verdict.PASS
    assert report.premise_triple.as_tuple() == premise
    assert report.expected_conclusion.as_tuple() == expected
    assert report.computed_conclusion.as_tuple() == expected
    assert report.method == "exhaustive"


def test_lemma1_with_branch_and_bound():
    report = verify_lemma1(pole_chain(FamilyKind.BIPARTITE_K33, 1), Strategy.AUTO, budget=12)
    assert report.verdict == Verdict.PASS
    assert report.computed_conclusion.as_tuple() == (8, 6, 36)
    assert report.method == "branch-and-bound"


@pytest.mark.parametrize(
    "kind,premise,expected",
    [
        (FamilyKind.PLANAR_K4, (8, 6, 28), (16, 14, 60)),
        (FamilyKind.BIPARTITE_K33, (8, 6, 36), (16, 14, 76)),
    ],
)
def test_lemma1_over_budget_passes_by_composition(kind, premise, expected):
    report = verify_lemma1(pole_chain(kind, 2))
    assert report.verdict == Verdict.PASS
    assert report.premise_triple.as_tuple() == premise
    assert report.computed_conclusion.as_tuple() == expected
    assert report.method == "composition"
    assert "enum_budget" in report.note


def test_lemma1_composition_agrees_with_forced_small_budget():
    report = verify_lemma1(pole_chain(FamilyKind.PLANAR_K4, 1), budget=12)
    assert report.method == "composition"
    assert report.computed_conclusion.as_tuple() == (8, 6, 28)
    assert report.verdict == Verdict.PASS


def test_lemma1_premise_violation():
    pole = _lopsided_2pole()
    assert pole_triple(pole).as_tuple() == (3, 2, 6)
    with pytest.raises(PremiseError):
        verify_lemma1(pole)


def test_lemma1_needs_a_2pole():
    with pytest.raises(UnsupportedArityError):
        verify_lemma1(pole_chain(FamilyKind.THREECONN_PETERSEN, 0))


def test_lemma2_passes_on_single_vertex():
    report = verify_lemma2(pole_chain(FamilyKind.THREECONN_PETERSEN, 0))
    assert report.verdict == Verdict.PASS
    assert report.premise_triple.as_tuple() == (1, 0, 1)
    assert report.computed_conclusion.as_tuple() == (2, 1, 9)
    assert report.symmetry == SymmetryStatus.SYMMETRIC


def test_lemma2_unverified_when_node_budget_runs_out():
    report = verify_lemma2(pole_chain(FamilyKind.THREECONN_PETERSEN, 1), node_budget=500)
    assert report.premise_triple.as_tuple() == (2, 1, 9)
    assert report.expected_conclusion.as_tuple() == (11, 10, 81)
    assert report.symmetry == SymmetryStatus.SYMMETRIC
    assert report.computed_conclusion is None
    assert report.verdict == Verdict.UNVERIFIED
    assert report.method == "branch-and-bound"


def test_lemma2_premise_violation():
    with pytest.raises(PremiseError, match="lemma 2"):
        verify_lemma2(remove_vertex_to_3pole(prism_graph(), 0))


@pytest.mark.parametrize("kind", list(FamilyKind))
def test_closed_forms_match_recurrences(kind):
    assert verify_closed_forms(kind, 10)


def test_planar_theorem_table():
    rows = theorem_table(FamilyKind.PLANAR_K4, 2)
    assert [row.k for row in rows] == [0, 1, 2]
    assert [row.exact_tsp for row in rows] == [8, 18, 38]
    assert [row.ratio for row in rows] == [Fraction(1), Fraction(9, 8), Fraction(19, 16)]
    assert all(row.tight for row in rows)
    assert all(row.ratio < FamilyKind.PLANAR_K4.limit for row in rows)
    assert rows[0].ratio < rows[1].ratio < rows[2].ratio
    assert [row.vertex_connectivity for row in rows] == [2, 2, 2]


def test_threeconn_theorem_table_starts_at_one():
    rows = theorem_table(FamilyKind.THREECONN_PETERSEN, 1)
    assert len(rows) == 1
    row = rows[0]
    assert (row.k, row.closed_vertices, row.exact_tsp) == (1, 10, 11)
    assert row.ratio == Fraction(11, 10)
    assert row.vertex_connectivity == 3


def test_bipartite_theorem_table():
    rows = theorem_table(FamilyKind.BIPARTITE_K33, 1)
    assert [(row.exact_tsp, row.closed_vertices) for row in rows] == [(12, 12), (24, 22)]
    assert rows[1].ratio == Fraction(24, 22)


def test_theorem_table_keeps_rows_when_budgets_run_out():
    rows = theorem_table(FamilyKind.PLANAR_K4, 1, budget=5, node_budget=10)
    assert rows[0].exact_tsp == 8
    assert rows[1].exact_tsp is None
    assert rows[1].tight is None
    assert rows[1].ratio == Fraction(18, 16)


def test_theorem_table_vertex_limit():
    rows = theorem_table(FamilyKind.PLANAR_K4, 1, vertex_limit=10)
    assert rows[1].exact_tsp is None
    assert rows[1].vertex_connectivity is None
    assert rows[1].proved_lower_bound == 18


@pytest.mark.parametrize("kind", [FamilyKind.PLANAR_K4, FamilyKind.BIPARTITE_K33])
def test_structure_checks_pass(kind):
    checks = verify_structure(kind, 2)
    assert checks
    assert all(check.verdict == Verdict.PASS for check in checks)


def test_threeconn_structure_symmetry():
    checks = {check.name: check for check in verify_structure(FamilyKind.THREECONN_PETERSEN, 2)}
    assert checks["threeconn k=1: 3-connected"].verdict == Verdict.PASS
    assert checks["threeconn k=2: 3-edge-connected"].verdict == Verdict.PASS
    assert checks["threeconn B_0: symmetric 3-pole"].verdict == Verdict.PASS
    assert checks["threeconn B_1: symmetric 3-pole"].verdict == Verdict.PASS
    assert checks["threeconn B_2: symmetric 3-pole"].verdict == Verdict.UNVERIFIED
    assert Verdict.FAIL not in {check.verdict for check in checks.values()}
