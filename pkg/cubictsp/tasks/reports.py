# File: cubictsp/tasks/reports.py
"""
REPORT RENDERING - family tables as pandas frames, CSV files and rich tables

CSV columns (stable, ASCII):
    k, pole_vertices, closed_vertices, excess_param, proved_lower_bound,
    exact_tsp, ratio_num, ratio_den
exact_tsp is empty when the row was out of budget.
"""

from pathlib import Path
from typing import List, Union

import pandas as pd
from loguru import logger
from rich.table import Table

from cubictsp.core.errors import GraphFormatError
from cubictsp.schemas.family import FamilyKind
from cubictsp.schemas.reports import FamilyRow, LemmaReport, StructureCheck

CSV_COLUMNS = [
    "k",
    "pole_vertices",
    "closed_vertices",
    "excess_param",
    "proved_lower_bound",
    "exact_tsp",
    "ratio_num",
    "ratio_den",
]


def rows_to_frame(rows: List[FamilyRow]) -> pd.DataFrame:
    data = [
        {
            "k": row.k,
            "pole_vertices": row.pole_vertices,
            "closed_vertices": row.closed_vertices,
            "excess_param": row.excess_param,
            "proved_lower_bound": row.proved_lower_bound,
            "exact_tsp": row.exact_tsp,
            "ratio_num": row.ratio.numerator,
            "ratio_den": row.ratio.denominator,
        }
        for row in rows
    ]
    df = pd.DataFrame(data, columns=CSV_COLUMNS)
    # nullable integers keep "18" from turning into "18.0" next to missing values
    df["exact_tsp"] = df["exact_tsp"].astype("Int64")
    return df


def write_csv(rows: List[FamilyRow], path: Union[str, Path]) -> None:
    try:
        rows_to_frame(rows).to_csv(path, index=False, lineterminator="\n")
    except OSError as e:
        raise GraphFormatError(str(path), None, f"cannot write CSV: {e}")
    logger.info(f"Wrote {len(rows)} rows to {path}")


def format_frame_text(df: pd.DataFrame, title: str = "") -> str:
    """Plain-text rendering of a frame (report --plain)."""
    lines = []
    if title:
        lines += ["=" * len(title), title, "=" * len(title)]
    lines.append(df.to_string(index=False, justify="left"))
    return "\n".join(lines) + "\n"


def family_table(kind: FamilyKind, rows: List[FamilyRow]) -> Table:
    kind = FamilyKind(kind)
    table = Table(title=f"{kind.value} family (limit {kind.limit})")
    for header in ("k", "|V(pole)|", "|V(G)|", "excess", "printed", "proved", "tsp", "ratio", "conn v/e"):
        table.add_column(header, justify="right")
    for row in rows:
        connectivity = (
            f"{row.vertex_connectivity}/{row.edge_connectivity}" if row.vertex_connectivity is not None else "-"
        )
        table.add_row(
            str(row.k),
            str(row.pole_vertices),
            str(row.closed_vertices),
            str(row.excess_param),
            str(row.printed_bound),
            str(row.proved_lower_bound),
            "-" if row.exact_tsp is None else str(row.exact_tsp),
            f"{row.ratio} ({float(row.ratio):.4f})",
            connectivity,
        )
    return table


def footer_lines(kind: FamilyKind, rows: List[FamilyRow]) -> List[str]:
    """Notes printed under a family table."""
    kind = FamilyKind(kind)
    notes = [
        f"limit: tsp/|V| -> {kind.limit} = {float(kind.limit)} from below",
        "proved = |V(G_k)| - 2 + (excess + 2); printed = |V(pole)| + excess, "
        f"lower by the {kind.host_vertices} vertices the host adds",
        "ratio = tsp/|V(G_k)| when tsp was computed, proved/|V(G_k)| otherwise; "
        "the printed ratio (|V(pole)| + excess)/|V(G_k)| understates it by the same amount",
    ]
    untight = [row.k for row in rows if row.tight is False]
    if untight:
        notes.append(f"exact tsp differs from the proved bound at k = {untight}")
    missing = [row.k for row in rows if row.exact_tsp is None]
    if missing:
        notes.append(f"exact tsp not computed (over budget) at k = {missing}")
    return notes


def lemma_lines(report: LemmaReport) -> List[str]:
    computed = "-" if report.computed_conclusion is None else str(report.computed_conclusion)
    lines = [
        f"lemma {report.lemma}: {report.verdict.value}",
        f"  premise  {report.premise_triple}",
        f"  expected {report.expected_conclusion}",
        f"  computed {computed}",
        f"  method   {report.method}",
    ]
    if report.symmetry is not None:
        lines.append(f"  symmetry {report.symmetry.value}")
    if report.note:
        lines.append(f"  note     {report.note}")
    return lines


def structure_lines(checks: List[StructureCheck]) -> List[str]:
    return [f"{check.verdict.value:<10} {check.name}" + (f" ({check.detail})" if check.detail else "") for check in checks]
