"""Regeneration of the three reference tables as rows of strings.

Each table keeps the transcribed text columns and adds columns computed
from the catalog and the search, so a diff against the transcription shows
exactly where computation and print disagree.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional

from .minrep import minimal_quaternionic_rep, row_forms
from .reftables import MINREP_ROWS, QK_ROWS, QUAT_INDEX_ROWS
from .realforms import Catalog, RealForm, default_catalog
from .rootsys import algebra_real_dim, printed_to_bourbaki
from .spaces import noncompact_space

SCHEMA_VERSION = 1

TABLE_COLUMNS = {
    1: ("g_C", "g", "k", "diagram", "sigma", "dim", "instances"),
    2: ("g_C", "g", "condition", "diagram", "Q", "instances"),
    3: ("g_C", "dim_g", "g", "rho_min", "dim_rho_min", "instances", "match"),
}


def satake_string(f: RealForm) -> str:
    """Node colours in Bourbaki order (``o`` white, ``*`` black) and the arrows."""
    text = "".join("*" if i in f.compact_nodes else "o" for i in range(1, f.rank + 1))
    return ", ".join([text] + [f"{i}<->{j}" for i, j in f.arrows])


def _nodes(nodes) -> str:
    return "{" + ",".join(map(str, sorted(nodes))) + "}"


def table1(catalog: Optional[Catalog] = None) -> list[dict]:
    rows = []
    for row in QK_ROWS:
        inst = []
        for n in row.params:
            s = noncompact_space(row, n, catalog)
            inst.append(f"{s.g.name} dim={s.dim_gk} k_dim={s.k_dim} diagram=[{satake_string(s.g)}]")
        rows.append(dict(zip(TABLE_COLUMNS[1], (
            row.g_c, row.g, row.k, row.diagram, row.sigma, row.dim_text, "; ".join(inst)))))
    return rows


def table2_forms(row, catalog: Catalog) -> list[RealForm]:
    out = []
    for f in catalog.forms:
        if f.family_key == row.family and row.applies(f.rank, f.parameters):
            out.append(f)
    return out


def table2(catalog: Optional[Catalog] = None) -> list[dict]:
    catalog = catalog or default_catalog()
    rows = []
    for row in QUAT_INDEX_ROWS:
        inst = [f"{f.name}={_nodes(f.q_set)}" for f in table2_forms(row, catalog)]
        rows.append(dict(zip(TABLE_COLUMNS[2], (
            row.g_c, row.g, row.condition, row.diagram, row.q_text, "; ".join(inst)))))
    return rows


def table3(catalog: Optional[Catalog] = None) -> list[dict]:
    catalog = catalog or default_catalog()
    rows = []
    for row in MINREP_ROWS:
        inst, ok = [], True
        for rank in row.params:
            for f in row_forms(row, rank, catalog):
                res = minimal_quaternionic_rep(f)
                expected = frozenset(printed_to_bourbaki(f.complex_type, i) for i in row.printed_nodes(rank))
                ok &= res.real_dim == row.dim_rho(rank) and res.nodes == expected
                inst.append(f"{f.name} dim_g={algebra_real_dim(f.complex_type)} "
                            f"dim={res.real_dim} nodes={_nodes(res.nodes)}")
        rows.append(dict(zip(TABLE_COLUMNS[3], (
            row.g_c, row.dim_g_text, row.g, row.rho_text, row.dim_rho_text, "; ".join(inst),
            "yes" if ok else "no"))))
    return rows


def build_table(which: int, catalog: Optional[Catalog] = None) -> list[dict]:
    builders = {1: table1, 2: table2, 3: table3}
    if which not in builders:
        raise ValueError(f"table must be 1, 2 or 3, got {which!r}")
    return builders[which](catalog)


def to_tsv(which: int, rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    cols = TABLE_COLUMNS[which]
    writer.writerow(cols)
    for r in rows:
        writer.writerow([r[c] for c in cols])
    return buf.getvalue()


def from_tsv(text: str) -> tuple[tuple[str, ...], list[dict]]:
    reader = csv.reader(io.StringIO(text), delimiter="\t")
    header = tuple(next(reader))
    return header, [dict(zip(header, rec)) for rec in reader]


def to_json(which: int, rows: list[dict]) -> str:
    payload = {"schema_version": SCHEMA_VERSION, "table": which, "columns": list(TABLE_COLUMNS[which]),
               "rows": rows}
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
