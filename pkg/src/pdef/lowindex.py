"""All subgroups of index <= n, by backtracking over partial coset tables.

New cosets are only ever introduced at the first undefined entry in scan
order, so every complete table the search emits is already in canonical
BFS numbering; distinct tables are distinct subgroups (not conjugacy
classes), each appearing exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import CosetTable, is_normal
from .presentations import Presentation
from .rewriting import schreier_generators
from .words import Word, cyclic_reduce


@dataclass(frozen=True)
class SubgroupRecord:
    table: CosetTable
    index: int
    normal: bool
    schreier_generators: tuple[Word, ...]


def _scan_all(rows, rel_cols) -> bool:
    """Propagate relator deductions to a fixpoint.  Returns False on a
    contradiction (a relator scan closing at two different cosets)."""
    changed = True
    while changed:
        changed = False
        for alpha in range(len(rows)):
            for cols in rel_cols:
                f, i = alpha, 0
                b, j = alpha, len(cols) - 1
                while i <= j and rows[f][cols[i]] is not None:
                    f = rows[f][cols[i]]
                    i += 1
                if i > j:
                    if f != b:
                        return False
                    continue
                while j >= i and rows[b][cols[j] ^ 1] is not None:
                    b = rows[b][cols[j] ^ 1]
                    j -= 1
                if j < i:
                    return False
                if j == i:
                    rows[f][cols[i]] = b
                    rows[b][cols[i] ^ 1] = f
                    changed = True
    return True


def low_index_subgroups(P: Presentation, max_index: int) -> list[SubgroupRecord]:
    """Every subgroup of index <= max_index (the whole group included),
    as canonical coset tables sorted by (index, flattened table)."""
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    ncols = 2 * P.n_generators
    rel_cols = []
    for r in P.relators:
        core = cyclic_reduce(r)[1]
        if core:
            rel_cols.append(tuple(2 * (abs(ell) - 1) + (0 if ell > 0 else 1) for ell in core.letters))

    found: list[tuple[tuple[int, ...], ...]] = []

    def first_undefined(rows):
        for alpha in range(len(rows)):
            for col in range(ncols):
                if rows[alpha][col] is None:
                    return alpha, col
        return None

    def search(rows):
        if not _scan_all(rows, rel_cols):
            return
        slot = first_undefined(rows)
        if slot is None:
            found.append(tuple(tuple(x + 1 for x in row) for row in rows))
            return
        alpha, col = slot
        candidates = [beta for beta in range(len(rows)) if rows[beta][col ^ 1] is None]
        if len(rows) < max_index:
            candidates.append(len(rows))
        for beta in candidates:
            branch = [row[:] for row in rows]
            if beta == len(rows):
                branch.append([None] * ncols)
            branch[alpha][col] = beta
            branch[beta][col ^ 1] = alpha
            search(branch)

    search([[None] * ncols])

    records = []
    seen = set()
    for rows in sorted(found, key=lambda rs: (len(rs), tuple(x for row in rs for x in row))):
        if rows in seen:
            continue
        seen.add(rows)
        table = CosetTable(P.n_generators, rows, complete=True)
        gens = tuple(w for _, w in schreier_generators(table))
        table = CosetTable(P.n_generators, rows, complete=True, subgroup_words=gens)
        records.append(
            SubgroupRecord(
                table=table,
                index=len(rows),
                normal=is_normal(table),
                schreier_generators=gens,
            )
        )
    return records


def low_index_normal(P: Presentation, max_index: int) -> list[SubgroupRecord]:
    """The normal subgroups among low_index_subgroups, same order."""
    return [rec for rec in low_index_subgroups(P, max_index) if rec.normal]
