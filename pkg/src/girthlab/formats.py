"""Tanner-graph export: MacKay ``alist`` and plain edge lists.

Left vertices are the columns (variable nodes) and right vertices the rows
(check nodes); both are numbered by their encoded index.
"""

from __future__ import annotations

from typing import Iterable, List, Set, TextIO, Tuple

import numpy as np

from .errors import ResourceLimit
from .graph import GraphSpec

__all__ = [
    "MAX_EXPORT_VERTICES",
    "edge_array",
    "write_alist",
    "read_alist",
    "alist_edges",
    "write_edgelist",
    "read_edgelist",
]

MAX_EXPORT_VERTICES = 10**6


def edge_array(g: GraphSpec, max_vertices: int = MAX_EXPORT_VERTICES) -> np.ndarray:
    """All edges as an ``(q^(k+1), 2)`` array of ``(left, right)`` indices,
    sorted by left index then right index."""
    n = g.side_size
    if n > max_vertices:
        raise ResourceLimit(f"{g} has {n} vertices per side, export limit is {max_vertices}")
    table = g.adjacency_table()
    left = np.repeat(np.arange(n, dtype=np.int64), g.q)
    right = table.reshape(-1)
    order = np.lexsort((right, left))
    return np.stack([left[order], right[order]], axis=1)


def _line(values: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in values) + "\n"


def write_alist(g: GraphSpec, fh: TextIO, max_vertices: int = MAX_EXPORT_VERTICES) -> None:
    """Write the graph as the parity-check matrix of an LDPC code in alist form."""
    edges = edge_array(g, max_vertices)
    n = m = g.side_size
    q = g.q
    fh.write(_line((n, m)))
    fh.write(_line((q, q)))
    fh.write(_line([q] * n))
    fh.write(_line([q] * m))
    cols = edges[:, 1].reshape(n, q) + 1
    for row in cols:
        fh.write(_line(row))
    by_right = edges[np.lexsort((edges[:, 0], edges[:, 1]))]
    rows = by_right[:, 0].reshape(m, q) + 1
    for row in rows:
        fh.write(_line(row))


def read_alist(fh: TextIO):
    """Parse an alist file into ``(n, m, column_lists, row_lists)``.

    Index lists are 0-based; zero padding entries are dropped.
    """
    lines = [ln.split() for ln in fh.read().splitlines() if ln.strip()]
    n, m = map(int, lines[0])
    col_deg = list(map(int, lines[2]))
    row_deg = list(map(int, lines[3]))
    if len(col_deg) != n or len(row_deg) != m:
        raise ValueError("degree lists do not match the header")
    if len(lines) != 4 + n + m:
        raise ValueError(f"expected {4 + n + m} lines, got {len(lines)}")
    cols = [[int(x) - 1 for x in ln if int(x) > 0] for ln in lines[4 : 4 + n]]
    rows = [[int(x) - 1 for x in ln if int(x) > 0] for ln in lines[4 + n :]]
    for j, (deg, entries) in enumerate(zip(col_deg, cols)):
        if len(entries) != deg:
            raise ValueError(f"column {j} lists {len(entries)} entries, degree says {deg}")
    return n, m, cols, rows


def alist_edges(cols: List[List[int]], rows: List[List[int]]) -> Set[Tuple[int, int]]:
    """Edge set of a parsed alist; raises if the two views disagree."""
    from_cols = {(j, i) for j, entries in enumerate(cols) for i in entries}
    from_rows = {(j, i) for i, entries in enumerate(rows) for j in entries}
    if from_cols != from_rows:
        raise ValueError("column and row lists describe different matrices")
    return from_cols


def write_edgelist(g: GraphSpec, fh: TextIO, max_vertices: int = MAX_EXPORT_VERTICES) -> None:
    """One ``left_index right_index`` pair per line."""
    for left, right in edge_array(g, max_vertices):
        fh.write(f"{left} {right}\n")


def read_edgelist(fh: TextIO) -> Set[Tuple[int, int]]:
    return {tuple(map(int, ln.split())) for ln in fh if ln.strip()}
