"""
Exporting a Tanner graph
========================

Left vertices become variable nodes and right vertices check nodes, so
Lambda(k, q) is the parity-check matrix of a regular LDPC code whose girth
we already know.
"""

import io

import numpy as np

from girthlab import make_graph, read_alist, write_alist

g = make_graph(3, 4)
buf = io.StringIO()
write_alist(g, buf)
print("".join(buf.getvalue().splitlines(keepends=True)[:6]), "...")

buf.seek(0)
n, m, cols, rows = read_alist(buf)
H = np.zeros((m, n), dtype=np.uint8)
for j, entries in enumerate(cols):
    H[entries, j] = 1
col_w = sorted({int(w) for w in H.sum(axis=0)})
row_w = sorted({int(w) for w in H.sum(axis=1)})
print("H is", H.shape, "with column weights", col_w, "and row weights", row_w)

# girth 8 means no two columns share more than one check
overlap = H.T.astype(int) @ H.astype(int)
np.fill_diagonal(overlap, 0)
print("max column overlap:", overlap.max())
