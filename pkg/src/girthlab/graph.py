"""
The bipartite graph Lambda(k, q), represented implicitly.

Left vertices are ``(k+1)``-tuples ``(l0, l1, ..., lk)`` with ``l1 == l2``;
right vertices are ``(r0, r1, ..., rk)`` with ``r1 == 0``.  A left and a
right vertex are adjacent iff for every ``2 <= i <= k``::

    l_i + r_i = r0 * l_{i-2}    if i % 4 in (2, 3)
    l_i + r_i = l0 * r_{i-2}    if i % 4 in (0, 1)

The first coordinate of a vertex is its *color*.  Every vertex has exactly
one neighbor of each color on the other side, so neighbors are computed on
demand and the graph is never stored.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import ArithmeticOverflow, IndexOutOfRange
from .field import FieldSpec, make_field

__all__ = ["GraphSpec", "make_graph", "LEFT", "RIGHT"]

LEFT = 0
RIGHT = 1

Vertex = Tuple[int, ...]


@dataclass(frozen=True)
class GraphSpec:
    """Lambda(k, q) over a given field.

    ``k = 2`` is allowed, but the ``k + 4`` girth bound only holds for
    ``k >= 3``.
    """

    k: int
    field: FieldSpec

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def zero(self) -> Vertex:
        return (0,) * (self.k + 1)

    def __str__(self):
        return f"Lambda({self.k},{self.q})"

    # -- vertex validity -------------------------------------------------

    def is_left(self, v) -> bool:
        return (
            len(v) == self.k + 1
            and all(0 <= c < self.q for c in v)
            and v[1] == v[2]
        )

    def is_right(self, v) -> bool:
        return len(v) == self.k + 1 and all(0 <= c < self.q for c in v) and v[1] == 0

    # -- adjacency -------------------------------------------------------

    def right_neighbor(self, l: Vertex, color: int) -> Vertex:
        """The unique right vertex of the given color adjacent to ``l``."""
        f = self.field
        mul, sub = f.mul, f.sub
        r = [0] * (self.k + 1)
        r[0] = color
        l0 = l[0]
        for i in range(2, self.k + 1):
            if i % 4 in (2, 3):
                r[i] = sub(mul(color, l[i - 2]), l[i])
            else:
                r[i] = sub(mul(l0, r[i - 2]), l[i])
        return tuple(r)

    def left_neighbor(self, r: Vertex, color: int) -> Vertex:
        """The unique left vertex of the given color adjacent to ``r``."""
        f = self.field
        mul, sub = f.mul, f.sub
        l = [0] * (self.k + 1)
        l[0] = color
        r0 = r[0]
        for i in range(2, self.k + 1):
            if i % 4 in (2, 3):
                l[i] = sub(mul(r0, l[i - 2]), r[i])
            else:
                l[i] = sub(mul(color, r[i - 2]), r[i])
            if i == 2:
                l[1] = l[2]
        return tuple(l)

    def is_adjacent(self, l: Vertex, r: Vertex) -> bool:
        f = self.field
        mul, add = f.mul, f.add
        l0, r0 = l[0], r[0]
        for i in range(2, self.k + 1):
            rhs = mul(r0, l[i - 2]) if i % 4 in (2, 3) else mul(l0, r[i - 2])
            if add(l[i], r[i]) != rhs:
                return False
        return True

    def right_neighbors(self, l: Vertex):
        return [self.right_neighbor(l, c) for c in range(self.q)]

    def left_neighbors(self, r: Vertex):
        return [self.left_neighbor(r, c) for c in range(self.q)]

    # -- sizes and indexing ----------------------------------------------

    def counts(self) -> Tuple[int, int, int]:
        """``(left_count, right_count, edge_count) = (q^k, q^k, q^(k+1))``."""
        n = self.q**self.k
        edges = n * self.q
        if edges > sys.maxsize:
            raise ArithmeticOverflow(f"{self} has {edges} edges, beyond the count range")
        return n, n, edges

    @property
    def side_size(self) -> int:
        return self.q**self.k

    def encode(self, v: Vertex) -> int:
        """Index in ``[0, q^k)`` from the free coordinates ``(v0, v2, ..., vk)``.

        ``v0`` is the least significant base-q digit.  The same map is used
        for both sides; the side must be known to decode.
        """
        q = self.q
        idx = 0
        for c in reversed(v[2:]):
            idx = idx * q + c
        return idx * q + v[0]

    def _digits(self, idx: int):
        n = self.side_size
        if not 0 <= idx < n:
            raise IndexOutOfRange(f"index {idx} outside [0, {n})")
        q = self.q
        out = []
        for _ in range(self.k):
            idx, d = divmod(idx, q)
            out.append(d)
        return out

    def decode_left(self, idx: int) -> Vertex:
        d = self._digits(idx)
        return (d[0], d[1]) + tuple(d[1:])

    def decode_right(self, idx: int) -> Vertex:
        d = self._digits(idx)
        return (d[0], 0) + tuple(d[1:])

    def decode(self, idx: int, side: int) -> Vertex:
        return self.decode_left(idx) if side == LEFT else self.decode_right(idx)

    # -- vectorised neighbor maps over index arrays ----------------------

    def _coords(self, idx: np.ndarray, side: int) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        q, k = self.q, self.k
        out = np.zeros((idx.shape[0], k + 1), dtype=np.int64)
        rest = idx.copy()
        out[:, 0] = rest % q
        rest //= q
        for j in range(2, k + 1):
            out[:, j] = rest % q
            rest //= q
        if side == LEFT:
            out[:, 1] = out[:, 2]
        return out

    def _encode_arr(self, coords: np.ndarray) -> np.ndarray:
        q = self.q
        idx = np.zeros(coords.shape[0], dtype=np.int64)
        for j in range(self.k, 1, -1):
            idx = idx * q + coords[:, j]
        return idx * q + coords[:, 0]

    def right_neighbor_indices(self, left_idx: np.ndarray, color: int) -> np.ndarray:
        """Vectorised :meth:`right_neighbor` on encoded left indices."""
        f = self.field
        l = self._coords(left_idx, LEFT)
        r = np.zeros_like(l)
        r[:, 0] = color
        for i in range(2, self.k + 1):
            if i % 4 in (2, 3):
                r[:, i] = f.vsub(f.vmul(color, l[:, i - 2]), l[:, i])
            else:
                r[:, i] = f.vsub(f.vmul(l[:, 0], r[:, i - 2]), l[:, i])
        return self._encode_arr(r)

    def left_neighbor_indices(self, right_idx: np.ndarray, color: int) -> np.ndarray:
        """Vectorised :meth:`left_neighbor` on encoded right indices."""
        f = self.field
        r = self._coords(right_idx, RIGHT)
        l = np.zeros_like(r)
        l[:, 0] = color
        for i in range(2, self.k + 1):
            if i % 4 in (2, 3):
                l[:, i] = f.vsub(f.vmul(r[:, 0], l[:, i - 2]), r[:, i])
            else:
                l[:, i] = f.vsub(f.vmul(color, r[:, i - 2]), r[:, i])
            if i == 2:
                l[:, 1] = l[:, 2]
        return self._encode_arr(l)

    def adjacency_table(self) -> np.ndarray:
        """Array ``A`` of shape ``(q^k, q)`` with ``A[i, c]`` the index of the
        right neighbor of color ``c`` of left vertex ``i``."""
        n = self.side_size
        idx = np.arange(n, dtype=np.int64)
        return np.stack([self.right_neighbor_indices(idx, c) for c in range(self.q)], axis=1)


def make_graph(k: int, q: int) -> GraphSpec:
    return GraphSpec(k=k, field=make_field(q))
