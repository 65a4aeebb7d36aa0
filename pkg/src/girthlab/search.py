"""
Brute-force girth and cycle enumeration on Lambda(k, q).

Lambda(k, q) is edge-transitive, so everything here is rooted at a single
*anchor* edge, the one joining the all-zero left and right vertices:

* :func:`girth` is a breadth-first search from the all-zero right vertex
  with the anchor edge deleted.
* :func:`enumerate_cycles_through_anchor` lists every cycle of a given
  length through the anchor edge, by depth-first search over colors or by
  joining half-walks on their middle vertex.
* :func:`count_girth_cycles_total` scales the anchored count up to the
  whole graph.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BadShape, NonIntegralCount, NotAnEdge, ResourceLimit
from .graph import LEFT, RIGHT, GraphSpec, Vertex
from .walks import CycleType, walk_from_type

__all__ = [
    "CycleRecord",
    "SearchParams",
    "GirthResult",
    "is_circuit_type",
    "is_cycle_type",
    "girth",
    "enumerate_cycles_through_anchor",
    "enumerate_cycles_through_edge",
    "cycles_through_edge",
    "count_girth_cycles_total",
    "enumerate_all_cycles",
    "canonical_key",
    "default_max_length",
]

MAX_BFS_VERTICES = 1 << 30
MITM_THRESHOLD = 10**7


def default_max_length(g: GraphSpec) -> int:
    return 2 * g.k + 10


@dataclass(frozen=True)
class SearchParams:
    """Knobs for cycle enumeration.

    ``use_meet_in_middle=None`` picks the algorithm automatically: the
    half-walk join is used once ``(q-1)**(length-3)`` exceeds ``10**7``.
    """

    max_length: Optional[int] = None
    use_meet_in_middle: Optional[bool] = None
    worker_count: int = 1
    max_half_walks: int = 5_000_000

    def __post_init__(self):
        if self.max_length is not None and (self.max_length < 4 or self.max_length % 2):
            raise ValueError(f"max_length must be even and >= 4, got {self.max_length}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")


@dataclass(frozen=True)
class GirthResult:
    """Either the exact girth, or a lower bound when the search gave up."""

    value: int
    exact: bool

    def __str__(self):
        return str(self.value) if self.exact else f">{self.value}"

    @classmethod
    def Exact(cls, n: int) -> "GirthResult":
        return cls(n, True)

    @classmethod
    def GreaterThan(cls, n: int) -> "GirthResult":
        return cls(n, False)


@dataclass(frozen=True)
class CycleRecord:
    """A cycle, listed ``L1, R1, L2, R2, ..., Li, Ri`` from its root edge."""

    cycle_type: CycleType
    vertices: Tuple[Vertex, ...]
    canonical_key: bytes

    @property
    def length(self) -> int:
        return len(self.vertices)


def _sides(n: int):
    return [LEFT if pos % 2 == 0 else RIGHT for pos in range(n)]


def canonical_key(g: GraphSpec, vertices: Sequence[Vertex]) -> bytes:
    """Smallest rotation, over both directions, of the encoded vertex sequence.

    Vertices are encoded as ``2 * index + side`` and packed as 8-byte
    big-endian integers.  Two vertex lists describe the same cycle exactly
    when their keys are equal.
    """
    codes = [2 * g.encode(v) + side for v, side in zip(vertices, _sides(len(vertices)))]
    n = len(codes)
    rev = codes[::-1]
    best = min(
        min(tuple(codes[s:] + codes[:s]) for s in range(n)),
        min(tuple(rev[s:] + rev[:s]) for s in range(n)),
    )
    return b"".join(c.to_bytes(8, "big") for c in best)


def _type_of(g: GraphSpec, lefts, rights) -> CycleType:
    f = g.field
    i = len(lefts)
    t = []
    for s in range(i):
        nl = lefts[(s + 1) % i]
        nr = rights[(s + 1) % i]
        t.append(f.sub(nl[0], lefts[s][0]))
        t.append(f.sub(nr[0], rights[s][0]))
    return tuple(t)


def _record(g: GraphSpec, lefts, rights) -> CycleRecord:
    verts = []
    for l, r in zip(lefts, rights):
        verts.append(l)
        verts.append(r)
    return CycleRecord(_type_of(g, lefts, rights), tuple(verts), canonical_key(g, verts))


# -- circuit / cycle predicates ------------------------------------------


def is_circuit_type(g: GraphSpec, t: Sequence[int]) -> bool:
    """Whether the walk of type ``t`` is a backtrackless circuit of length ``len(t)``.

    The walk must come back to the all-zero left vertex after ``len(t)``
    steps and then continue onto the all-zero right vertex (so the type
    repeats), and at the seam neither the last left nor the last right
    vertex may coincide with the all-zero one.
    """
    t = tuple(t)
    if len(t) < 4:
        return False
    w = walk_from_type(g, t)
    i = len(t) // 2
    zero = g.zero
    return (
        w.left_vertices[i] == zero
        and w.right_vertices[i] == zero
        and w.left_vertices[i - 1] != zero
        and w.right_vertices[i - 1] != zero
    )


def is_cycle_type(g: GraphSpec, t: Sequence[int]) -> bool:
    """:func:`is_circuit_type` plus an explicit check that all vertices differ."""
    if not is_circuit_type(g, t):
        return False
    w = walk_from_type(g, t)
    i = len(t) // 2
    lefts, rights = w.left_vertices[:i], w.right_vertices[:i]
    return len(set(lefts)) == i and len(set(rights)) == i


# -- girth -----------------------------------------------------------------


def girth(
    g: GraphSpec, max_length: Optional[int] = None, max_vertices: int = MAX_BFS_VERTICES
) -> GirthResult:
    """Length of a shortest cycle through the anchor edge, i.e. the girth.

    Runs a level-synchronous BFS from the all-zero right vertex with the
    anchor edge removed; the girth is one more than the distance reached
    when the all-zero left vertex first appears.  Returns
    ``GirthResult.GreaterThan(max_length)`` if no cycle of length at most
    ``max_length`` exists.

    Raises
    ------
    BadShape
        If ``max_length`` is odd or below 4.
    ResourceLimit
        If ``q**k`` exceeds ``max_vertices``.

    Examples
    --------
    >>> from girthlab.graph import make_graph
    >>> str(girth(make_graph(3, 3)))
    '8'
    """
    if max_length is None:
        max_length = default_max_length(g)
    _check_length(max_length)
    n = g.side_size
    if n > max_vertices:
        raise ResourceLimit(f"{g} has {n} vertices per side, limit is {max_vertices}")
    q = g.q
    seen = {LEFT: np.zeros(n, dtype=bool), RIGHT: np.zeros(n, dtype=bool)}
    seen[RIGHT][0] = True
    root = np.zeros(1, dtype=np.int64)
    frontier = np.unique(
        np.concatenate([g.left_neighbor_indices(root, c) for c in range(1, q)])
    )
    seen[LEFT][frontier] = True
    side, dist = LEFT, 1
    while frontier.size:
        if dist + 1 > max_length - 1:
            break
        if side == LEFT:
            nxt = np.concatenate([g.right_neighbor_indices(frontier, c) for c in range(q)])
            side = RIGHT
        else:
            nxt = np.concatenate([g.left_neighbor_indices(frontier, c) for c in range(q)])
            if (nxt == 0).any():
                return GirthResult.Exact(dist + 2)
            side = LEFT
        nxt = np.unique(nxt)
        nxt = nxt[~seen[side][nxt]]
        seen[side][nxt] = True
        frontier = nxt
        dist += 1
    return GirthResult.GreaterThan(max_length)


# -- depth-first enumeration ----------------------------------------------


def _dfs_unit(args):
    g, l1, r1, i, x2, y2 = args
    out: List[CycleRecord] = []
    q = g.q
    left_nb, right_nb, adjacent = g.left_neighbor, g.right_neighbor, g.is_adjacent

    l2 = left_nb(r1, x2)
    if l2 == l1:
        return out
    r2 = right_nb(l2, y2)
    if r2 == r1:
        return out
    lefts, rights = [l1, l2], [r1, r2]
    lset, rset = {l1, l2}, {r1, r2}

    def close():
        if adjacent(l1, rights[-1]):
            out.append(_record(g, lefts, rights))

    def extend():
        r = rights[-1]
        xprev = lefts[-1][0]
        yprev = r[0]
        last = len(lefts) + 1 == i
        for x in range(q):
            if x == xprev:
                continue
            l = left_nb(r, x)
            if l in lset:
                continue
            lefts.append(l)
            lset.add(l)
            for y in range(q):
                if y == yprev:
                    continue
                rr = right_nb(l, y)
                if rr in rset:
                    continue
                rights.append(rr)
                if last:
                    close()
                else:
                    rset.add(rr)
                    extend()
                    rset.discard(rr)
                rights.pop()
            lset.discard(l)
            lefts.pop()

    if i == 2:
        close()
    else:
        extend()
    return out


def _dfs(g: GraphSpec, l1, r1, i: int, workers: int) -> List[CycleRecord]:
    q = g.q
    units = [
        (g, l1, r1, i, x2, y2)
        for x2 in range(q)
        if x2 != l1[0]
        for y2 in range(q)
        if y2 != r1[0]
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_dfs_unit, units, chunksize=max(1, len(units) // (4 * workers))))
    else:
        chunks = [_dfs_unit(u) for u in units]
    out = [rec for chunk in chunks for rec in chunk]
    out.sort(key=lambda rec: rec.cycle_type)
    return out


# -- meet in the middle ---------------------------------------------------


def _half_walks(g: GraphSpec, start: Vertex, first: List[Vertex], steps: int, limit: int):
    """Simple backtrackless paths ``start, first[j], ...`` with ``steps`` edges."""
    paths = [(start, v) for v in first]
    side = RIGHT  # side of the last vertex
    q = g.q
    for _ in range(steps - 1):
        nxt = []
        nb = g.left_neighbor if side == RIGHT else g.right_neighbor
        for path in paths:
            last, prev = path[-1], path[-2]
            for c in range(q):
                if c == prev[0]:
                    continue
                v = nb(last, c)
                # vertices on v's side sit at path[-2], path[-4], ...
                if v in path[-2::-2]:
                    continue
                nxt.append(path + (v,))
        paths = nxt
        if len(paths) > limit:
            raise ResourceLimit(f"{len(paths)} half-walks exceed the limit {limit}")
        side = LEFT if side == RIGHT else RIGHT
    return paths


def _mitm(g: GraphSpec, l1, r1, i: int, limit: int) -> List[CycleRecord]:
    q = g.q
    # cycle v_0 = l1, v_1 = r1, ..., v_{2i-1}; split at v_i
    forward = _half_walks(g, l1, [r1], i, limit)
    back_first = [g.right_neighbor(l1, c) for c in range(q) if c != r1[0]]
    backward = _half_walks(g, l1, back_first, i, limit)
    by_middle: Dict[Vertex, List[tuple]] = {}
    for path in backward:
        by_middle.setdefault(path[-1], []).append(path)
    out = []
    for fw in forward:
        for bw in by_middle.get(fw[-1], ()):
            if fw[-2] == bw[-2]:
                continue
            cyc = fw + bw[-2:0:-1]
            # left and right vertices can be equal as tuples; compare per side
            if len(set(cyc[0::2])) != i or len(set(cyc[1::2])) != i:
                continue
            out.append(_record(g, cyc[0::2], cyc[1::2]))
    out.sort(key=lambda rec: rec.cycle_type)
    return out


def _check_length(length: int):
    if length < 4 or length % 2:
        raise BadShape(f"cycle length must be even and >= 4, got {length}")


def _use_mitm(g: GraphSpec, length: int, params: SearchParams) -> bool:
    if params.use_meet_in_middle is not None:
        return params.use_meet_in_middle
    return (g.q - 1) ** (length - 3) > MITM_THRESHOLD


def enumerate_cycles_through_edge(
    g: GraphSpec, l: Vertex, r: Vertex, length: int, params: Optional[SearchParams] = None
) -> List[CycleRecord]:
    """All cycles of ``length`` containing the edge ``{l, r}``.

    Each cycle is reported once, traversed as ``l, r, ...``; its
    ``cycle_type`` holds the successive color differences along that
    traversal.
    """
    params = params or SearchParams()
    _check_length(length)
    if not g.is_adjacent(l, r):
        raise NotAnEdge(f"{l} and {r} are not adjacent in {g}")
    l, r = tuple(l), tuple(r)
    i = length // 2
    if _use_mitm(g, length, params):
        return _mitm(g, l, r, i, params.max_half_walks)
    return _dfs(g, l, r, i, params.worker_count)


def enumerate_cycles_through_anchor(
    g: GraphSpec, length: int, params: Optional[SearchParams] = None
) -> List[CycleRecord]:
    """Every cycle of the given length through the all-zero edge.

    The records come out in a deterministic order.  Their ``cycle_type``
    values are exactly the types accepted by :func:`is_cycle_type`.
    """
    return enumerate_cycles_through_edge(g, g.zero, g.zero, length, params)


def cycles_through_edge(
    g: GraphSpec, l: Vertex, r: Vertex, length: int, params: Optional[SearchParams] = None
) -> int:
    return len(enumerate_cycles_through_edge(g, l, r, length, params))


def count_girth_cycles_total(
    g: GraphSpec, params: Optional[SearchParams] = None
) -> int:
    """Number of girth cycles in the whole graph.

    Every edge lies on the same number ``N`` of girth cycles and each such
    cycle has ``girth`` edges, so the total is ``N * q**(k+1) / girth``.

    Raises
    ------
    NonIntegralCount
        If the division is not exact, which would contradict edge-transitivity.
    ResourceLimit
        If the girth is not found within ``params.max_length``.
    """
    params = params or SearchParams()
    gr = girth(g, params.max_length)
    if not gr.exact:
        raise ResourceLimit(f"girth of {g} exceeds {gr.value}")
    per_edge = len(enumerate_cycles_through_anchor(g, gr.value, params))
    edges = g.counts()[2]
    total, rem = divmod(per_edge * edges, gr.value)
    if rem:
        raise NonIntegralCount(
            f"{per_edge} cycles per edge * {edges} edges is not divisible by {gr.value}"
        )
    return total


def enumerate_all_cycles(
    g: GraphSpec, length: int, params: Optional[SearchParams] = None, max_edges: int = 10**5
) -> List[CycleRecord]:
    """All cycles of ``length`` in the whole graph, deduplicated by canonical key.

    Intended for small graphs only; this is a brute-force check that does
    not rely on edge-transitivity.
    """
    edges = g.counts()[2]
    if edges > max_edges:
        raise ResourceLimit(f"{g} has {edges} edges, limit is {max_edges}")
    seen: Dict[bytes, CycleRecord] = {}
    for idx in range(g.side_size):
        l = g.decode_left(idx)
        for c in range(g.q):
            r = g.right_neighbor(l, c)
            for rec in enumerate_cycles_through_edge(g, l, r, length, params):
                seen.setdefault(rec.canonical_key, rec)
    return [seen[key] for key in sorted(seen)]
