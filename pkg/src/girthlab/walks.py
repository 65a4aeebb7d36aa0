"""
Backtrackless walks leaving the all-zero edge, and their closed forms.

A walk is described by its *type* ``(u1, v1, u2, v2, ..., ui, vi)``: the
successive differences of the left colors ``x`` and right colors ``y``::

    u_s = x_{s+1} - x_s,    v_s = y_{s+1} - y_s,    x_1 = y_1 = 0.

Types are stored 0-indexed, so ``t[2*s - 2]`` is ``u_s`` and ``t[2*s - 1]``
is ``v_s``.

``rho(f, s, seq)`` is the sum, over every way of deleting ``s`` disjoint
pairs of consecutive entries of ``seq``, of the product of the entries
left over.  The left vertices of a walk are polynomial in the type through
``rho``; see :func:`closed_form_left`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import BadShape, OutOfRange, ZeroDifference
from .field import FieldSpec
from .graph import GraphSpec, Vertex

__all__ = [
    "Walk",
    "check_type",
    "rho",
    "rho_table",
    "rho_sum_form",
    "walk_from_type",
    "closed_form_left",
    "closed_form_vertices",
    "closed_form_left_alt",
    "partial_sums",
]

CycleType = Tuple[int, ...]


def check_type(t: Sequence[int], f: FieldSpec) -> CycleType:
    """Validate a cycle type: even length, every entry a nonzero element."""
    t = tuple(int(e) for e in t)
    if len(t) % 2:
        raise BadShape(f"a type has even length, got {len(t)}")
    for pos, e in enumerate(t):
        if not 0 <= e < f.q:
            raise ValueError(f"entry {e} at position {pos} is not in GF({f.q})")
        if e == 0:
            raise ZeroDifference(f"entry at position {pos} is zero")
    return t


def partial_sums(f: FieldSpec, t: Sequence[int]):
    """Colors ``(x, y)`` of the walk of type ``t``, as 1-indexed lists.

    ``x[s]`` and ``y[s]`` are the colors of the ``s``-th left and right
    vertex; index 0 is unused.  Both lists run up to ``len(t)//2 + 1``.
    """
    i = len(t) // 2
    x = [0, 0]
    y = [0, 0]
    for s in range(1, i + 1):
        x.append(f.add(x[s], t[2 * s - 2]))
        y.append(f.add(y[s], t[2 * s - 1]))
    return x, y


# -- the rho calculus --------------------------------------------------


def rho_table(f: FieldSpec, seq: Sequence[int], smax: int) -> List[List[int]]:
    """``T[n][s] = rho_s(seq[:n])`` for ``0 <= n <= len(seq)``, ``0 <= s <= smax``.

    Filled with the recurrence
    ``rho_s(w1..wn) = rho_{s-1}(w1..w_{n-2}) + wn * rho_s(w1..w_{n-1})``.
    """
    n = len(seq)
    T = [[0] * (smax + 1) for _ in range(n + 1)]
    T[0][0] = 1
    if n >= 1:
        T[1][0] = seq[0]
    add, mul = f.add, f.mul
    for m in range(2, n + 1):
        w = seq[m - 1]
        row, prev, prev2 = T[m], T[m - 1], T[m - 2]
        row[0] = mul(w, prev[0])
        for s in range(1, min(smax, m // 2) + 1):
            row[s] = add(prev2[s - 1], mul(w, prev[s]))
    return T


def rho(f: FieldSpec, s: int, seq: Sequence[int]) -> int:
    """rho_s of a sequence of field elements; 0 when ``s < 0`` or ``len < 2s``.

    Examples
    --------
    >>> from girthlab.field import make_field
    >>> f = make_field(5)
    >>> rho(f, 1, [1, 2, 3])   # 3 + 1
    4
    """
    n = len(seq)
    if s < 0 or n < 2 * s:
        return 0
    return rho_table(f, seq, s)[n][s]


def _chains_even(n: int, j: int, lo: int):
    # 0 <= s_1 < t_1 <= s_2 < t_2 <= ... <= s_j < t_j <= n, starting at s_1 >= lo
    if j == 0:
        yield ()
        return
    for s in range(lo, n):
        for t in range(s + 1, n + 1):
            for rest in _chains_even(n, j - 1, t):
                yield ((s, t),) + rest


def _chains_odd(n: int, j: int, lo: int):
    # t_k < ... pattern of the odd-length form:
    # lo <= s_0 < t_1 <= s_1 < t_2 <= ... <= s_{j-1} < t_j <= s_j <= n
    if j == 0:
        for s in range(lo, n + 1):
            yield (s,)
        return
    for s in range(lo, n):
        for t in range(s + 1, n + 1):
            for rest in _chains_odd(n, j - 1, t):
                yield (s, t) + rest


def rho_sum_form(f: FieldSpec, s: int, seq: Sequence[int]) -> int:
    """Evaluate rho_s by the explicit index-chain sums.

    With ``len(seq)`` equal to ``2n`` or ``2n+1`` and ``s = n - j``, this
    sums products over chains of odd/even positions instead of using the
    recurrence, which makes it an independent check on :func:`rho`.  It is
    exponential in ``j``; keep the inputs short.

    Raises
    ------
    BadShape
        If ``s`` is not ``n - j`` for some ``0 <= j <= n``.
    """
    length = len(seq)
    n = length // 2
    j = n - s
    if not 0 <= j <= n:
        raise BadShape(f"s={s} is not of the form n-j with n={n}, 0 <= j <= n")
    # w(i) is the 1-indexed entry omega_i
    w = lambda i: seq[i - 1]  # noqa: E731
    total = 0
    if length % 2 == 0:
        for chain in _chains_even(n, j, 0):
            term = 1
            for sk, tk in chain:
                term = f.mul(term, f.mul(w(2 * sk + 1), w(2 * tk)))
            total = f.add(total, term)
    else:
        for chain in _chains_odd(n, j, 0):
            term = w(2 * chain[0] + 1)
            for pos in range(1, len(chain), 2):
                tk, sk = chain[pos], chain[pos + 1]
                term = f.mul(term, f.mul(w(2 * tk), w(2 * sk + 1)))
            total = f.add(total, term)
    return total


# -- walks -------------------------------------------------------------


@dataclass(frozen=True)
class Walk:
    """A backtrackless walk from the all-zero left vertex through the
    all-zero right vertex.

    For a type of length ``2i`` the walk holds ``i + 1`` vertices on each
    side; the last pair shows whether the walk closed up.
    """

    cycle_type: CycleType
    left_vertices: Tuple[Vertex, ...]
    right_vertices: Tuple[Vertex, ...]

    @property
    def x_colors(self) -> Tuple[int, ...]:
        return tuple(v[0] for v in self.left_vertices)

    @property
    def y_colors(self) -> Tuple[int, ...]:
        return tuple(v[0] for v in self.right_vertices)

    def vertices(self):
        """Alternating vertex sequence ``L1, R1, L2, R2, ...``."""
        out = []
        for l, r in zip(self.left_vertices, self.right_vertices):
            out.append(l)
            out.append(r)
        return out


def walk_from_type(g: GraphSpec, t: Sequence[int]) -> Walk:
    """Follow the walk of type ``t`` starting on the all-zero edge."""
    f = g.field
    t = check_type(t, f)
    l = r = g.zero
    lefts, rights = [l], [r]
    x = y = 0
    for s in range(len(t) // 2):
        x = f.add(x, t[2 * s])
        l = g.left_neighbor(r, x)
        y = f.add(y, t[2 * s + 1])
        r = g.right_neighbor(l, y)
        lefts.append(l)
        rights.append(r)
    return Walk(t, tuple(lefts), tuple(rights))


class _ClosedForm:
    """Prefix rho tables of a type, shared by all closed-form queries."""

    def __init__(self, f: FieldSpec, t: CycleType):
        self.f = f
        self.t = t
        smax = len(t) // 2 + 1
        # sequences starting at u1 and at v1
        self.A = rho_table(f, t, smax)
        self.B = rho_table(f, t[1:], smax)
        self.x, self.y = partial_sums(f, t)

    def _rA(self, s, n):
        # rho_s(t[:n])
        if s < 0 or n < 0 or n < 2 * s:
            return 0
        return self.A[n][s]

    def _rB(self, s, n):
        # rho_s(t[1:1+n])
        if s < 0 or n < 0 or n < 2 * s:
            return 0
        return self.B[n][s]

    def coord(self, i: int, slot: int) -> int:
        j, rem = divmod(slot, 4)
        f = self.f
        y = self.y[i + 1]
        l4j = self._rA(i - j - 1, 2 * i - 1)
        if rem == 0:
            return l4j
        l4j1 = self._rB(i - j - 2, 2 * i - 2)
        if rem == 1:
            return l4j1
        if rem == 2:
            return f.sub(f.mul(y, l4j), self._rA(i - j - 1, 2 * i))
        return f.sub(f.mul(y, l4j1), self._rB(i - j - 2, 2 * i - 1))

    def coord_alt(self, i: int, slot: int) -> int:
        # slots 4j+2, 4j+3 written with y_i in place of y_{i+1}, no v_i
        j, rem = divmod(slot, 4)
        f = self.f
        y = self.y[i]
        if rem == 2:
            return f.sub(f.mul(y, self.coord(i, 4 * j)), self._rA(i - j - 2, 2 * i - 2))
        if rem == 3:
            return f.sub(f.mul(y, self.coord(i, 4 * j + 1)), self._rB(i - j - 3, 2 * i - 3))
        return self.coord(i, slot)


def _checked(g: GraphSpec, t, i: int, slot: int) -> _ClosedForm:
    t = check_type(t, g.field)
    if not 1 <= i <= len(t) // 2:
        raise OutOfRange(f"i={i} outside 1..{len(t) // 2}")
    if not 0 <= slot <= g.k:
        raise OutOfRange(f"slot={slot} outside 0..{g.k}")
    return _ClosedForm(g.field, t)


def closed_form_left(g: GraphSpec, t: Sequence[int], i: int, slot: int) -> int:
    """Coordinate ``slot`` of the ``(i+1)``-th left vertex of the walk of type ``t``.

    Computed without walking, from::

        l_{4j}   = rho_{i-j-1}(u1, v1, ..., u_{i-1}, v_{i-1}, u_i)
        l_{4j+1} = rho_{i-j-2}(v1, u2, ..., v_{i-1}, u_i)
        l_{4j+2} = y_{i+1} l_{4j}   - rho_{i-j-1}(u1, v1, ..., u_i, v_i)
        l_{4j+3} = y_{i+1} l_{4j+1} - rho_{i-j-2}(v1, u2, ..., u_i, v_i)

    where ``y_{i+1} = v1 + ... + vi``.
    """
    return _checked(g, t, i, slot).coord(i, slot)


def closed_form_left_alt(g: GraphSpec, t: Sequence[int], i: int, slot: int) -> int:
    """Same as :func:`closed_form_left` but slots ``4j+2`` and ``4j+3`` use
    the forms that avoid ``v_i``::

        l_{4j+2} = y_i l_{4j}   - rho_{i-j-2}(u1, v1, ..., u_{i-1}, v_{i-1})
        l_{4j+3} = y_i l_{4j+1} - rho_{i-j-3}(v1, u2, ..., u_{i-1}, v_{i-1})
    """
    return _checked(g, t, i, slot).coord_alt(i, slot)


def closed_form_vertices(g: GraphSpec, t: Sequence[int], alt: bool = False) -> List[Vertex]:
    """All left vertices ``l^(2), ..., l^(i+1)`` of the walk, from closed forms."""
    t = check_type(t, g.field)
    cf = _ClosedForm(g.field, t)
    get = cf.coord_alt if alt else cf.coord
    return [
        tuple(get(i, slot) for slot in range(g.k + 1))
        for i in range(1, len(t) // 2 + 1)
    ]
