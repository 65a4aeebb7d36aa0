"""
Closed-form families of girth-cycle types.

Each family is a parametrized set of types ``(u1, v1, ..., ui, vi)``.  The
generators range the parameters over the nonzero field elements, apply the
family's side conditions, and return the resulting set of types.

==========  ======  ==================================================
tag         length  graph / field
==========  ======  ==================================================
T2a         8       Lambda(3, q), the ``v1 + v2 = 0`` cycles
T2b         8       Lambda(4, q), characteristic 2 only
T2c         8       Lambda(3, q), the ``v1 + v2 != 0`` cycles
T2d         8       Lambda(4, q), T2c restricted to ``a + c = b``
L1 .. L5    10      Lambda(5, q), the five cases of the 10-cycle split
L6_80..84   12      Lambda(3, 3)
T4_85..91   12      Lambda(k, 3) for 4 <= k <= 8
==========  ======  ==================================================
"""

from __future__ import annotations

import enum
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, Sequence, Set, Tuple

from .errors import Uncharacterized, WrongDimension, WrongField, WrongLength
from .field import FieldSpec
from .graph import GraphSpec
from .walks import CycleType, partial_sums

__all__ = [
    "Family",
    "family_types",
    "f_bcd",
    "theorem3_types",
    "closure_conditions_k5",
    "delta4",
    "lambda3_system_check",
    "predicted_girth_cycle_types",
    "predicted_girth",
]


class Family(str, enum.Enum):
    T2a = "T2a"
    T2b = "T2b"
    T2c = "T2c"
    T2d = "T2d"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"
    L6_80 = "L6_80"
    L6_81 = "L6_81"
    L6_82 = "L6_82"
    L6_83 = "L6_83"
    L6_84 = "L6_84"
    T4_85 = "T4_85"
    T4_86 = "T4_86"
    T4_87 = "T4_87"
    T4_88 = "T4_88"
    T4_89 = "T4_89"
    T4_90 = "T4_90"
    T4_91 = "T4_91"


def _interleave(u: Sequence[int], v: Sequence[int]) -> CycleType:
    out = []
    for a, b in zip(u, v):
        out.append(a)
        out.append(b)
    return tuple(out)


class _Ops:
    """Short names for field arithmetic inside the parametrizations."""

    def __init__(self, f: FieldSpec):
        self.f = f
        self.add = lambda *xs: f.sum(xs)
        self.mul = lambda *xs: f.prod(xs)
        self.neg = f.neg
        self.sub = f.sub
        self.two = f.from_int(2)

    def nonzero(self):
        return self.f.nonzero_elements()


def _t2a(o: _Ops):
    n = o.neg
    for r, s, t in product(o.nonzero(), repeat=3):
        yield (r, s, t, n(s), n(r), s, n(t), n(s))


def _t2c(o: _Ops, restrict_b=False):
    sub, mul = o.sub, o.mul
    for a, b, c in product(o.nonzero(), repeat=3):
        if len({a, b, c}) < 3:
            continue
        if restrict_b and o.add(a, c) != b:
            continue
        v = (a, sub(b, a), sub(c, b), o.neg(c))
        for t in o.nonzero():
            u2 = mul(t, b, c, sub(c, b))
            u3 = mul(t, a, c, sub(a, c))
            u4 = mul(t, a, b, sub(b, a))
            u1 = mul(t, sub(c, b), sub(a, c), sub(b, a))
            yield _interleave((u1, u2, u3, u4), v)


def _l1(o: _Ops):
    add, mul, n, two = o.add, o.mul, o.neg, o.two
    for c, d, r in product(o.nonzero(), repeat=3):
        if c in (n(d), n(mul(two, d))):
            continue
        c2d = add(c, mul(two, d))
        v = (add(c, d), n(c), c, d, n(c2d))
        u = (mul(c, r), mul(d, r), n(mul(c2d, r)), mul(add(c, d), r), n(mul(c, r)))
        yield _interleave(u, v)


def _l2(o: _Ops):
    add, mul, n, two = o.add, o.mul, o.neg, o.two
    for b, c, r in product(o.nonzero(), repeat=3):
        if c in (n(b), n(mul(two, b))):
            continue
        b2c = add(mul(two, b), c)
        v = (n(b2c), b, c, n(add(b, c)), b2c)
        u = (mul(c, r), n(mul(add(b, c), r)), mul(b2c, r), n(mul(b2c, r)), mul(b, r))
        yield _interleave(u, v)


def _l3(o: _Ops):
    add, mul, n, two = o.add, o.mul, o.neg, o.two
    for b, c, r in product(o.nonzero(), repeat=3):
        if b in (n(c), n(mul(two, c))):
            continue
        b2c = add(b, mul(two, c))
        v = (n(b), b, c, n(b2c), add(b, c))
        u = (mul(c, r), n(mul(b2c, r)), mul(add(b, c), r), n(mul(b, r)), mul(b, r))
        yield _interleave(u, v)


def _l4(o: _Ops):
    add, mul, n, two = o.add, o.mul, o.neg, o.two
    for b, c, r in product(o.nonzero(), repeat=3):
        if c in (n(b), n(mul(two, b))):
            continue
        b2c = add(mul(two, b), c)
        v = (n(b2c), b, c, n(c), add(b, c))
        u = (mul(c, r), n(mul(c, r)), mul(add(b, c), r), n(mul(b2c, r)), mul(b, r))
        yield _interleave(u, v)


def _roots(f: FieldSpec, b, c, d):
    return [x for x in f.nonzero_elements() if f_bcd(f, b, c, d, x) == 0]


def _l5(o: _Ops):
    f, add, mul, n, two = o.f, o.add, o.mul, o.neg, o.two
    for b, c, d in product(o.nonzero(), repeat=3):
        if mul(add(b, c), add(c, d), add(b, c, d)) == 0:
            continue
        banned = {n(b), n(add(mul(two, b), mul(two, c), d))}
        for a in _roots(f, b, c, d):
            if a in banned:
                continue
            s = add(a, b, c, d)
            v = (a, b, c, d, n(s))
            for r in o.nonzero():
                u = (mul(c, r), mul(d, r), n(mul(s, r)), mul(a, r), mul(b, r))
                yield _interleave(u, v)


def _rep(block, times=3):
    return tuple(block) * times


def _l6(o: _Ops, form: int):
    n = o.neg
    for a, b, c, r in product(o.nonzero(), repeat=4):
        if form == 80:
            yield _rep((a, r, b, n(r)))
        elif form == 81:
            yield (a, r, b, n(r), n(a), n(r), c, n(r), n(b), r, n(c), r)
        elif form == 82:
            yield (a, r, b, r, c, n(r), n(b), n(r), n(a), n(r), n(c), r)
        elif form == 83:
            yield (a, r, b, r, c, r, n(a), n(r), n(c), n(r), n(b), n(r))
        elif form == 84:
            yield (a, r, b, r, c, r, n(a), r, n(b), r, n(c), r)
        elif form == 85:
            yield (a, r, b, n(r), n(a), n(r), n(a), n(r), n(b), r, a, r)
        elif form == 86:
            yield (a, r, a, r, c, n(r), n(a), n(r), n(a), n(r), n(c), r)
        elif form == 87:
            yield (a, r, b, r, b, r, n(a), n(r), n(b), n(r), n(b), n(r))
        elif form == 88:
            yield _rep((a, r, n(a), r))


def _t4_89(o: _Ops):
    add, mul = o.add, o.mul
    for a, b, c, d in product(o.nonzero(), repeat=4):
        if mul(add(a, b), add(c, d)) == 0:
            yield _rep((a, c, b, d))


def _t4_90(o: _Ops):
    n = o.neg
    for a, b, c in product(o.nonzero(), repeat=3):
        yield _rep((a, c, b, n(c)))


def _t4_91(o: _Ops):
    n = o.neg
    for a, c in product(o.nonzero(), repeat=2):
        yield _rep((a, c, n(a), n(c)))


def _require_q3(f: FieldSpec, fam: Family):
    if f.q != 3:
        raise WrongField(f"{fam.value} is defined over GF(3) only, got GF({f.q})")


def family_types(g: GraphSpec, fam) -> FrozenSet[CycleType]:
    """The full set of types in family ``fam`` over the graph's field.

    Types with a zero entry are dropped, so the result always consists of
    valid cycle types.

    Raises
    ------
    WrongField
        For ``T2b`` outside characteristic 2, and for the length-12 forms
        outside GF(3).
    """
    fam = Family(fam)
    f = g.field
    o = _Ops(f)
    name = fam.value
    if fam is Family.T2a:
        gen = _t2a(o)
    elif fam is Family.T2b:
        if f.p != 2:
            raise WrongField(f"T2b requires characteristic 2, got {f.p}")
        gen = _t2a(o)
    elif fam is Family.T2c:
        gen = _t2c(o)
    elif fam is Family.T2d:
        gen = _t2c(o, restrict_b=True)
    elif fam in _TEN_CYCLE_CASES:
        gen = _TEN_CYCLE_CASES[fam](o)
    else:
        _require_q3(f, fam)
        form = int(name.split("_")[1])
        if form <= 88:
            gen = _l6(o, form)
        else:
            gen = {89: _t4_89, 90: _t4_90, 91: _t4_91}[form](o)
    return frozenset(t for t in gen if all(t))


_TEN_CYCLE_CASES: Dict[Family, Callable] = {
    Family.L1: _l1,
    Family.L2: _l2,
    Family.L3: _l3,
    Family.L4: _l4,
    Family.L5: _l5,
}


def f_bcd(f: FieldSpec, b: int, c: int, d: int, x: int) -> int:
    """``c x^2 + c (2b + c) x + b (c + d)(b + c + d)``."""
    o = _Ops(f)
    add, mul = o.add, o.mul
    return add(
        mul(c, x, x),
        mul(c, add(mul(o.two, b), c), x),
        mul(b, add(c, d), add(b, c, d)),
    )


def theorem3_types(g: GraphSpec) -> FrozenSet[CycleType]:
    """Every 10-cycle type of Lambda(5, q).

    For all nonzero ``b, c, d, r`` and every nonzero root ``a`` of
    :func:`f_bcd` with ``a + b + c + d != 0``::

        v = (a, b, c, d, -(a+b+c+d))
        u = (c, d, -(a+b+c+d), a, b) * r

    Roots are found by scanning the field.
    """
    if g.k != 5:
        raise WrongDimension(f"theorem3_types needs k = 5, got k = {g.k}")
    f = g.field
    o = _Ops(f)
    out = set()
    for b, c, d in product(f.nonzero_elements(), repeat=3):
        for a in _roots(f, b, c, d):
            s = o.add(a, b, c, d)
            if s == 0:
                continue
            v = (a, b, c, d, o.neg(s))
            for r in f.nonzero_elements():
                u = tuple(o.mul(e, r) for e in (c, d, o.neg(s), a, b))
                t = _interleave(u, v)
                if all(t):
                    out.add(t)
    return frozenset(out)


def _split(t: Sequence[int]):
    return t[0::2], t[1::2]


def closure_conditions_k5(g: GraphSpec, t: Sequence[int]) -> Tuple[int, ...]:
    """The six quantities that vanish exactly on 10-circuit types of Lambda(5, q).

    In order: ``sum v``, ``sum u``, ``sum_{k=2..5} y_k u_k``,
    ``sum_{k=2..5} y_k^2 u_k``, ``-sum_{k=1..4} x_{k+1}^2 v_k`` and
    ``-sum_{2<=r<=s<=4} y_r u_r v_s x_{s+1}``.
    """
    if g.k != 5:
        raise WrongDimension(f"needs k = 5, got k = {g.k}")
    if len(t) != 10:
        raise WrongLength(f"needs a type of length 10, got {len(t)}")
    f = g.field
    o = _Ops(f)
    add, mul = o.add, o.mul
    u, v = _split(t)
    x, y = partial_sums(f, t)
    # u[k-1] is u_k
    c17 = f.sum(v)
    c18 = f.sum(u)
    c19 = f.sum(mul(y[k], u[k - 1]) for k in range(2, 6))
    c20 = f.sum(mul(y[k], y[k], u[k - 1]) for k in range(2, 6))
    c21 = f.neg(f.sum(mul(x[k + 1], x[k + 1], v[k - 1]) for k in range(1, 5)))
    c22 = f.neg(
        f.sum(
            mul(y[r], u[r - 1], v[s - 1], x[s + 1])
            for r in range(2, 5)
            for s in range(r, 5)
        )
    )
    return (c17, c18, c19, c20, c21, c22)


def delta4(g: GraphSpec, t: Sequence[int]) -> int:
    """``x2^2 v1 + x3^2 v2 + x4^2 v3 + x5^2 v4 + x6^2 v5`` for a 12-type.

    A 12-cycle type of Lambda(3, 3) is also one of Lambda(4, 3) exactly when
    this vanishes.
    """
    if g.k < 4:
        raise WrongDimension(f"needs k >= 4, got k = {g.k}")
    if len(t) != 12:
        raise WrongLength(f"needs a type of length 12, got {len(t)}")
    f = g.field
    x, _ = partial_sums(f, t)
    v = t[1::2]
    return f.sum(f.prod((x[i + 1], x[i + 1], v[i - 1])) for i in range(1, 6))


def lambda3_system_check(g: GraphSpec, t: Sequence[int]) -> Tuple[int, int]:
    """Left-hand sides of the linear system cutting out 8-cycles of Lambda(3, q)::

        v1 u2 + (v1 + v2) u3 + (v1 + v2 + v3) u4
        v1^2 u2 + (v1 + v2)^2 u3 + (v1 + v2 + v3)^2 u4
    """
    if g.k != 3:
        raise WrongDimension(f"needs k = 3, got k = {g.k}")
    if len(t) != 8:
        raise WrongLength(f"needs a type of length 8, got {len(t)}")
    f = g.field
    u = t[0::2]
    _, y = partial_sums(f, t)
    first = f.sum(f.mul(y[k], u[k - 1]) for k in range(2, 5))
    second = f.sum(f.prod((y[k], y[k], u[k - 1])) for k in range(2, 5))
    return first, second


# -- girth-cycle prediction -------------------------------------------------


def predicted_girth(g: GraphSpec) -> int:
    """Girth of Lambda(k, q) in the range where its girth cycles are known.

    Raises
    ------
    Uncharacterized
        Outside ``k = 3``; ``k = 4``; ``k = 5`` with ``q >= 3``; and
        ``6 <= k <= 8`` with ``q = 3``.
    """
    k, q = g.k, g.q
    if k == 3:
        return 8
    if k == 4:
        return 12 if q == 3 else 8
    if k == 5 and q >= 3:
        return 12 if q == 3 else 10
    if k in (6, 7, 8) and q == 3:
        return 12
    raise Uncharacterized(f"no girth-cycle characterization for Lambda({k},{q})")


def predicted_girth_cycle_types(g: GraphSpec) -> FrozenSet[CycleType]:
    """Types of all girth cycles through the anchor edge, from closed forms.

    Raises
    ------
    Uncharacterized
        If ``(k, q)`` falls outside the characterized range; an empty set
        always means "no girth cycles", never "unknown".
    """
    k, q, p = g.k, g.q, g.field.p
    predicted_girth(g)
    out: Set[CycleType] = set()
    if k == 3:
        out |= family_types(g, Family.T2a) | family_types(g, Family.T2c)
    elif k == 4 and q != 3:
        if p == 2:
            out |= family_types(g, Family.T2b)
        out |= family_types(g, Family.T2d)
    elif k == 4:
        for fam in (Family.L6_80, Family.T4_85, Family.T4_86, Family.T4_87, Family.T4_88):
            out |= family_types(g, fam)
    elif k == 5 and q != 3:
        out |= theorem3_types(g)
    elif k in (5, 6):
        out |= family_types(g, Family.T4_89)
    elif k == 7:
        out |= family_types(g, Family.T4_90)
    else:
        out |= family_types(g, Family.T4_91)
    return frozenset(out)
