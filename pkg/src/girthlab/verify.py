"""
Oracle-equality checks pitting closed forms against brute force.

Each ``check_*`` function returns a list of :class:`Check` results, one per
sub-check.  A failing check carries the first counterexample found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, List, Optional, Sequence

from .errors import Uncharacterized
from .families import (
    Family,
    closure_conditions_k5,
    delta4,
    family_types,
    lambda3_system_check,
    predicted_girth,
    predicted_girth_cycle_types,
    theorem3_types,
)
from .field import FieldSpec, make_field
from .graph import GraphSpec, make_graph
from .search import SearchParams, enumerate_cycles_through_anchor, girth, is_cycle_type
from .walks import (
    closed_form_vertices,
    rho,
    rho_sum_form,
    walk_from_type,
)

__all__ = [
    "Check",
    "THEOREMS",
    "run_checks",
    "random_type",
    "rho_by_deletion",
    "brute_force_types",
    "k3_twelve_cycle_types",
    "check_closed_forms",
    "check_rho",
    "check_eight_cycles",
    "check_ten_cycles",
    "check_twelve_cycles",
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    counterexample: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status} {self.name}{tail}"


def _first_failure(name: str, cases: Iterable, ok: Callable) -> Check:
    for case in cases:
        if not ok(case):
            return Check(name, False, repr(case))
    return Check(name, True)


def _set_check(name: str, got, want) -> Check:
    if got == want:
        return Check(name, True)
    extra = sorted(set(got) - set(want))
    missing = sorted(set(want) - set(got))
    if extra:
        return Check(name, False, f"unexpected {extra[0]!r} ({len(extra)} extra)")
    return Check(name, False, f"missing {missing[0]!r} ({len(missing)} missing)")


def random_type(f: FieldSpec, length: int, rng: random.Random):
    return tuple(rng.randrange(1, f.q) for _ in range(length))


def brute_force_types(g: GraphSpec, length: int, params: Optional[SearchParams] = None):
    """Type set of all anchored cycles of ``length``, found by search."""
    return frozenset(rec.cycle_type for rec in enumerate_cycles_through_anchor(g, length, params))


# -- walk algebra ------------------------------------------------------------


def rho_by_deletion(f: FieldSpec, s: int, seq: Sequence[int]) -> int:
    """rho_s straight from its definition: delete ``s`` disjoint adjacent
    pairs in every possible way and add up the products of what is left."""
    n = len(seq)
    if s < 0 or n < 2 * s:
        return 0
    total = 0
    for starts in combinations(range(n - 1), s):
        if any(b - a < 2 for a, b in zip(starts, starts[1:])):
            continue
        gone = {p for a in starts for p in (a, a + 1)}
        total = f.add(total, f.prod(seq[p] for p in range(n) if p not in gone))
    return total


def check_rho(q: int, instances: int = 1000, seed: int = 0, max_len: int = 11) -> List[Check]:
    """Recurrence, definition and index-chain forms of rho on random inputs.

    Sequences may contain zeros; ``max_len`` bounds the sequence length
    because the chain sums are exponential.
    """
    f = make_field(q)
    rng = random.Random(seed)
    cases = []
    for _ in range(instances):
        n = rng.randrange(0, max_len + 1)
        seq = tuple(rng.randrange(f.q) for _ in range(n))
        s = rng.randrange(0, n // 2 + 1)
        cases.append((s, seq))

    def recurrence(case):
        s, seq = case
        if len(seq) < 2:
            return True
        lhs = rho(f, s, seq)
        rhs = f.add(rho(f, s - 1, seq[:-2]), f.mul(seq[-1], rho(f, s, seq[:-1])))
        return lhs == rhs

    return [
        _first_failure(f"rho recurrence over GF({q})", cases, recurrence),
        _first_failure(
            f"rho equals pair-deletion sum over GF({q})",
            cases,
            lambda c: rho(f, *c) == rho_by_deletion(f, *c),
        ),
        _first_failure(
            f"rho index-chain sums over GF({q})",
            cases,
            lambda c: rho_sum_form(f, *c) == rho(f, *c),
        ),
    ]


def check_closed_forms(
    k: int, q: int, samples: int = 500, seed: int = 0, max_steps: Optional[int] = None
) -> List[Check]:
    """Closed-form left vertices against the walked ones, on random types.

    Type lengths ``2i`` are drawn with ``1 <= i <= max_steps`` (default
    ``k + 2``).  Both the plain forms and the forms avoiding the last
    right difference are checked.
    """
    g = make_graph(k, q)
    rng = random.Random(seed)
    top = max_steps or k + 2
    types = [random_type(g.field, 2 * rng.randrange(1, top + 1), rng) for _ in range(samples)]

    def agrees(alt):
        def ok(t):
            return closed_form_vertices(g, t, alt=alt) == list(walk_from_type(g, t).left_vertices[1:])

        return ok

    return [
        _first_failure(f"closed-form left vertices in {g}", types, agrees(False)),
        _first_failure(f"alternative closed forms in {g}", types, agrees(True)),
    ]


# -- cycle families ----------------------------------------------------------


def _girth_check(g: GraphSpec, want: int) -> Check:
    got = girth(g)
    ok = got.exact and got.value == want
    return Check(f"girth of {g} is {want}", ok, None if ok else f"search found {got}")


def _soundness(g: GraphSpec, types) -> Check:
    return _first_failure(
        f"every predicted type is a cycle of {g}", sorted(types), lambda t: is_cycle_type(g, t)
    )


def check_eight_cycles(
    k: int, q: int, params: Optional[SearchParams] = None, exhaustive_limit: int = 10**5, seed: int = 0
) -> List[Check]:
    """8-cycles of Lambda(3, q) and Lambda(4, q), q != 3 when k = 4."""
    if k not in (3, 4) or (k == 4 and q == 3):
        raise Uncharacterized(f"8-cycle families cover k = 3, and k = 4 with q != 3; got ({k},{q})")
    g = make_graph(k, q)
    want = predicted_girth_cycle_types(g)
    checks = [
        _girth_check(g, 8),
        _soundness(g, want),
        _set_check(f"8-cycle families equal brute force in {g}", want, brute_force_types(g, 8, params)),
    ]
    if k == 3:
        f = g.field
        if (q - 1) ** 8 <= exhaustive_limit:
            corpus: Iterable = product(f.nonzero_elements(), repeat=8)
        else:
            rng = random.Random(seed)
            corpus = sorted(want) + [random_type(f, 8, rng) for _ in range(2000)]

        def system_ok(t):
            closes = f.sum(t[0::2]) == 0 and f.sum(t[1::2]) == 0 and lambda3_system_check(g, t) == (0, 0)
            return closes == is_cycle_type(g, t)

        checks.append(_first_failure(f"linear system cuts out 8-cycles of {g}", corpus, system_ok))
    return checks


def check_ten_cycles(q: int, params: Optional[SearchParams] = None) -> List[Check]:
    """10-cycles of Lambda(5, q)."""
    g = make_graph(5, q)
    predicted_girth(g)
    t3 = theorem3_types(g)
    if q == 3:
        return [
            Check("no 10-cycle types over GF(3)", not t3, repr(min(t3)) if t3 else None),
            _set_check(f"no anchored 10-cycles in {g}", brute_force_types(g, 10, params), frozenset()),
            _girth_check(g, 12),
        ]
    split = frozenset().union(
        *(family_types(g, fam) for fam in (Family.L1, Family.L2, Family.L3, Family.L4, Family.L5))
    )
    return [
        _girth_check(g, 10),
        _set_check(f"five-case split equals quadratic-root families over GF({q})", split, t3),
        _soundness(g, t3),
        _first_failure(
            f"closure conditions vanish on 10-cycle types of {g}",
            sorted(t3),
            lambda t: not any(closure_conditions_k5(g, t)),
        ),
        _set_check(f"10-cycle families equal brute force in {g}", t3, brute_force_types(g, 10, params)),
    ]


K3_TWELVE_FORMS = (Family.L6_80, Family.L6_81, Family.L6_82, Family.L6_83, Family.L6_84)


def k3_twelve_cycle_types():
    """12-cycle types of Lambda(3, 3) as the union of its five forms."""
    g = make_graph(3, 3)
    return frozenset().union(*(family_types(g, fam) for fam in K3_TWELVE_FORMS))


def check_twelve_cycles(k: int, params: Optional[SearchParams] = None) -> List[Check]:
    """12-cycles of Lambda(k, 3) for 4 <= k <= 9."""
    if not 4 <= k <= 9:
        raise Uncharacterized(f"12-cycle families cover 4 <= k <= 9 over GF(3), got k = {k}")
    g = make_graph(k, 3)
    if k == 9:
        got = girth(g, max_length=12)
        return [
            _set_check(f"no anchored 12-cycles in {g}", brute_force_types(g, 12, params), frozenset()),
            Check(f"girth of {g} exceeds 12", not got.exact, None if not got.exact else str(got)),
        ]
    want = predicted_girth_cycle_types(g)
    checks = [
        _girth_check(g, 12),
        _soundness(g, want),
        _set_check(f"12-cycle families equal brute force in {g}", want, brute_force_types(g, 12, params)),
    ]
    if k == 4:
        base = k3_twelve_cycle_types()
        lifted = frozenset(t for t in base if delta4(g, t) == 0)
        checks += [
            _set_check(
                "five forms equal brute force in Lambda(3,3)",
                base,
                brute_force_types(make_graph(3, 3), 12, params),
            ),
            _set_check("delta4 filter selects the Lambda(4,3) forms", lifted, want),
        ]
    return checks


THEOREMS = ("1", "2", "3", "4", "rho")


def run_checks(
    theorem: str,
    k: Optional[int] = None,
    q: Optional[int] = None,
    seed: int = 0,
    params: Optional[SearchParams] = None,
) -> List[Check]:
    """Dispatch one ``verify`` suite.

    ``"1"`` closed forms (needs k, q), ``"2"`` 8-cycles, ``"3"`` 10-cycles
    (k = 5), ``"4"`` 12-cycles over GF(3), ``"rho"`` the rho identities
    (needs q).

    Raises
    ------
    Uncharacterized
        If ``(k, q)`` is outside the range the suite covers.
    ValueError
        If a required parameter is missing.
    """

    def need(**kw):
        missing = [name for name, val in kw.items() if val is None]
        if missing:
            raise ValueError(f"theorem {theorem} needs --{' --'.join(missing)}")

    if theorem == "rho":
        need(q=q)
        return check_rho(q, seed=seed)
    if theorem == "1":
        need(k=k, q=q)
        return check_closed_forms(k, q, seed=seed)
    if theorem == "2":
        need(k=k, q=q)
        return check_eight_cycles(k, q, params, seed=seed)
    if theorem == "3":
        need(k=k, q=q)
        if k != 5:
            raise Uncharacterized(f"10-cycle families cover k = 5, got k = {k}")
        if q < 3:
            raise Uncharacterized("10-cycle families need q >= 3")
        return check_ten_cycles(q, params)
    if theorem == "4":
        need(k=k)
        if q is not None and q != 3:
            raise Uncharacterized(f"12-cycle families cover q = 3, got q = {q}")
        return check_twelve_cycles(k, params)
    raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
