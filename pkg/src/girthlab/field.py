"""
Finite field arithmetic over GF(q), q = p**m.

Elements are plain integers in ``[0, q)``.  The integer encodes the
coefficients of the polynomial representative in base ``p`` with the
constant term as the least significant digit, so ``x + 1`` in GF(4) is
``3`` and ``x`` in GF(9) is ``3``.

For ``q <= 256`` full addition, multiplication, negation and inverse
tables are built at construction; larger fields compute on the fly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, NotAPrimePower

__all__ = ["FieldSpec", "make_field", "TABLE_LIMIT"]

TABLE_LIMIT = 256
MAX_ORDER = 1 << 16


def _factor_prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise NotAPrimePower(f"q={q} is not a prime power")
    n, p = q, None
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise NotAPrimePower(f"q={q} has at least two distinct prime factors")
    return p, m


# -- polynomial helpers over F_p, coefficient lists low -> high ------------


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _poly_divmod(a, b, p):
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        quot[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return _trim(quot), a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _digits(value: int, p: int, m: int) -> List[int]:
    out = []
    for _ in range(m):
        value, d = divmod(value, p)
        out.append(d)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    if m == 1:
        return (0, 1)
    # Counting up through the low coefficients visits monic polynomials in
    # lexicographic order with the high-degree coefficients compared first.
    for low in range(p**m):
        poly = _digits(low, p, m) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p**m) with a fixed irreducible modulus.

    Build instances with :func:`make_field`.  Instances are immutable and
    safe to share between processes.

    Attributes
    ----------
    p, m, q : int
        Characteristic, extension degree and order.
    modulus : tuple of int
        Monic irreducible polynomial, coefficients from the constant term
        up to the leading 1.  For prime fields this is ``(0, 1)``.
    """

    p: int
    m: int
    q: int
    modulus: Tuple[int, ...]
    _add: Optional[List[List[int]]] = field(default=None, repr=False, compare=False)
    _sub: Optional[List[List[int]]] = field(default=None, repr=False, compare=False)
    _mul: Optional[List[List[int]]] = field(default=None, repr=False, compare=False)
    _neg: Optional[List[int]] = field(default=None, repr=False, compare=False)
    _inv: Optional[List[int]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- raw arithmetic, used to fill tables and above TABLE_LIMIT --------

    def _raw_add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        p, m = self.p, self.m
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p)

    def _raw_neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        p, m = self.p, self.m
        return _undigits([(-x) % p for x in _digits(a, p, m)], p)

    def _raw_mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        p, m = self.p, self.m
        prod = _poly_mul(_trim(_digits(a, p, m)), _trim(_digits(b, p, m)), p)
        rem = _poly_mod(prod, self.modulus, p) if prod else []
        return _undigits(rem + [0] * (m - len(rem)), p)

    def _raw_inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        # extended Euclid: find s with s*a = 1 mod modulus
        p, m = self.p, self.m
        r0, r1 = list(self.modulus), _trim(_digits(a, p, m))
        s0, s1 = [], [1]
        while r1:
            quot, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1, p), p)
        # r0 is a nonzero constant; normalise
        c = pow(r0[0], p - 2, p)
        s = [(x * c) % p for x in s0]
        s = _poly_mod(s, self.modulus, p) if len(s) > m else s
        return _undigits(s + [0] * (m - len(s)), p)

    def _build_tables(self):
        q = self.q
        els = range(q)
        neg = [self._raw_neg(a) for a in els]
        add = [[self._raw_add(a, b) for b in els] for a in els]
        sub = [[add[a][neg[b]] for b in els] for a in els]
        mul = [[self._raw_mul(a, b) for b in els] for a in els]
        inv = [0] + [self._raw_inv(a) for a in range(1, q)]
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_sub", sub)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_inv", inv)

    @property
    def has_tables(self) -> bool:
        return self._mul is not None

    # -- public scalar arithmetic ----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._raw_add(a, b)

    def sub(self, a: int, b: int) -> int:
        if self._sub is not None:
            return self._sub[a][b]
        return self._raw_add(a, self._raw_neg(b))

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        return self._raw_neg(a)

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self._inv is not None:
            return self._inv[a]
        return self._raw_inv(a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def sum(self, values) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    def prod(self, values) -> int:
        total = 1
        for v in values:
            total = self.mul(total, v)
        return total

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_q (so ``from_int(-1)`` is -1)."""
        return n % self.p

    def element(self, value: int) -> int:
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element of GF({self.q})")
        return value

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def _poly_str(self, coeffs) -> str:
        terms = []
        for power in range(len(coeffs) - 1, -1, -1):
            c = coeffs[power]
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
                continue
            mono = "x" if power == 1 else f"x^{power}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"

    def element_str(self, a: int) -> str:
        """Polynomial form of an element, e.g. ``'x + 2'``."""
        if self.m == 1:
            return str(a)
        return self._poly_str(_digits(a, self.p, self.m))

    def modulus_str(self) -> str:
        return self._poly_str(self.modulus)

    # -- vectorised helpers for numpy index arrays -----------------------

    @property
    def tables(self):
        """``(add, sub, mul)`` as ``numpy`` arrays, or ``None`` above the table limit."""
        return _np_tables(self)

    def vmul(self, a, b):
        t = _np_tables(self)
        if t is not None:
            return t[2][a, b]
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        return np.vectorize(self._raw_mul, otypes=[np.int64])(a, b)

    def vsub(self, a, b):
        t = _np_tables(self)
        if t is not None:
            return t[1][a, b]
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return np.vectorize(self.sub, otypes=[np.int64])(a, b)


@lru_cache(maxsize=None)
def _np_tables(f: FieldSpec):
    if f._mul is None:
        return None
    return (
        np.array(f._add, dtype=np.int64),
        np.array(f._sub, dtype=np.int64),
        np.array(f._mul, dtype=np.int64),
    )


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Return GF(q) with the lexicographically smallest monic irreducible modulus.

    Raises
    ------
    NotAPrimePower
        If ``q < 2`` or ``q`` has two distinct prime factors.

    Examples
    --------
    >>> f = make_field(4)
    >>> f.p, f.m, f.modulus
    (2, 2, (1, 1, 1))
    >>> f.mul(2, 2)
    3
    """
    if not isinstance(q, int) or q < 2:
        raise NotAPrimePower(f"q={q!r} is not a prime power")
    if q > MAX_ORDER:
        raise ValueError(f"fields of order above {MAX_ORDER} are not supported")
    p, m = _factor_prime_power(q)
    return FieldSpec(p=p, m=m, q=q, modulus=_smallest_irreducible(p, m))
