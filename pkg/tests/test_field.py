from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girthlab.errors import DivisionByZero, NotAPrimePower
from girthlab.field import make_field

SMALL = [2, 3, 4, 5, 7, 8, 9]


class TestMakeField:
    def test_prime(self):
        f = make_field(3)
        assert (f.p, f.m, f.q) == (3, 1, 3)

    def test_gf4_modulus(self):
        f = make_field(4)
        assert (f.p, f.m) == (2, 2)
        # x^2 + x + 1, low to high
        assert f.modulus == (1, 1, 1)
        assert f.modulus_str() == "x^2 + x + 1"

    @pytest.mark.parametrize("q, modulus", [(8, (1, 1, 0, 1)), (9, (1, 0, 1)), (16, (1, 1, 0, 0, 1)), (25, (2, 0, 1))])
    def test_smallest_irreducible(self, q, modulus):
        assert make_field(q).modulus == modulus

    @pytest.mark.parametrize("q", [6, 1, 0, -4, 12, 100])
    def test_not_prime_power(self, q):
        with pytest.raises(NotAPrimePower):
            make_field(q)

    def test_too_large(self):
        with pytest.raises(ValueError):
            make_field(3**11)

    def test_cached(self):
        assert make_field(9) is make_field(9)


class TestExamples:
    def test_add(self):
        assert make_field(3).add(2, 2) == 1
        f4 = make_field(4)
        assert all(f4.add(a, a) == 0 for a in f4.elements())
        f5 = make_field(5)
        assert all(f5.add(0, b) == b for b in f5.elements())

    def test_mul(self):
        assert make_field(4).mul(2, 2) == 3
        assert make_field(5).mul(2, 3) == 1
        f3 = make_field(3)
        assert all(f3.mul(a, 1) == a for a in f3.elements())

    def test_inv(self):
        assert make_field(5).inv(2) == 3
        assert make_field(3).inv(2) == 2
        assert make_field(4).inv(2) == 3

    def test_inv_zero(self):
        with pytest.raises(DivisionByZero):
            make_field(7).inv(0)
        with pytest.raises(ZeroDivisionError):
            make_field(8).div(3, 0)

    def test_element_str(self):
        f = make_field(9)
        assert f.element_str(0) == "0"
        assert f.element_str(5) == "x + 2"


@pytest.mark.parametrize("q", SMALL)
class TestAxiomsExhaustive:
    def test_add_mul_laws(self, q):
        f = make_field(q)
        E = f.elements()
        for a, b in product(E, repeat=2):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.sub(f.add(a, b), b) == a
        for a, b, c in product(E, repeat=3):
            assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))

    def test_inverses(self, q):
        f = make_field(q)
        for a in f.elements():
            assert f.add(a, f.neg(a)) == 0
        for a in f.nonzero_elements():
            assert f.mul(a, f.inv(a)) == 1

    def test_frobenius(self, q):
        f = make_field(q)
        for a, b in product(f.elements(), repeat=2):
            assert f.pow(f.add(a, b), f.p) == f.add(f.pow(a, f.p), f.pow(b, f.p))

    def test_multiplicative_group(self, q):
        f = make_field(q)
        nz = set(f.nonzero_elements())
        assert len(nz) == q - 1
        assert {f.mul(a, b) for a in nz for b in nz} == nz
        assert {f.inv(a) for a in nz} == nz
        # every element satisfies a^q = a
        assert all(f.pow(a, q) == a for a in f.elements())


@pytest.mark.parametrize("q", [16, 27, 49, 125, 256, 257, 512, 1024, 3**7])
class TestAxiomsSampled:
    def test_ring_laws(self, q):
        f = make_field(q)

        @settings(max_examples=150, deadline=None)
        @given(st.integers(0, q - 1), st.integers(0, q - 1), st.integers(0, q - 1))
        def check(a, b, c):
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            if a:
                assert f.mul(a, f.inv(a)) == 1
                assert f.div(f.mul(a, b), a) == b

        check()

    def test_order_of_group(self, q):
        f = make_field(q)
        assert f.has_tables == (q <= 256)
        for a in (1, 2, q - 1):
            assert f.pow(a, q - 1) == 1


def test_vectorised_tables_agree():
    import numpy as np

    f = make_field(9)
    a = np.arange(9).repeat(9)
    b = np.tile(np.arange(9), 9)
    assert list(f.vmul(a, b)) == [f.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert list(f.vsub(a, b)) == [f.sub(int(x), int(y)) for x, y in zip(a, b)]
