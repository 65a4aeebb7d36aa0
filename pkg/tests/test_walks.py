import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girthlab.errors import BadShape, OutOfRange, ZeroDifference
from girthlab.field import make_field
from girthlab.graph import make_graph
from girthlab.verify import random_type, rho_by_deletion
from girthlab.walks import (
    check_type,
    closed_form_left,
    closed_form_left_alt,
    closed_form_vertices,
    partial_sums,
    rho,
    rho_sum_form,
    rho_table,
    walk_from_type,
)

FIELDS = [3, 4, 5, 7, 8, 9]


class TestRhoExamples:
    def test_values(self):
        f5 = make_field(5)
        assert rho(f5, 0, (2, 3)) == 1
        assert rho(f5, 1, (1, 2, 3)) == 4
        for q in FIELDS:
            f = make_field(q)
            for a in f.elements():
                assert rho(f, 1, (a, q - 1)) == 1
                assert rho(f, 2, (a, 1, 2 % q)) == 0
                assert rho(f, -1, (a,)) == 0

    def test_empty_sequence(self):
        f = make_field(3)
        assert rho(f, 0, ()) == 1
        assert rho(f, 1, ()) == 0

    def test_sum_form_examples(self):
        f = make_field(7)
        for a in range(7):
            for b in range(7):
                assert rho_sum_form(f, 0, (a, b)) == f.mul(a, b) == rho(f, 0, (a, b))
                assert rho_sum_form(f, 1, (a, b)) == 1

    def test_sum_form_shape(self):
        f = make_field(5)
        with pytest.raises(BadShape):
            rho_sum_form(f, 3, (1, 2, 3, 4))
        with pytest.raises(BadShape):
            rho_sum_form(f, -1, (1, 2))

    def test_table_matches_single_calls(self):
        f = make_field(9)
        seq = (3, 0, 5, 8, 1, 1, 7)
        table = rho_table(f, seq, 4)
        for n in range(len(seq) + 1):
            for s in range(5):
                assert table[n][s] == rho(f, s, seq[:n])


@pytest.mark.parametrize("q", FIELDS)
class TestRhoIdentities:
    def test_recurrence(self, q):
        f = make_field(q)

        @settings(max_examples=200, deadline=None)
        @given(st.lists(st.integers(0, q - 1), min_size=2, max_size=14), st.integers(0, 8))
        def check(seq, s):
            lhs = rho(f, s, seq)
            assert lhs == f.add(rho(f, s - 1, seq[:-2]), f.mul(seq[-1], rho(f, s, seq[:-1])))

        check()

    def test_definition(self, q):
        f = make_field(q)

        @settings(max_examples=150, deadline=None)
        @given(st.lists(st.integers(0, q - 1), max_size=10), st.integers(-1, 6))
        def check(seq, s):
            assert rho(f, s, seq) == rho_by_deletion(f, s, seq)

        check()

    def test_sum_forms(self, q):
        f = make_field(q)

        @settings(max_examples=150, deadline=None)
        @given(st.lists(st.integers(0, q - 1), max_size=10), st.data())
        def check(seq, data):
            s = data.draw(st.integers(0, len(seq) // 2))
            assert rho_sum_form(f, s, seq) == rho(f, s, seq)

        check()


class TestTypes:
    def test_check_type(self):
        f = make_field(5)
        assert check_type([1, 2], f) == (1, 2)
        with pytest.raises(BadShape):
            check_type((1, 2, 3), f)
        with pytest.raises(ZeroDifference):
            check_type((1, 0), f)
        with pytest.raises(ValueError):
            check_type((1, 5), f)

    def test_partial_sums(self):
        f = make_field(5)
        x, y = partial_sums(f, (1, 1, 1, 4, 4, 1, 4, 4))
        assert x[1:] == [0, 1, 2, 1, 0]
        assert y[1:] == [0, 1, 0, 1, 0]


class TestWalkExamples:
    def test_displayed_walk(self):
        g = make_graph(4, 5)
        w = walk_from_type(g, (1, 1, 1, 4, 4, 1, 4, 4))
        assert w.left_vertices[:4] == (
            (0, 0, 0, 0, 0),
            (1, 0, 0, 0, 0),
            (2, 1, 1, 1, 1),
            (1, 1, 1, 1, 2),
        )
        assert w.right_vertices[:4] == (
            (0, 0, 0, 0, 0),
            (1, 0, 1, 0, 1),
            (0, 0, 4, 4, 2),
            (1, 0, 0, 0, 3),
        )
        assert closed_form_left(g, w.cycle_type, 3, 4) == 2

    @pytest.mark.parametrize("k, q", [(2, 3), (4, 5), (7, 9)])
    def test_first_step(self, k, q):
        g = make_graph(k, q)
        w = walk_from_type(g, (1, 1))
        assert w.left_vertices[1] == (1,) + (0,) * k
        assert len(w.left_vertices) == len(w.right_vertices) == 2
        for u in g.field.nonzero_elements():
            assert closed_form_left(g, (u, 1), 1, 0) == u

    def test_zero_entry(self):
        with pytest.raises(ZeroDifference):
            walk_from_type(make_graph(3, 3), (1, 0))

    @pytest.mark.parametrize("k, q", [(k, q) for k in (2, 3, 5, 8) for q in (3, 4, 5, 7)])
    def test_walk_invariants(self, k, q):
        g = make_graph(k, q)
        rng = random.Random(k * q)
        for _ in range(500):
            t = random_type(g.field, 2 * rng.randrange(1, 9), rng)
            w = walk_from_type(g, t)
            L, R = w.left_vertices, w.right_vertices
            assert len(L) == len(R) == len(t) // 2 + 1
            assert w.x_colors[0] == w.y_colors[0] == 0
            for j in range(len(L) - 1):
                assert g.is_adjacent(L[j], R[j]) and g.is_adjacent(L[j + 1], R[j])
                # backtrackless
                assert L[j] != L[j + 1] and R[j] != R[j + 1]
            assert w.vertices()[:2] == [g.zero, g.zero]


class TestClosedForms:
    def test_range_checks(self):
        g = make_graph(4, 5)
        t = (1, 1, 1, 4)
        with pytest.raises(OutOfRange):
            closed_form_left(g, t, 0, 0)
        with pytest.raises(OutOfRange):
            closed_form_left(g, t, 3, 0)
        with pytest.raises(OutOfRange):
            closed_form_left_alt(g, t, 1, 5)

    @pytest.mark.parametrize("k, q", [(2, 3), (3, 4), (4, 5), (6, 7), (9, 9), (12, 3)])
    def test_single_coordinates(self, k, q):
        g = make_graph(k, q)
        rng = random.Random(7)
        for _ in range(60):
            t = random_type(g.field, 2 * rng.randrange(1, k + 3), rng)
            w = walk_from_type(g, t)
            i = rng.randrange(1, len(t) // 2 + 1)
            slot = rng.randrange(k + 1)
            assert closed_form_left(g, t, i, slot) == w.left_vertices[i][slot]
            assert closed_form_left_alt(g, t, i, slot) == w.left_vertices[i][slot]

    def test_vertices(self):
        g = make_graph(5, 7)
        t = (3, 2, 6, 1, 1, 5, 4, 4)
        assert closed_form_vertices(g, t) == list(walk_from_type(g, t).left_vertices[1:])
        assert closed_form_vertices(g, t, alt=True) == closed_form_vertices(g, t)
