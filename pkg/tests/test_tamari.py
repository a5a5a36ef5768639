import numpy as np
import pytest

import lattice.tamari
from errors import InvalidInputError, ResourceCapExceeded
from lattice.paths import PathWord
from lattice.tamari import (
    build_poset,
    check_decomposition_bijection,
    check_lattice,
    check_sublattice_embedding,
    covering_successors,
    decompose_interval,
    dyck_intervals,
    enumerate_intervals,
    interval_records,
    join,
    leq,
    longest_chain,
    meet,
    parse_dot,
    pointed_intervals,
    recompose_interval,
    to_dot,
)


class TestPoset:
    def test_sizes(self, t4, t3_m2):
        assert len(t4.vertices) == 14
        assert len(t3_m2.vertices) == 12
        assert len(build_poset(1, 0).vertices) == 1

    def test_bottom_and_top(self, t4):
        assert t4.bottom.word == "NENENENE"
        assert t4.top.word == "NNNNEEEE"
        assert all(leq(t4, t4.bottom, p) and leq(t4, p, t4.top) for p in t4.vertices)

    def test_covers_of_the_bottom(self):
        successors = {p.word for p in covering_successors(PathWord.ballot("NENENE", 1))}
        assert successors == {"NNEENE", "NENNEE"}

    def test_lattice_property(self, t4, t3_m2):
        assert check_lattice(t4).status == "pass"
        assert check_lattice(t3_m2).status == "pass"

    def test_meet_and_join_of_extremes(self, t4):
        assert meet(t4, t4.bottom, t4.top) == t4.bottom
        assert join(t4, t4.bottom, t4.top) == t4.top

    def test_height_of_the_pentagon(self):
        poset = build_poset(1, 3)
        assert longest_chain(poset, poset.bottom, poset.top) == 3
        assert poset.stats()["height"] == 3

    def test_incomparable_pair(self):
        poset = build_poset(1, 3)
        a, b = PathWord.ballot("NNEENE", 1), PathWord.ballot("NENNEE", 1)
        assert not leq(poset, a, b) and not leq(poset, b, a)
        with pytest.raises(InvalidInputError):
            longest_chain(poset, a, b)

    def test_unknown_path(self, t4):
        with pytest.raises(InvalidInputError):
            t4.index_of(PathWord.ballot("NE", 1))

    def test_cap(self):
        with pytest.raises(ResourceCapExceeded):
            build_poset(1, 4, cap=10)

    def test_order_matrix_budget(self, monkeypatch):
        monkeypatch.setattr(lattice.tamari, "MAX_ORDER_MATRIX_CELLS", 100)
        with pytest.raises(ResourceCapExceeded, match="order matrix"):
            build_poset(1, 4)
        assert len(build_poset(1, 3).vertices) == 5

    def test_chain_lengths(self, t4):
        row = t4.chain_lengths(t4.index_of(t4.bottom))
        assert row.dtype == np.int16
        assert (row >= 0).all()
        assert row[t4.index_of(t4.top)] == t4.height == 6

    def test_lattice_of_size_four_m2(self):
        poset = build_poset(2, 4)
        assert len(poset.vertices) == 55
        assert check_lattice(poset).status == "pass"
        assert meet(poset, poset.bottom, poset.top) == poset.bottom
        assert join(poset, poset.bottom, poset.top) == poset.top


class TestIntervals:
    @pytest.mark.parametrize("m,n,expected", [(1, 1, 1), (1, 2, 3), (1, 3, 13), (1, 4, 68), (2, 2, 6), (2, 3, 58),
                                              (3, 2, 10)])
    def test_interval_counts(self, m, n, expected):
        assert len(enumerate_intervals(build_poset(m, n))) == expected

    def test_records(self, t4):
        records = interval_records(enumerate_intervals(t4))
        assert len(records) == 68
        assert set(records[0]) == {"lower", "upper", "contacts", "rise", "dist"}
        assert all(r["dist"] >= 0 and r["contacts"] >= 1 for r in records)


class TestSublattice:
    @pytest.mark.parametrize("m,n", [(2, 3), (3, 2), (1, 3)])
    def test_embedding(self, m, n):
        assert check_sublattice_embedding(m, n)


class TestDecomposition:
    def test_round_trip(self):
        for interval in dyck_intervals(3):
            pointed, second = decompose_interval(interval)
            back = recompose_interval(pointed, second)
            assert (back.lower.word, back.upper.word) == (interval.lower.word, interval.upper.word)

    def test_pointed_count(self):
        assert len(pointed_intervals(2)) == sum(i.contacts for i in dyck_intervals(2))

    def test_bijection(self):
        assert check_decomposition_bijection(4).status == "pass"

    def test_bijection_respects_cap(self):
        with pytest.raises(ResourceCapExceeded):
            check_decomposition_bijection(4, cap=10)

    def test_size_zero_has_no_decomposition(self):
        with pytest.raises(InvalidInputError):
            decompose_interval(dyck_intervals(0)[0])


class TestDot:
    def test_round_trip(self, t4):
        vertices, edges = parse_dot(to_dot(t4))
        assert vertices == [p.word for p in t4.vertices]
        assert edges == [(a.word, b.word) for a, b in t4.covers()]

    def test_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            parse_dot("graph {\n}\n")
