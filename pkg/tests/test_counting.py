import pytest

from errors import InvalidInputError, VerificationMismatch
from lattice.counting import (
    augmented_refined_polynomial,
    check_closed_forms,
    check_parking_bijection,
    closed_labelled,
    closed_labelled_total,
    closed_unlabelled,
    count_rows,
    refined_polynomial,
)
from series.poly import X, Y, specialize


@pytest.mark.parametrize("m,values", [(1, [1, 3, 13, 68]), (2, [1, 6, 58]), (3, [1, 10])])
def test_closed_unlabelled(m, values):
    assert [closed_unlabelled(m, n) for n in range(1, len(values) + 1)] == values


@pytest.mark.parametrize("m,values", [(1, [1, 4, 32, 400]), (2, [1, 9, 189])])
def test_closed_labelled(m, values):
    assert [closed_labelled(m, n) for n in range(1, len(values) + 1)] == values


def test_closed_forms_need_positive_size():
    with pytest.raises(InvalidInputError):
        closed_unlabelled(1, 0)


def test_labelled_path_totals():
    assert [closed_labelled_total(1, n) for n in range(4)] == [1, 1, 3, 16]


def test_size_zero_polynomial():
    refined = refined_polynomial(1, 0)
    assert refined.poly == X
    assert refined.intervals == 1


def test_size_one_polynomial():
    assert refined_polynomial(2, 1).poly == X ** 2 * Y


def test_refined_polynomial_totals(t4):
    refined = refined_polynomial(1, 4, poset=t4)
    assert refined.intervals == 68
    assert refined.labelled == 400


def test_q_refinement_collapses():
    with_q = refined_polynomial(1, 3, with_q=True)
    plain = refined_polynomial(1, 3)
    assert specialize(with_q.poly, q=1) == plain.poly


def test_count_rows():
    rows = count_rows(1, 4)
    assert [r.unlabelled for r in rows] == [1, 1, 3, 13, 68]
    assert [r.labelled for r in rows] == [1, 1, 4, 32, 400]
    assert rows[0].unlabelled_closed is None
    assert rows[4].labelled_closed == 400
    assert rows[0].poly == {"x": "1"}


def test_count_rows_m2():
    rows = count_rows(2, 3)
    assert [r.unlabelled for r in rows] == [1, 1, 6, 58]
    assert [r.labelled for r in rows] == [1, 1, 9, 189]


def test_check_closed_forms_catches_a_bad_row():
    rows = count_rows(1, 2)
    rows[2].labelled = 5
    with pytest.raises(VerificationMismatch):
        check_closed_forms(1, rows)


def test_closed_forms_are_plain_ints():
    assert type(closed_unlabelled(2, 3)) is int
    assert type(closed_labelled(1, 1)) is int
    assert type(closed_labelled_total(1, 0)) is int


def test_augmented_with_no_blocks():
    # k free up steps and no block: only the path u^k d^k
    assert augmented_refined_polynomial(1, 1, 0) != 0


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (3, 2)])
def test_parking_bijection(m, n):
    assert check_parking_bijection(m, n).status == "pass"
