import pytest

from config import MAX_SERIES_ORDER
from errors import InvalidInputError, ResourceCapExceeded
from lattice.counting import closed_labelled
from series.closed_forms import labelled_total_z, theorem_m1_check, theorem_main_check
from series.poly import X, Y, poly_to_json, specialize
from series.qanalogue import q_coefficient_table, verify_q_specialization
from series.solver import augmented_series, check_augmented, check_solver_oracle, solve_functional_equation
from series.substitution import substitute_t_of_z
from series.tseries import TSeries


def test_initial_coefficients():
    F = solve_functional_equation(2, 1)
    assert F[0] == X
    assert F[1] == X ** 2 * Y


def test_labelled_totals_m1(solved_m1):
    totals = [specialize(c, x=1, y=1) for c in solved_m1]
    assert totals[3] == 32
    assert totals[4] == closed_labelled(1, 4)


def test_labelled_totals_m2(solved_m2):
    assert specialize(solved_m2[3], x=1, y=1) == 189


def test_y_zero_is_x(solved_m1):
    assert all(specialize(c, y=0) == 0 for c in list(solved_m1)[1:])


def test_rejects_bad_parameters():
    with pytest.raises(InvalidInputError):
        solve_functional_equation(0, 3)
    with pytest.raises(ResourceCapExceeded):
        solve_functional_equation(1, MAX_SERIES_ORDER + 1)


def test_prefix_stable(solved_m1):
    assert solve_functional_equation(1, 3) == solved_m1.truncate(3)


def test_dump_round_trip(solved_m2):
    dump = solved_m2.to_dump(2, "F(t;x,y)")
    assert dump.coeffs[1] == poly_to_json(X ** 2 * Y)
    assert TSeries.from_dump(dump) == solved_m2


@pytest.mark.parametrize("m,n", [(1, 5), (2, 3), (3, 2)])
def test_solver_matches_brute_force(m, n):
    assert check_solver_oracle(m, n).status == "pass"


def test_solver_matches_brute_force_with_q():
    assert check_solver_oracle(1, 3, with_q=True).status == "pass"


@pytest.mark.parametrize("m,N", [(1, 4), (2, 3)])
def test_augmented(m, N):
    assert check_augmented(m, N).status == "pass"


def test_augmented_rejects_large_k(solved_m1):
    with pytest.raises(InvalidInputError):
        augmented_series(solved_m1, 1, 2)


@pytest.mark.parametrize("m,N", [(1, 10), (2, 10), (3, 10)])
def test_theorem_main(m, N):
    assert theorem_main_check(m, N).status == "pass"


@pytest.mark.parametrize("m", [1, 2])
def test_labelled_totals_in_z(m):
    F = solve_functional_equation(m, 12).at(x=1, y=1)
    assert substitute_t_of_z(F, m, 12) == labelled_total_z(m, 12)


def test_theorem_m1():
    assert theorem_m1_check(8).status == "pass"


def test_q_table():
    rows = q_coefficient_table(1, 2)
    assert rows[2].coefficients == ["3", "1"]
    assert rows[2].q_degree == rows[2].longest_chain == 1


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2)])
def test_q_specialization(m, n):
    report = verify_q_specialization(m, n)
    assert report.status == "pass"
    assert len(report.rows) == n + 1
