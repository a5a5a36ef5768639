import pytest

from algebra.phi import (
    assemble_F,
    assemble_laurent,
    phi_recursion,
    reconstruct_from_positive_part,
    theorem_m1_nonneg_form,
)
from algebra.rings import V, VY, VZ, zexp, zmul, ztrunc
from algebra.symmetric import sym_context
from errors import InvalidInputError
from series.substitution import transformed_poly, transformed_series


@pytest.fixture(scope="module")
def table_m2():
    return phi_recursion(2, 3)


def test_top_phi(table_m2):
    assert table_m2[2] == zmul(V, zexp(VZ * VY * V, 4), 4)


def test_lower_phis_vanish_at_v_zero(table_m2):
    assert all(not table_m2[k].coeff_wrt(V, 0) for k in range(2))


@pytest.mark.parametrize("m,N", [(1, 4), (2, 3)])
def test_assembled_matches_solver(m, N):
    table = phi_recursion(m, N)
    assert ztrunc(assemble_laurent(table).poly, N + 1) == transformed_poly(m, N)


def test_assemble_F(table_m2):
    assert assemble_F(sym_context(2, 3), table_m2, 3).first_mismatch(transformed_series(2, 3)) is None
    with pytest.raises(InvalidInputError):
        assemble_F(sym_context(1, 3), table_m2, 3)


def test_m1_nonneg_form():
    assert theorem_m1_nonneg_form(5) == transformed_poly(1, 5)


def test_reconstruct_from_positive_part():
    P = 3 + V - 2 * V ** 2 + V ** 4
    assert reconstruct_from_positive_part(P, 2) == P


def test_record(table_m2):
    record = table_m2.to_record()
    assert (record.m, record.N) == (2, 3)
    assert len(record.phi) == 3
    assert len(record.positive_parts) == 2


def test_rejects_bad_parameters():
    with pytest.raises(InvalidInputError):
        phi_recursion(0, 3)
