import pytest
from sympy.polys.domains import QQ

from algebra.identities import symmetric_check
from algebra.laurent import LaurentU
from algebra.rings import V
from algebra.roots import explicit_roots, radical_display_roots, roots_satisfy_equation, sample_roots
from algebra.symmetric import (
    check_power_sums_at_point,
    elementary_all,
    elementary_others,
    laurent_to_v,
    newton_power_sums,
    reduce_symmetric,
    sym_context,
    v_laurent,
    v_to_laurent,
)
from config import MAX_POWER_SUM_WINDOW
from errors import CancellationFailure, InvalidInputError, ResourceCapExceeded


def laurent(terms):
    return LaurentU.from_terms(terms)


def test_m1_elementary():
    e = elementary_all(1)
    assert e[0] == laurent({0: 1})
    assert e[1] == laurent({1: 1, -1: 1})
    assert e[2] == laurent({0: 1})
    assert elementary_others(1)[1] == laurent({-1: 1})


def test_m1_power_sums():
    p = newton_power_sums(elementary_all(1), 3)
    assert p[2] == laurent({2: 1, -2: 1})
    assert p[3] == laurent({3: 1, -3: 1})


def test_negative_power_sums():
    ctx = sym_context(1, 2)
    assert ctx.power_sum("all", -1) == laurent({1: 1, -1: 1})
    assert ctx.power_sum("others", -2) == laurent({2: 1})


def test_v_round_trip():
    assert laurent_to_v(v_laurent(2), 2) == V
    assert laurent_to_v(laurent({0: 3}), 1) == 3
    assert laurent_to_v(v_to_laurent(V ** 3 - 2 * V, 2), 2) == V ** 3 - 2 * V


def test_u_alone_is_not_a_polynomial_in_v():
    with pytest.raises(CancellationFailure):
        laurent_to_v(laurent({1: 1}), 1)


@pytest.mark.parametrize("m,point", [(1, 2), (1, 5), (2, 6), (2, 20)])
@pytest.mark.parametrize("family", ["all", "others"])
def test_power_sums_at_points(m, point, family):
    assert check_power_sums_at_point(sym_context(m, 2), family, point).status == "pass"


def test_power_sums_without_rational_roots():
    assert check_power_sums_at_point(sym_context(2, 2), "all", 1).status == "skipped"


@pytest.mark.parametrize("m,N", [(1, 4), (2, 3), (3, 2)])
def test_symmetric_check(m, N):
    assert symmetric_check(m, N).status == "pass"


def test_window():
    ctx = sym_context(1, 2)
    assert ctx.window == 6
    with pytest.raises(ResourceCapExceeded):
        ctx.power_sum("all", 7)
    grown = ctx.ensure(9)
    assert grown.window >= 9
    assert grown.power_sum("all", 9) == laurent({9: 1, -9: 1})
    assert ctx.ensure(3) is ctx


def test_window_cap():
    with pytest.raises(ResourceCapExceeded):
        sym_context(1, window=MAX_POWER_SUM_WINDOW + 1)
    with pytest.raises(InvalidInputError):
        sym_context(0)


def test_sample_roots():
    assert sample_roots(2, 6) == [QQ(6), QQ(3, 4), QQ(-2, 9)]
    assert sample_roots(1, 3) == [QQ(3), QQ(1, 3)]
    assert sample_roots(2, 1) is None
    assert sample_roots(3, 2) is None


@pytest.mark.parametrize("m", [1, 2])
def test_explicit_roots(m):
    assert roots_satisfy_equation(explicit_roots(m))


def test_radical_roots():
    assert set(radical_display_roots()) == set(explicit_roots(2)[1:])


def test_reduce_symmetric_in_u():
    ctx = sym_context(1, 2)
    assert reduce_symmetric(ctx, "all", {(1, 1): 1}, 1) == laurent({0: 1})
    assert reduce_symmetric(ctx, "all", {(2,): 1, (1, 1): 3}, 1) == laurent({2: 1, 0: 3, -2: 1})


def test_reduce_symmetric_at_a_point():
    ctx = sym_context(2, 2)
    first, second = sample_roots(2, 6)[1:]
    reduced = reduce_symmetric(ctx, "others", {(2, 1): 1}, 1)
    assert reduced.evaluate(6) == first ** 2 * second + first * second ** 2
