import pytest
from sympy.polys.domains import QQ

from algebra.lagrange import lagrange_check, random_lagrange_check
from algebra.lambda_ops import A_of, lambda_expansion_check, lambda_op, sample_inputs
from algebra.laurent import LaurentU, laurent_exp, plus_one_identity
from algebra.rings import U, Z, ZRING, zexp
from algebra.urat import URat
from errors import CancellationFailure, InvalidInputError


def laurent(terms):
    return LaurentU.from_terms(terms)


class TestLaurent:

    def test_canonical_shift(self):
        assert LaurentU.of(U ** 3, 2) == LaurentU.of(U, 0)
        assert LaurentU.of(U + 1, 2).shift == 2

    def test_negative_shift_multiplies(self):
        assert LaurentU.of(ZRING.one, -2) == LaurentU.of(U ** 2)

    def test_parts(self):
        P = laurent({-2: 3, 0: 5, 1: 7, 4: 1})
        assert P.positive_part() == laurent({1: 7, 4: 1})
        assert P.nonneg_part() == laurent({0: 5, 1: 7, 4: 1})
        assert P.constant_term() == 5
        assert (P.top_degree(), P.bottom_degree()) == (4, -2)

    def test_positive_part_of_polynomial_in_inverse_u(self):
        assert laurent({-3: 1, -1: 2}).positive_part().is_zero()

    def test_arithmetic(self):
        a = laurent({-1: 1, 1: 1})
        assert a * a == laurent({-2: 1, 0: 2, 2: 1})
        assert a - a == laurent({})
        assert (a + 1).constant_term() == 1

    def test_plus_one_identity(self):
        lhs, rhs = plus_one_identity(laurent({-2: 3, -1: 1, 0: 4, 2: 5}))
        assert lhs == rhs

    def test_monomial_inverse(self):
        assert laurent({-3: 2}).monomial_inverse() == laurent({3: QQ(1, 2)})
        with pytest.raises(InvalidInputError):
            laurent({0: 1, 1: 1}).monomial_inverse()

    def test_evaluate(self):
        assert laurent({-1: 2, 1: 1}).evaluate(2) == 3
        with pytest.raises(InvalidInputError):
            laurent({-1: 1}).evaluate(0)

    def test_invert_and_power_substitution(self):
        P = laurent({-1: 1, 2: 3})
        assert P.invert_u() == laurent({1: 1, -2: 3})
        assert P.substitute_u_power(2) == laurent({-2: 1, 4: 3})

    def test_exquo_reports_cancellation_failure(self):
        with pytest.raises(CancellationFailure):
            LaurentU.of(1 + U).exquo(1 + 2 * U)

    def test_exp(self):
        assert laurent_exp(LaurentU.of(Z * U, 0), 4) == LaurentU.of(zexp(Z * U, 4))


class TestURat:

    def test_canonical_form(self):
        r = URat.of(2 * U + 2, 4 * U * U + 4 * U, U)
        assert r.num == QQ(1, 2)
        assert r.den == U

    def test_zero(self):
        r = URat.of(ZRING.zero, 3 * U + 1, U)
        assert r.is_zero()
        assert r.den == 1

    def test_zero_denominator(self):
        with pytest.raises(InvalidInputError):
            URat.of(ZRING.one, ZRING.zero, U)

    def test_arithmetic(self):
        a = URat.of(ZRING.one, 1 + U, U)
        b = URat.of(U, 1 + U, U)
        assert a + b == 1
        assert (a / b) == URat.of(ZRING.one, U, U)

    def test_compose(self):
        image = URat.of(ZRING.one, U, U)
        assert URat.poly(1 + U, U).compose(image) == URat.of(1 + U, U, U)

    def test_at_pole(self):
        with pytest.raises(InvalidInputError):
            URat.of(ZRING.one, U - 2, U).at(2)

    def test_series_inverse(self):
        prec = 5
        series = URat.poly(zexp(Z * U, prec), U)
        assert series.series_inverse(prec) == URat.poly(zexp(-Z * U, prec), U)

    def test_laurent_round_trip(self):
        r = URat.of(1 + U, U ** 2, U)
        assert r.to_laurent() == laurent({-2: 1, -1: 1})
        with pytest.raises(CancellationFailure):
            URat.of(ZRING.one, 1 + U, U).to_laurent()


class TestLambda:

    def test_lambda_of_A_is_one(self):
        A = A_of(URat.poly(U, U), 5)
        assert lambda_op(A, 5) == 1

    def test_lambda_of_constant_vanishes(self):
        assert lambda_op(URat.poly(ZRING.one, U), 5).is_zero()

    def test_lambda_of_u(self):
        assert lambda_op(URat.poly(U, U), 4) == URat.poly((1 + U) * zexp(Z * U, 5), U)

    def test_A_undefined_at_minus_one(self):
        with pytest.raises(InvalidInputError):
            A_of(URat.poly(ZRING(-1), U), 3)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_expansion(self, k):
        for H in sample_inputs(2, 6):
            assert lambda_expansion_check(H, k, 6).ok


class TestLagrange:

    @pytest.mark.parametrize("values,Q", [((2, 5), (7,)), ((1, 2, 3), (1, 3))])
    def test_examples(self, values, Q):
        assert lagrange_check(values, Q).status == "pass"

    def test_rational_points(self):
        assert lagrange_check((QQ(1, 2), QQ(-3, 4), 5), (QQ(2, 3), 1)).status == "pass"

    def test_zero_among_points_skips_reciprocal(self):
        assert lagrange_check((0, 1, -1), (4,)).status == "pass"

    def test_random(self):
        assert random_lagrange_check(trials=40, seed=7).status == "pass"

    @pytest.mark.parametrize("values,Q", [((1,), ()), ((1, 1), ()), ((1, 2), (1, 1))])
    def test_invalid(self, values, Q):
        with pytest.raises(InvalidInputError):
            lagrange_check(values, Q)
