"""
Identities tying the transformed series to the roots of (1+U)^(m+1) = U^m v

Each check compares two independent computations of the same z-series and
reports the lowest order where they disagree.
"""
import logging
import random
from typing import Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_series_inversion
from sympy.polys.rings import PolyElement

from algebra.lagrange import lagrange_check
from algebra.lambda_ops import A_of
from algebra.laurent import LaurentU, laurent_exp, plus_one_identity
from algebra.phi import assemble_laurent, phi_recursion, positive_part_laurent, reconstruct_from_positive_part
from algebra.rings import U, V, VRING, VY, VZ, Z, ZRING, ZY, z_valuation, zexp, zmul, ztrunc
from algebra.roots import (
    explicit_roots,
    radical_display_roots,
    roots_satisfy_equation,
    sample_roots,
    v_image,
)
from algebra.symmetric import (
    check_power_sums_at_point,
    laurent_to_v,
    sym_context,
    v_laurent,
    v_to_laurent,
)
from algebra.urat import URat, compose_poly
from config import MAX_SYMBOLIC_ROOT_ORDER, RADICAL_SAMPLE_POINTS, RECIPROCAL_SAMPLE_POINTS, RECONSTRUCT_TRIALS
from reports import CheckReport
from series.closed_forms import closed_form_G1_poly
from series.substitution import transformed_poly

logger = logging.getLogger(__name__)


def sample_points(m: int) -> Tuple[int, ...]:
    """Rational u at which every root is rational"""
    if m == 1:
        return RECIPROCAL_SAMPLE_POINTS
    if m == 2:
        return RADICAL_SAMPLE_POINTS
    return ()


def _v_at(m: int, u_value) -> QQ:
    u = QQ.convert(u_value)
    return (1 + u) ** (m + 1) / u ** m


def exp_v_series(N: int, with_y: bool = True) -> PolyElement:
    """v e^(zyv) (or v e^(zv)) below z^(N+1), in the ring of polynomials in z, v, y"""
    arg = VZ * VY * V if with_y else VZ * V
    return zmul(V, zexp(arg, N + 1), N + 1)


def root_combination(values: Sequence[URat], roots: Sequence[URat], N: int) -> URat:
    """sum_i values[i] / prod_(j != i) (A(u_i) - A(u_j)) below z^(N+1)"""
    prec = N + 1
    amplitudes = [A_of(r, N) for r in roots]
    total = URat.poly(roots[0].ring.zero, roots[0].var)
    for i, value in enumerate(values):
        product = URat.poly(roots[0].ring.one, roots[0].var)
        for j, other in enumerate(amplitudes):
            if j != i:
                product = product.mul(amplitudes[i] - other, prec)
        total = total + value.mul(product.series_inverse(prec), prec)
    return total.truncate(prec)


def point_combination(H: PolyElement, roots: Sequence, prec: int) -> PolyElement:
    """root_combination at rational roots: H(u_i) / prod (A_i - A_j) with H in z, u, y"""
    amplitudes = [zexp(Z * (-r), prec) * (r / (1 + r)) for r in roots]
    total = ZRING.zero
    for i, r in enumerate(roots):
        product = ZRING.one
        for j, other in enumerate(amplitudes):
            if j != i:
                product = zmul(product, amplitudes[i] - other, prec)
        total += zmul(H.subs(U, r), rs_series_inversion(product, Z, prec), prec)
    return ztrunc(total, prec)


def _symbolic_mismatch(H: PolyElement, m: int, N: int, with_y: bool) -> Optional[int]:
    """Order of the first difference between the explicit-root combination of H and v e^(zyv)"""
    roots = explicit_roots(m)
    H = ztrunc(H, N + 1)
    values = [compose_poly(H, U, r) for r in roots]
    lhs = root_combination(values, roots, N)
    rhs = compose_poly(exp_v_series(N, with_y), V, v_image(roots))
    if lhs == rhs:
        return None
    return z_valuation((lhs - rhs).num)


def _point_mismatch(H: PolyElement, m: int, N: int, with_y: bool) -> Optional[Tuple[int, int]]:
    """(u, order) of the first sample point where the combination fails"""
    prec = N + 1
    for point in sample_points(m):
        roots = sample_roots(m, point)
        v = _v_at(m, point)
        arg = Z * ZY * v if with_y else Z * v
        expected = ztrunc(zexp(arg, prec) * v, prec)
        order = z_valuation(point_combination(H, roots, prec) - expected)
        if order is not None:
            return point, order
    return None


def _m1_laurent_form(G: PolyElement, N: int) -> bool:
    """G(u) - G(1/u) = (1+u) e^(yz(u+2+1/u)) (e^(-zu) - e^(-z/u)/u)"""
    prec = N + 1
    lhs = LaurentU.of(G) - LaurentU.of(G).invert_u()
    weight = laurent_exp(LaurentU.from_terms({1: Z * ZY, 0: 2 * Z * ZY, -1: Z * ZY}), prec)
    bracket = laurent_exp(LaurentU.monomial(1, -Z), prec) - laurent_exp(LaurentU.monomial(-1, -Z), prec).divide_by_u(1)
    rhs = weight.mul(bracket, prec).mul(LaurentU.of(1 + U), prec)
    return lhs.truncate(prec) == rhs.truncate(prec)


def _symmetric_combination(m: int, N: int, G: PolyElement,
                           seed: Optional[int] = 0) -> Optional[Tuple[str, Optional[int]]]:
    """Reduce the combination through G = sum_k Phi_k(v) A^k: Lagrange interpolation over
    the m+1 amplitudes keeps only Phi_m, which must be v e^(zvy)"""
    prec = N + 1
    table = phi_recursion(m, N, sym_context(m, N))
    order = z_valuation(ztrunc(assemble_laurent(table).poly, prec) - G)
    if order is not None:
        return "sum_k Phi_k(v) A(u)^k differs from the solved series", order
    order = z_valuation(table[m] - exp_v_series(N))
    if order is not None:
        return "leading coefficient Phi_m differs from v e^(zvy)", order
    rng = random.Random(seed)
    for _ in range(RECONSTRUCT_TRIALS):
        values = rng.sample(range(-40, 41), m + 1)
        report = lagrange_check(values, [QQ(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)])
        if not report.ok:
            return f"Lagrange identities on {m + 1} points: {report.detail}", None
    return None


def combi_lin_check(m: int, N: int) -> CheckReport:
    """sum_i G(u_i, y) / prod_(j != i) (A_i - A_j) = v e^(zvy) for the solved series; explicit
    roots for m <= 2, the symmetric-function reduction beyond"""
    name = "combi-lin"
    G = transformed_poly(m, N)
    if m > 2:
        failure = _symmetric_combination(m, N, G)
        if failure is not None:
            detail, order = failure
            return CheckReport.failed(name, m, N, detail, order=order)
        return CheckReport.passed(name, m, N, "Lagrange reduction of sum_k Phi_k(v) A^k")
    if m == 1 and not _m1_laurent_form(G, N):
        return CheckReport.failed(name, m, N, "G(u) - G(1/u) differs from its closed form")
    failure = _point_mismatch(G, m, N, with_y=True)
    if failure is not None:
        point, order = failure
        return CheckReport.failed(name, m, N, f"combination at u={point} differs from v e^(zvy)", order=order)
    symbolic = min(N, MAX_SYMBOLIC_ROOT_ORDER)
    order = _symbolic_mismatch(G, m, symbolic, with_y=True)
    if order is not None:
        return CheckReport.failed(name, m, N, "combination over the explicit roots differs from v e^(zvy)",
                                  order=order)
    return CheckReport.passed(name, m, N, f"sample points {list(sample_points(m))}, explicit roots to z^{symbolic}")


def G1_alternative_form(m: int, N: int) -> PolyElement:
    """e^((m+1)z) (v A(u)^(m-1) - 1/A(u)) written as a polynomial in z, u"""
    prec = N + 1
    numerator = (1 + U) ** 2 * zexp(-(m - 1) * Z * U, prec) - (1 + U) * zexp(Z * U, prec)
    inner = LaurentU.of(numerator, 1)
    return zmul(zexp((m + 1) * Z, prec), inner.poly, prec) if inner.is_polynomial() else None


def _g1_symmetric_form(m: int, N: int) -> Optional[PolyElement]:
    """-(-1)^m e^((m+1)z) prod_i 1/A(u_i), using prod (1+u_i) = v, prod u_i = e_(m+1) and sum u_i = e_1"""
    prec = N + 1
    e = sym_context(m, N).e_all
    product_one_plus = laurent_to_v(sum(e[1:], e[0]), m)
    top = e[m + 1]
    if top.top_degree() != 0 or top.bottom_degree() != 0:
        return None
    inverse_top = 1 / top.constant_term().LC
    e1 = laurent_to_v(e[1], m)
    reciprocal = zmul(product_one_plus * inverse_top, zexp(VZ * e1, prec), prec)
    return zmul(zexp((m + 1) * VZ, prec), reciprocal, prec) * (-(-1) ** m)


def G1_satisfies_identity(m: int, N: int) -> CheckReport:
    """G_1(u) = e^((m+1)z)(v A^(m-1) - 1/A) and sum_i G_1(u_i) / prod (A_i - A_j) = v e^(zv)"""
    name = "g1-identity"
    G1 = closed_form_G1_poly(m, N)
    alternative = G1_alternative_form(m, N)
    if alternative is None or alternative != G1:
        return CheckReport.failed(name, m, N, "G_1 differs from e^((m+1)z)(v A^(m-1) - 1/A)",
                                  order=z_valuation(G1 - alternative) if alternative is not None else None)
    if _g1_symmetric_form(m, N) != exp_v_series(N, with_y=False):
        return CheckReport.failed(name, m, N, "Lagrange reduction of the combination differs from v e^(zv)")
    if m > 2:
        return CheckReport.passed(name, m, N, "alternative form and symmetric reduction")

    for point in sample_points(m):
        heads = [r / (1 + r) for r in sample_roots(m, point)]
        report = lagrange_check(heads, [1] * m)
        if not report.ok:
            return CheckReport.failed(name, m, N, f"Lagrange identities at A_i(z=0), u={point}: {report.detail}")
    failure = _point_mismatch(G1, m, N, with_y=False)
    if failure is not None:
        point, order = failure
        return CheckReport.failed(name, m, N, f"combination of G_1 at u={point}", order=order)
    symbolic = min(N, MAX_SYMBOLIC_ROOT_ORDER)
    order = _symbolic_mismatch(closed_form_G1_poly(m, symbolic), m, symbolic, with_y=False)
    if order is not None:
        return CheckReport.failed(name, m, N, "combination of G_1 over the explicit roots", order=order)
    return CheckReport.passed(name, m, N, "alternative form, symmetric reduction and explicit roots")


def trivariate_check(m: int, N: int) -> CheckReport:
    """sum_k Phi_k(v) A(u)^k and its positive-part form against the solved series"""
    name = "trivariate"
    prec = N + 1
    ctx = sym_context(m, N)
    table = phi_recursion(m, N, ctx)
    G = transformed_poly(m, N)

    assembled = ztrunc(assemble_laurent(table).poly, prec)
    order = z_valuation(assembled - G)
    if order is not None:
        return CheckReport.failed(name, m, N, "sum_k Phi_k(v) A(u)^k differs from the solver pipeline", order=order)
    if ztrunc(assembled.subs(ZY, 1), prec) != closed_form_G1_poly(m, N):
        return CheckReport.failed(name, m, N, "assembled series at y = 1 differs from G_1")

    positive = positive_part_laurent(ctx, table)
    if not positive.is_polynomial():
        return CheckReport.failed(name, m, N, "positive-part form keeps negative powers of u")
    order = z_valuation(ztrunc(positive.poly, prec) - G)
    if order is not None:
        return CheckReport.failed(name, m, N, "positive-part form differs from the solver pipeline", order=order)

    for k in range(m):
        for point in sample_points(m):
            v = _v_at(m, point)
            part = table.positive_parts[k]
            rebuilt = sum((part.evaluate(r) for r in sample_roots(m, point)), ZRING.zero) \
                - part.evaluate(-1) * (m + 1)
            if table[k].subs(V, v).set_ring(ZRING) != rebuilt:
                return CheckReport.failed(name, m, N, f"Phi_{k} at u={point} is not rebuilt from its positive part")
    logger.debug("trivariate form verified for m=%d to z^%d", m, N)
    return CheckReport.passed(name, m, N, "assembled and positive-part forms agree with the solver")


def random_v_polynomial(rng: random.Random, degree: int) -> PolyElement:
    """Random polynomial in v of the given degree with coefficients a + b y"""
    total = VRING.zero
    for d in range(degree + 1):
        a = QQ(rng.randint(-9, 9), rng.randint(1, 4))
        b = QQ(rng.randint(-3, 3))
        total += (a + b * VY) * V ** d
    return total


def random_laurent(rng: random.Random, spread: int = 3) -> LaurentU:
    """Random Laurent polynomial in u with exponents in [-spread, spread]"""
    return LaurentU.from_terms({e: QQ(rng.randint(-9, 9), rng.randint(1, 4)) for e in range(-spread, spread + 1)})


def _positive_part_laws(L: LaurentU) -> Optional[str]:
    positive, nonneg = L.positive_part(), L.nonneg_part()
    if positive.positive_part() != positive or nonneg.nonneg_part() != nonneg:
        return "positive parts are not idempotent"
    if nonneg != positive + LaurentU.of(L.constant_term()):
        return "[u^>=] differs from [u^>] + [u^0]"
    lhs, rhs = plus_one_identity(L)
    if lhs != rhs:
        return "[u^>](1+u)P differs from (1+u)[u^>]P + u[u^0]P"
    return None


def reconstruct_check(m: int, seed: Optional[int] = 0, trials: int = RECONSTRUCT_TRIALS,
                      max_degree: int = 8) -> CheckReport:
    """P(v) = P(0) + sum_i (P^>(u_i) - P^>(-1)) and the v <-> u round trip on random polynomials"""
    name = "reconstruct"
    rng = random.Random(seed)
    ctx = sym_context(m, window=max(max_degree, m + 2))
    for trial in range(trials):
        law = _positive_part_laws(random_laurent(rng))
        if law:
            return CheckReport.failed(name, m, None, law)
        P = random_v_polynomial(rng, rng.randint(0, max_degree))
        expanded = v_to_laurent(P, m)
        if laurent_to_v(expanded, m) != P:
            return CheckReport.failed(name, m, None, f"v -> u -> v round trip changes {P}")
        if reconstruct_from_positive_part(P, m, ctx) != P:
            return CheckReport.failed(name, m, None, f"{P} is not rebuilt from its positive part")
        positive = expanded.positive_part()
        constant = P.coeff_wrt(V, 0).set_ring(ZRING)
        for point in sample_points(m):
            rebuilt = constant + sum((positive.evaluate(r) for r in sample_roots(m, point)), ZRING.zero) \
                - positive.evaluate(-1) * (m + 1)
            if P.subs(V, _v_at(m, point)).set_ring(ZRING) != rebuilt:
                return CheckReport.failed(name, m, None, f"{P} at u={point} is not rebuilt from the roots")
    return CheckReport.passed(name, m, None, f"{trials} random polynomials of degree <= {max_degree}")


def _newton_failure(e: Sequence[LaurentU], p) -> Optional[str]:
    e2 = e[2] if len(e) > 2 else LaurentU.monomial(0, 0)
    if p(1) != e[1]:
        return "p_1 differs from e_1"
    if p(2) != e[1] * e[1] - e2 * 2:
        return "p_2 differs from e_1^2 - 2 e_2"
    return None


def _explicit_power_sums(m: int, k_max: int = 4) -> Optional[str]:
    """p_k of u_1, u_2 in s against the symmetric tables composed with u = (s^2 - 1)/4"""
    roots = explicit_roots(m)
    if not roots_satisfy_equation(roots):
        return "explicit roots do not solve (1+U)^(m+1) = U^m v"
    if m == 2 and set(radical_display_roots()) != set(roots[1:]):
        return "radical roots differ from the parametrised roots"
    ctx = sym_context(m, window=k_max)
    for k in range(-k_max, k_max + 1):
        expected = sum((r ** k for r in roots[1:]), URat.poly(roots[0].ring.zero, roots[0].var))
        table = ctx.power_sum("others", k).to_urat()
        if table.compose(roots[0]) != expected:
            return f"p_{k} of u_1..u_m differs from the explicit roots"
    return None


def symmetric_check(m: int, N: int) -> CheckReport:
    """Newton identities, the relations between both root families, and exact root evaluations"""
    name = "symmetric"
    ctx = sym_context(m, N)
    for family in ("all", "others"):
        failure = _newton_failure(ctx.elementary(family), lambda k: ctx.power_sum(family, k))
        if failure:
            return CheckReport.failed(name, m, N, f"{family} roots: {failure}")

    e_all, e_others = ctx.e_all, ctx.e_others
    if laurent_to_v(sum(e_all[1:], e_all[0]), m) != V:
        return CheckReport.failed(name, m, N, "prod (1 + u_i) differs from v")
    u = LaurentU.monomial(1, 1)
    zero = LaurentU.monomial(0, 0)
    for j in range(m + 2):
        own = e_others[j] if j <= m else zero
        previous = e_others[j - 1] if j else zero
        if e_all[j] != own + u * previous:
            return CheckReport.failed(name, m, N, f"e_{j} of all roots differs from e_{j} + u e_{j - 1} of the others")
    for k in range(-ctx.window, ctx.window + 1):
        if ctx.power_sum("all", k) - ctx.power_sum("others", k) != LaurentU.monomial(k, 1):
            return CheckReport.failed(name, m, N, f"p_{k} of all roots minus p_{k} of the others is not u^{k}")
    if m == 1 and ctx.power_sum("all", 1) != v_laurent(1) - 2:
        return CheckReport.failed(name, m, N, "p_1 differs from v - 2")

    for point in sample_points(m):
        for family in ("all", "others"):
            report = check_power_sums_at_point(ctx, family, point)
            if not report.ok:
                return report.model_copy(update={"N": N})
    if m <= 2:
        failure = _explicit_power_sums(m)
        if failure:
            return CheckReport.failed(name, m, N, failure)
    return CheckReport.passed(name, m, N, f"power sums on [-{ctx.window}, {ctx.window}]")
