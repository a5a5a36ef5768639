"""
Registry of the verifications run by `verify`
"""
import logging
from typing import Callable, Dict

from algebra.identities import (
    G1_satisfies_identity,
    combi_lin_check,
    reconstruct_check,
    symmetric_check,
    trivariate_check,
)
from algebra.lagrange import lagrange_check, random_lagrange_check
from algebra.lambda_ops import lambda_suite_check
from cli.options import RunConfig
from errors import ResourceCapExceeded, VerificationMismatch
from lattice.counting import check_parking_bijection
from lattice.tamari import build_poset, check_decomposition_bijection, check_lattice, check_sublattice_embedding
from reports import CheckReport
from series.closed_forms import theorem_m1_check, theorem_main_check
from series.qanalogue import verify_q_specialization
from series.solver import check_augmented, check_solver_oracle
from series.substitution import check_transformed_equation

logger = logging.getLogger(__name__)

Check = Callable[[RunConfig], CheckReport]


def _sublattice(cfg: RunConfig) -> CheckReport:
    if check_sublattice_embedding(cfg.m, cfg.n, cfg.cap):
        return CheckReport.passed("sublattice", cfg.m, cfg.n, f"T_{cfg.n}^({cfg.m}) sits inside T_{cfg.m * cfg.n}")
    return CheckReport.failed("sublattice", cfg.m, cfg.n, "image is not the upper set of (u^m d^m)^n")


def _lagrange(cfg: RunConfig) -> CheckReport:
    for values, Q in (((2, 5), (7,)), ((1, 2, 3), (1, 3))):
        report = lagrange_check(values, Q)
        if not report.ok:
            return report
    return random_lagrange_check()


def _theorem_m1(cfg: RunConfig) -> CheckReport:
    if cfg.m != 1:
        return CheckReport.skipped("theorem-m1", cfg.m, cfg.order, "the double-sum form is specific to m = 1")
    return theorem_m1_check(cfg.order)


def _q_specialization(cfg: RunConfig) -> CheckReport:
    report = verify_q_specialization(cfg.m, cfg.n, cfg.cap)
    return CheckReport(check="q-specialization", m=cfg.m, N=cfg.n, status=report.status, detail=report.detail)


def get_all_checks() -> Dict[str, Check]:
    """Check name to callable, in the order `verify --all` runs them"""
    return {
        "sublattice": _sublattice,
        "lattice": lambda cfg: check_lattice(build_poset(cfg.m, cfg.n, cfg.cap)),
        "decomposition": lambda cfg: check_decomposition_bijection(cfg.n, cfg.cap),
        "paths": lambda cfg: check_parking_bijection(cfg.m, cfg.n, cfg.cap),
        "solver-oracle": lambda cfg: check_solver_oracle(cfg.m, cfg.n, cfg.with_q, cfg.cap),
        "augmented": lambda cfg: check_augmented(cfg.m, cfg.order, cfg.cap),
        "theorem-main": lambda cfg: theorem_main_check(cfg.m, cfg.order),
        "theorem-m1": _theorem_m1,
        "trivariate": lambda cfg: trivariate_check(cfg.m, cfg.order),
        "transformed-equation": lambda cfg: check_transformed_equation(cfg.m, cfg.order),
        "lambda": lambda cfg: lambda_suite_check(cfg.m, cfg.order),
        "lagrange": _lagrange,
        "symmetric": lambda cfg: symmetric_check(cfg.m, cfg.order),
        "reconstruct": lambda cfg: reconstruct_check(cfg.m),
        "combi-lin": lambda cfg: combi_lin_check(cfg.m, cfg.order),
        "g1-identity": lambda cfg: G1_satisfies_identity(cfg.m, cfg.order),
        "q-specialization": _q_specialization,
    }


def run_check(name: str, cfg: RunConfig) -> CheckReport:
    """Run one registered check; a mismatch or a cap raised from inside becomes a failed report"""
    check = get_all_checks()[name]
    logger.info("running %s for m=%d", name, cfg.m)
    try:
        report = check(cfg)
    except VerificationMismatch as exc:
        return CheckReport.failed(name, cfg.m, cfg.order, exc.detail, order=exc.order)
    except ResourceCapExceeded as exc:
        logger.warning("%s stopped: %s", name, exc)
        return CheckReport.capped(name, cfg.m, cfg.order, str(exc))
    if report.check != name:
        report = report.model_copy(update={"check": name})
    return report
