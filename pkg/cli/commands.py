"""
The five commands: lattice, intervals, series, verify, bijection

Each command returns the text to print and the process exit code.
"""
import logging
from typing import Callable, Dict, List, Tuple

from cli.cache import ResultCache
from cli.checks import get_all_checks, run_check
from cli.export import render
from cli.options import RunConfig
from config import EXIT_CAP, EXIT_MISMATCH, EXIT_OK
from errors import InvalidInputError, VerificationMismatch
from lattice.counting import check_closed_forms, count_rows
from lattice.paths import Labelling, PathWord, from_parking_function, parse_labelled, to_parking_function
from lattice.tamari import build_poset, parse_dot, to_dot
from reports import CheckReport, CountRow, VerifyReport
from series.qanalogue import q_coefficient_table
from series.solver import solve_functional_equation
from series.substitution import transformed_series

logger = logging.getLogger(__name__)

Outcome = Tuple[str, int]


def _cache(cfg: RunConfig) -> ResultCache:
    return ResultCache(cfg.cache_dir, cfg.use_cache)


def cmd_lattice(cfg: RunConfig) -> Outcome:
    """Hasse diagram of T_n^(m) as DOT, JSON, CSV covers or a text summary"""
    poset = build_poset(cfg.m, cfg.n, cfg.cap)
    if cfg.format == "dot":
        text = to_dot(poset)
        vertices, edges = parse_dot(text)
        if vertices != [p.word for p in poset.vertices] or edges != [(a.word, b.word) for a, b in poset.covers()]:
            raise VerificationMismatch("lattice", "DOT output does not read back to the same diagram")
        return text, EXIT_OK
    payload = {
        "stats": poset.stats(),
        "vertices": [p.word for p in poset.vertices],
        "covers": [{"lower": a.word, "upper": b.word} for a, b in poset.covers()],
    }
    if cfg.format == "text":
        return render(payload["stats"], "text"), EXIT_OK
    return render(payload, cfg.format, rows_key="covers"), EXIT_OK


def cmd_intervals(cfg: RunConfig) -> Outcome:
    """Counts and refined polynomials for n = 0..cfg.n, checked against the closed forms"""
    params = {"m": cfg.m, "n": cfg.n, "with_q": cfg.with_q}

    def compute() -> dict:
        payload = {"m": cfg.m, "rows": [row.model_dump() for row in count_rows(cfg.m, cfg.n, cfg.with_q, cfg.cap)]}
        if cfg.with_q:
            payload["q_table"] = [row.model_dump() for row in q_coefficient_table(cfg.m, cfg.n, cfg.cap)]
        return payload

    payload = _cache(cfg).fetch("intervals", params, compute)
    rows = check_closed_forms(cfg.m, [CountRow.model_validate(row) for row in payload["rows"]])
    payload["rows"] = [row.model_dump() for row in rows]
    return render(payload, cfg.format), EXIT_OK


def cmd_series(cfg: RunConfig) -> Outcome:
    """F(t; x, y) or, with --z, G(z; u, y) to order N"""
    params = {"m": cfg.m, "order": cfg.order, "with_q": cfg.with_q, "y_one": cfg.y_one, "z": cfg.z_series}

    def compute() -> dict:
        if cfg.z_series:
            if cfg.with_q:
                raise InvalidInputError("the change of variables to z is defined for the q-free series only")
            series = transformed_series(cfg.m, cfg.order, cfg.y_one)
            return series.to_dump(cfg.m, "G(z;u,1)" if cfg.y_one else "G(z;u,y)").model_dump()
        F = solve_functional_equation(cfg.m, cfg.order, cfg.with_q)
        if cfg.y_one:
            F = F.at(y=1)
        return F.to_dump(cfg.m, "F(t;x,1)" if cfg.y_one else "F(t;x,y)").model_dump()

    payload = _cache(cfg).fetch("series", params, compute)
    if cfg.format == "csv":
        rows = [{"order": n, "coeff": c} for n, c in enumerate(payload["coeffs"])]
        return render(rows, "csv"), EXIT_OK
    return render(payload, cfg.format), EXIT_OK


def _selected_checks(cfg: RunConfig) -> List[str]:
    registry = get_all_checks()
    if cfg.all_checks or not cfg.checks:
        return list(registry)
    unknown = [name for name in cfg.checks if name not in registry]
    if unknown:
        raise InvalidInputError(f"unknown checks {unknown}; available: {', '.join(registry)}")
    return list(cfg.checks)


def cmd_verify(cfg: RunConfig) -> Outcome:
    """Run the selected checks; a mismatch exits 3, a check stopped only by caps exits 2"""
    if cfg.list_checks:
        return "\n".join(get_all_checks()) + "\n", EXIT_OK
    reports: List[CheckReport] = []
    for name in _selected_checks(cfg):
        report = run_check(name, cfg)
        logger.info("%s: %s %s", name, report.status, report.detail)
        reports.append(report)
    failures = [r for r in reports if not r.ok]
    status = "fail" if failures else "pass"
    summary = VerifyReport(status=status, first_failure=failures[0].check if failures else None, checks=reports)
    if failures:
        first = failures[0]
        logger.error("check %s failed: %s", first.check, first.detail)
    payload = summary.model_dump()
    if any(not r.cap_exceeded for r in failures):
        code = EXIT_MISMATCH
    elif failures:
        code = EXIT_CAP
    else:
        code = EXIT_OK
    return render(payload, cfg.format, rows_key="checks"), code


def _labelling_payload(labelling: Labelling) -> dict:
    parking = to_parking_function(labelling)
    back = from_parking_function(parking.values, labelling.path.m, labelling.path.form)
    if (back.path, back.labels) != (labelling.path, labelling.labels):
        raise VerificationMismatch("bijection", f"{labelling.pretty()} does not survive the round trip")
    return {"labelling": labelling.to_dict(), "pretty": labelling.pretty(), "parking": parking.to_dict()}


def cmd_bijection(cfg: RunConfig) -> Outcome:
    """Labelled path to parking function or back"""
    if cfg.parking is not None:
        labelling = from_parking_function(cfg.parking, cfg.m, cfg.form)
    elif cfg.labelled is not None:
        labelling = parse_labelled(cfg.labelled, cfg.m)
    else:
        labelling = Labelling(path=PathWord.parse(cfg.path, cfg.m), labels=tuple(cfg.labels))
    return render(_labelling_payload(labelling), cfg.format), EXIT_OK


def get_all_commands() -> Dict[str, Callable[[RunConfig], Outcome]]:
    """Command name to handler"""
    return {
        "lattice": cmd_lattice,
        "intervals": cmd_intervals,
        "series": cmd_series,
        "verify": cmd_verify,
        "bijection": cmd_bijection,
    }


def run_command(cfg: RunConfig) -> Outcome:
    """Dispatch on cfg.command"""
    return get_all_commands()[cfg.command](cfg)
