"""
m-Tamari interval toolkit
Command-line entry point
"""
import argparse
import logging
import sys
from typing import List, Optional

from cli.checks import get_all_checks
from cli.commands import run_command
from cli.options import RunConfig
from config import DEFAULT_CHECK_ORDER, DEFAULT_CHECK_SIZE, DEFAULT_VERTEX_CAP, LOG_FORMAT
from errors import InvalidInputError, TamariError

logger = logging.getLogger("tamari")

PROJECT_TITLE = "m-Tamari interval toolkit"
PROJECT_VERSION = "1.0.0"


class _Parser(argparse.ArgumentParser):
    """argparse usage errors raise InvalidInputError"""

    def error(self, message: str):
        raise InvalidInputError(message)


def _common_options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--m", type=int, default=1, help="slope parameter m >= 1")
    common.add_argument("--n", type=int, default=DEFAULT_CHECK_SIZE, help="path size (or largest size)")
    common.add_argument("--order", type=int, default=DEFAULT_CHECK_ORDER, help="series truncation order N")
    common.add_argument("--format", choices=["json", "csv", "dot", "text"], default="json")
    common.add_argument("--cache-dir", default=None, help="cache directory (overrides the environment)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="largest poset to build")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    noise.add_argument("--quiet", action="store_true", help="errors only on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with one sub-command per operation"""
    common = _common_options()
    parser = _Parser(prog="tamari", description=PROJECT_TITLE)
    parser.add_argument("--version", action="version", version=f"%(prog)s {PROJECT_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("lattice", parents=[common], help="Hasse diagram of T_n^(m)")

    intervals = sub.add_parser("intervals", parents=[common], help="interval counts for sizes 0..n")
    intervals.add_argument("--with-q", action="store_true", help="refine by Tamari distance")

    series = sub.add_parser("series", parents=[common], help="truncated generating function")
    series.add_argument("--with-q", action="store_true", help="keep the distance variable q")
    series.add_argument("--y-one", action="store_true", help="specialize y = 1")
    series.add_argument("--z", action="store_true", help="dump G(z; u, y) after the change of variables")

    verify = sub.add_parser("verify", parents=[common], help="run verifications")
    verify.add_argument("--check", action="append", choices=list(get_all_checks()), help="check to run (repeatable)")
    verify.add_argument("--all", action="store_true", help="run every registered check")
    verify.add_argument("--list", action="store_true", help="print the registered checks")
    verify.add_argument("--with-q", action="store_true", help="solver-oracle on the q-refined series")

    bijection = sub.add_parser("bijection", parents=[common], help="labelled paths and parking functions")
    bijection.add_argument("--path", help="path word (N/E or u/d)")
    bijection.add_argument("--labels", type=int, nargs="+", help="labels of the north steps, bottom to top")
    bijection.add_argument("--labelled", help="labelled path such as N1EN2E")
    bijection.add_argument("--parking", type=int, nargs="+", help="parking function values f(1) .. f(n)")
    bijection.add_argument("--form", choices=["ballot", "dyck"], default="ballot", help="form of the output path")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse, run, print; TamariError becomes its exit code"""
    try:
        cfg = RunConfig.from_args(build_parser().parse_args(argv))
    except TamariError as exc:
        logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
        logger.error("%s", exc)
        return exc.exit_code
    logging.basicConfig(level=cfg.log_level, format=LOG_FORMAT, stream=sys.stderr)
    try:
        text, code = run_command(cfg)
    except TamariError as exc:
        logger.error("%s", exc)
        return exc.exit_code
    except KeyboardInterrupt:
        logger.error("interrupted")
        return 130
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
