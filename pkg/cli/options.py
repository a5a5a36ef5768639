"""
Validated run configuration built from the command line
"""
import os
from argparse import Namespace
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from config import (
    CACHE_DIR_ENV,
    DEFAULT_CACHE_DIR,
    DEFAULT_CHECK_ORDER,
    DEFAULT_CHECK_SIZE,
    DEFAULT_LOG_LEVEL,
    DEFAULT_VERTEX_CAP,
)
from errors import InvalidInputError

Command = Literal["lattice", "intervals", "series", "verify", "bijection"]
OutputFormat = Literal["json", "csv", "dot", "text"]


class RunConfig(BaseModel):
    """Everything one command needs"""
    model_config = ConfigDict(frozen=True)

    command: Command
    m: int = Field(1, ge=1, description="Slope parameter")
    n: int = Field(DEFAULT_CHECK_SIZE, ge=0, description="Path size for lattice-level work")
    order: int = Field(DEFAULT_CHECK_ORDER, ge=0, description="Series truncation order N")
    with_q: bool = False
    y_one: bool = False
    z_series: bool = Field(False, description="Dump G(z; u, y) instead of F(t; x, y)")
    format: OutputFormat = "json"
    cache_dir: Path = Path(DEFAULT_CACHE_DIR)
    use_cache: bool = True
    cap: int = Field(DEFAULT_VERTEX_CAP, ge=1)
    checks: List[str] = Field(default_factory=list)
    all_checks: bool = False
    list_checks: bool = False
    path: Optional[str] = None
    labels: Optional[List[int]] = None
    labelled: Optional[str] = None
    parking: Optional[List[int]] = None
    form: Literal["ballot", "dyck"] = "ballot"
    log_level: str = DEFAULT_LOG_LEVEL

    @model_validator(mode="after")
    def _check_inputs(self) -> "RunConfig":
        if self.format == "dot" and self.command != "lattice":
            raise ValueError("DOT output is only available for the lattice command")
        if self.command == "bijection":
            given = sum(x is not None for x in (self.path, self.labelled, self.parking))
            if given != 1:
                raise ValueError("bijection needs exactly one of --path/--labels, --labelled or --parking")
            if self.path is not None and self.labels is None:
                raise ValueError("--path needs --labels")
        return self

    @classmethod
    def from_args(cls, args: Namespace) -> "RunConfig":
        """Build from argparse output; --cache-dir beats the environment, which beats the default"""
        cache_dir = args.cache_dir or os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR
        level = "DEBUG" if args.verbose else "ERROR" if args.quiet else DEFAULT_LOG_LEVEL
        try:
            return cls(
                command=args.command,
                m=args.m,
                n=args.n,
                order=args.order,
                with_q=getattr(args, "with_q", False),
                y_one=getattr(args, "y_one", False),
                z_series=getattr(args, "z", False),
                format=args.format,
                cache_dir=Path(cache_dir),
                use_cache=not args.no_cache,
                cap=args.cap,
                checks=getattr(args, "check", None) or [],
                all_checks=getattr(args, "all", False),
                list_checks=getattr(args, "list", False),
                path=getattr(args, "path", None),
                labels=getattr(args, "labels", None),
                labelled=getattr(args, "labelled", None),
                parking=getattr(args, "parking", None),
                form=getattr(args, "form", "ballot"),
                log_level=level,
            )
        except ValidationError as exc:
            problems = "; ".join(f"{'.'.join(str(p) for p in e['loc']) or 'options'}: {e['msg']}"
                                 for e in exc.errors())
            raise InvalidInputError(problems) from None
