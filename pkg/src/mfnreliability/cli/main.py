"""
Command-line interface.

Subcommands:
    mps          Minimal path table (index, arcs, LP_j, CP_j(M)).
    dlmp         (d,λ)-MP set and search counters.
    reliability  R_(d,λ) computed from the (d,λ)-MP set.
    oracle       Brute-force result over the whole state space.
    verify       Search against oracle, PASS or FAIL.

Exit codes: 0 success or PASS, 1 verify FAIL, 2 input or validation error,
3 guard or state limit exceeded.
"""

import argparse
import logging
import os
import sys
from typing import Any, List, Literal, Optional, TextIO, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..core.config import settings
from ..core.exceptions import (
    GuardExceededError,
    MissingPMFError,
    NetworkSyntaxError,
    NetworkValidationError,
    StateLimitExceededError,
)
from ..graph.paths import enumerate_mps
from ..models.state import INFINITY, Demand
from ..oracle.brute_force import brute_force, compare
from ..reliability.union import reliability_from_dlmps
from ..schemas.network_file import load_network
from ..schemas.report import build_report
from ..search.dlmp import find_dlmps
from .formatting import render_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_LIMIT_EXCEEDED = 3


class RunConfig(BaseModel):
    """
    Parameters of one CLI run.

    Attributes:
        command (str): One of mps, dlmp, reliability, oracle, verify.
        network_path (str): Network file or bundled fixture name.
        d (Optional[int]): Demand; required by every command except mps.
        distance_limit (Union[int, float]): λ, alias ``lambda``; accepts "inf".
        output_format (str): "table" or "json".
        pmf (str): "file" keeps the document's pmfs, "uniform" fills missing ones.
        sigma_guard (int): Inclusion-exclusion guard.
        allow_large (bool): Ignore the guard.
        state_limit (int): Oracle state-space limit.
        parallelism (int): Worker threads; "auto" or 0 means one per CPU.
        method (str): "subsets" or "recursive".
        timing (bool): Include elapsed_ms in the report.
    """
    command: Literal["mps", "dlmp", "reliability", "oracle", "verify"]
    network_path: str
    d: Optional[int] = Field(default=None, ge=0)
    distance_limit: Union[int, float] = Field(default=INFINITY, alias="lambda")
    output_format: Literal["table", "json"] = "table"
    pmf: Literal["file", "uniform"] = "file"
    sigma_guard: int = Field(default_factory=lambda: settings.SIGMA_GUARD, ge=0)
    allow_large: bool = False
    state_limit: int = Field(default_factory=lambda: settings.STATE_LIMIT, ge=1)
    parallelism: int = Field(default_factory=lambda: settings.worker_count, ge=1)
    method: Literal["subsets", "recursive"] = "subsets"
    timing: bool = True

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    @field_validator("distance_limit", mode="before")
    @classmethod
    def _parse_limit(cls, value: Any) -> Union[int, float]:
        return Demand(d=0, distance_limit=value).distance_limit

    @field_validator("parallelism", mode="before")
    @classmethod
    def _parse_parallelism(cls, value: Any) -> int:
        if isinstance(value, str) and value.strip().lower() == "auto":
            return os.cpu_count() or 1
        value = int(value)
        if value <= 0:
            return os.cpu_count() or 1
        return value

    @model_validator(mode="after")
    def _check_demand(self) -> "RunConfig":
        if self.command != "mps" and self.d is None:
            raise ValueError(f"command {self.command} requires --demand")
        return self

    @property
    def demand(self) -> Demand:
        return Demand(d=self.d or 0, distance_limit=self.distance_limit)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--network", required=True,
                        help="Network JSON file, or a bundled fixture (example1, fig2)")
    common.add_argument("--demand", type=int, default=None, help="Required flow d")
    common.add_argument("--lambda", dest="distance_limit", default="inf",
                        help="Transmission distance limit (integer or 'inf', default inf)")
    common.add_argument("--format", dest="output_format", choices=["table", "json"], default="table")
    common.add_argument("--pmf", choices=["file", "uniform"], default="file",
                        help="Use the file's pmfs, or uniform pmfs on arcs lacking one")
    common.add_argument("--sigma-guard", type=int, default=settings.SIGMA_GUARD,
                        help="Largest (d,lambda)-MP count for subset inclusion-exclusion")
    common.add_argument("--allow-large", action="store_true", help="Ignore the sigma guard")
    common.add_argument("--state-limit", type=int, default=settings.STATE_LIMIT,
                        help="Largest state space the oracle will visit")
    common.add_argument("--workers", default=str(settings.PARALLELISM),
                        help="Worker threads (integer or 'auto'); output does not depend on it, "
                             "compare reports with --no-timing")
    common.add_argument("--method", choices=["subsets", "recursive"], default="subsets",
                        help="Inclusion-exclusion expansion")
    common.add_argument("--no-timing", action="store_true", help="Omit elapsed_ms so that repeated runs give byte-identical reports")
    common.add_argument("--log-level", default=settings.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])

    parser = argparse.ArgumentParser(
        prog="mfnrel",
        description="Exact (d,lambda)-MP enumeration and reliability for multistate flow networks.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, text in (
        ("mps", "List the minimal paths"),
        ("dlmp", "Enumerate the (d,lambda)-MPs"),
        ("reliability", "Compute R_(d,lambda)"),
        ("oracle", "Brute-force reference over all states"),
        ("verify", "Compare search and oracle"),
    ):
        subparsers.add_parser(command, parents=[common], help=text)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Validates the parsed arguments into a RunConfig.

    Raises:
        pydantic.ValidationError: If a value is out of range.
    """
    return RunConfig(
        command=args.command,
        network_path=args.network,
        d=args.demand,
        distance_limit=args.distance_limit,
        output_format=args.output_format,
        pmf=args.pmf,
        sigma_guard=args.sigma_guard,
        allow_large=args.allow_large,
        state_limit=args.state_limit,
        parallelism=args.workers,
        method=args.method,
        timing=not args.no_timing,
    )


def run(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """
    Executes one command and writes its report.

    Args:
        config (RunConfig): Validated parameters.
        out (Optional[TextIO]): Destination of the report, standard output by default.

    Returns:
        int: Process exit code.
    """
    try:
        network = load_network(config.network_path)
        if config.pmf == "uniform":
            network = network.with_uniform_pmfs(missing_only=True)
        paths = enumerate_mps(network)

        if config.command == "mps":
            report = build_report("mps", config.network_path, network, paths=paths)
        else:
            demand = config.demand
            needs_pmfs = config.command == "reliability"
            if needs_pmfs and not network.has_pmfs():
                raise MissingPMFError(network.missing_pmfs())
            result = None
            rel = None
            oracle = None
            outcome = None
            if config.command in ("dlmp", "reliability", "verify"):
                result = find_dlmps(network, demand, paths=paths, workers=config.parallelism)
            if result is not None and network.has_pmfs() and config.command != "dlmp":
                rel = reliability_from_dlmps(
                    result.dlmps,
                    network,
                    sigma_guard=config.sigma_guard,
                    allow_large=config.allow_large,
                    method=config.method,
                    workers=config.parallelism,
                )
            if config.command in ("oracle", "verify"):
                oracle = brute_force(network, demand, paths=paths, state_limit=config.state_limit)
            if config.command == "verify":
                outcome = compare(result, oracle, rel)
            report = build_report(
                config.command,
                config.network_path,
                network,
                demand=demand,
                result=result,
                reliability=rel,
                oracle=oracle,
                outcome=outcome,
                timing=config.timing,
            )
    except (NetworkSyntaxError, NetworkValidationError, MissingPMFError) as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR
    except OSError as e:
        logger.error(f"Cannot read network: {e}")
        return EXIT_INPUT_ERROR
    except (GuardExceededError, StateLimitExceededError) as e:
        logger.error(str(e))
        return EXIT_LIMIT_EXCEEDED

    out = out if out is not None else sys.stdout
    if config.output_format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(render_table(report, network) + "\n")
    if report.verify is not None and not report.verify.passed:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        config = config_from_args(args)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_INPUT_ERROR
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
