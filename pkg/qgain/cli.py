"""
Command-line interface.

Usage:
    qgain rank <file> [--float --tol T]
    qgain classify <file>
    qgain generate --family {cycle|infinity|theta|flower|spider} --params JSON -o <file>
    qgain verify-bounds --seed S [--samples N] [--max-n M] [--cell n,c,p ...] [--format json|csv] -o <report>
    qgain verify-extremal --seed S -o <report>

Exit codes: 0 success, 1 violations found, 2 input or configuration error.
"""
import json
import logging
import sys
from functools import wraps
from typing import Optional, Tuple

import click
from pydantic import ValidationError

from .config import Config
from .models.report import RunConfig
from .services.harness import classify_graph, generate_instance, rank_file, run_verify_bounds, run_verify_extremal
from .utils.exceptions import (
    ConfigurationError,
    FamilySpecError,
    GraphFileError,
    QuaternionParseError,
)
from .utils.graph_io import load_graph, save_graph
from .utils.report_io import write_report

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2

_INPUT_ERRORS = (GraphFileError, QuaternionParseError, ValidationError, ConfigurationError, FamilySpecError)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_ERROR)


def handle_input_errors(command):
    """Turn input errors into a one-line diagnostic and exit code 2."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(part) for part in first["loc"])
            _fail(f"{where}: {first['msg']}" if where else first["msg"])
        except _INPUT_ERRORS as e:
            _fail(str(e))
    return wrapper


def _print_json(data) -> None:
    click.echo(json.dumps(data, indent=2))


def _parse_cell(text: str) -> Tuple[int, int, int]:
    try:
        n, c, p = (int(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected n,c,p, got {text!r}", param_hint="--cell")
    return n, c, p


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging")
def cli(verbose: int):
    """Rank and characterization toolkit for quaternion unit gain graphs."""
    level = {0: Config.LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format=Config.LOG_FORMAT, stream=sys.stderr)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--float", "float_mode", is_flag=True, help="Floating-point elimination; decimal gains allowed")
@click.option("--tol", type=float, default=None, help="Float pivot tolerance (default from QGAIN_FLOAT_PIVOT_TOL)")
@handle_input_errors
def rank(path: str, float_mode: bool, tol: Optional[float]):
    """Print counts, cycle types, rank, structural rank and the lower bound of a graph file."""
    if tol is not None and tol <= 0:
        _fail(f"--tol must be positive, got {tol}")
    _print_json(rank_file(path, float_mode=float_mode, tol=tol))


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@handle_input_errors
def classify(path: str):
    """Print the rank report plus pendant cycles and characterization verdicts."""
    summary = classify_graph(load_graph(path))
    summary["path"] = path
    _print_json(summary)


@cli.command()
@click.option("--family", required=True, type=click.Choice(["cycle", "infinity", "theta", "flower", "spider"]))
@click.option("--params", "params_text", default="{}", help='JSON object, e.g. \'{"p": 4, "l": 3, "q": 4}\'')
@click.option("--seed", type=int, default=None, help="Seed for random free gains")
@click.option("--gain-mode", type=click.Choice(["one", "cayley", "lipschitz"]), default="one")
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@handle_input_errors
def generate(family: str, params_text: str, seed: Optional[int], gain_mode: str, output: str):
    """Write a family instance as a graph file with its parameters as metadata."""
    try:
        params = json.loads(params_text)
    except json.JSONDecodeError as e:
        _fail(f"--params is not valid JSON: {e.msg}")
    if not isinstance(params, dict):
        _fail("--params must be a JSON object")
    G, metadata = generate_instance(family, params, seed=seed, gain_mode=gain_mode)
    save_graph(G, output, metadata)
    click.echo(f"Wrote {family} instance (n={G.n}, m={G.m}, rank={metadata['rank']}) to {output}")


def _finish(report, output: str, fmt: str) -> None:
    write_report(report, output, fmt)
    summary = report.summary
    click.echo(
        f"{report.kind}: {summary.records} records, {summary.checks} checks, "
        f"{summary.violations} violations -> {output}"
    )
    sys.exit(EXIT_OK if summary.zero_violations else EXIT_VIOLATIONS)


@cli.command("verify-bounds")
@click.option("--seed", type=int, required=True)
@click.option("--samples", type=int, default=Config.DEFAULT_SAMPLES, show_default=True)
@click.option("--max-n", type=int, default=Config.DEFAULT_MAX_N, show_default=True)
@click.option("--max-c", type=int, default=Config.DEFAULT_MAX_C, show_default=True)
@click.option("--gain-mode", type=click.Choice(["cayley", "lipschitz"]), default="cayley", show_default=True)
@click.option("--cell", "cells", multiple=True, help="Target cell n,c,p; repeatable")
@click.option("--workers", type=int, default=Config.DEFAULT_WORKERS, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@handle_input_errors
def verify_bounds(seed, samples, max_n, max_c, gain_mode, cells, workers, fmt, output):
    """Random graphs over (n, c, p) cells against oracles, bounds and perturbation inequalities."""
    cfg = RunConfig(
        seed=seed, samples=samples, max_n=max_n, max_c=max_c, gain_mode=gain_mode,
        cells=[_parse_cell(text) for text in cells] or None, workers=workers,
    )
    _finish(run_verify_bounds(cfg), output, fmt)


@cli.command("verify-extremal")
@click.option("--seed", type=int, required=True)
@click.option("--samples", type=int, default=Config.DEFAULT_SAMPLES, show_default=True)
@click.option("--max-n", type=int, default=Config.DEFAULT_MAX_N, show_default=True)
@click.option("--gain-mode", type=click.Choice(["cayley", "lipschitz"]), default="cayley", show_default=True)
@click.option("--tol", "float_tol", type=float, default=Config.FLOAT_PIVOT_TOL, show_default=True)
@click.option("--workers", type=int, default=Config.DEFAULT_WORKERS, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@handle_input_errors
def verify_extremal(seed, samples, max_n, gain_mode, float_tol, workers, fmt, output):
    """Positive, near-miss and random family instances through the two-sided checkers."""
    cfg = RunConfig(
        seed=seed, samples=samples, max_n=max_n, gain_mode=gain_mode,
        float_tol=float_tol, workers=workers,
    )
    _finish(run_verify_extremal(cfg), output, fmt)


def main() -> None:
    cli()
