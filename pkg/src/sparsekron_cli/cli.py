import logging
import shutil
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click
import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from sparsekron import __version__
from sparsekron.blackbox import (PolyFileError, PolySource, load_poly_file,
                                 source_from_text)
from sparsekron.errors import (ArityMismatch, BoundsViolated, NotPrime, ParseError,
                               RingTooSmall, UnknownVariable)
from sparsekron.interpolation import (MultivariateInterpolator,
                                      smallest_admissible_prime)
from sparsekron.models import RunConfig
from sparsekron.rings import Ring, ring_from_string
from sparsekron.utils.directory import Directory
from sparsekron.verify import run_suites
from sparsekron_cli.bench import bench_csv, bench_rows
from sparsekron_cli.errors import (BoundsError, CLIError, ConfigError,
                                   InputParseError, PropertyError, RingError)

load_dotenv()


CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def _configure_logging(level: str):
    # stdout carries the report, logs go to stderr
    logging.basicConfig(level=getattr(logging, level.upper()), stream=sys.stderr,
                        format=LOG_FORMAT, force=True)


@contextmanager
def _translate_errors():
    """Turn library errors into CLI errors with their exit codes."""
    try:
        yield
    except BoundsViolated as e:
        raise BoundsError(str(e))
    except RingTooSmall as e:
        raise RingError(str(e))
    except (ParseError, UnknownVariable, PolyFileError) as e:
        raise InputParseError(str(e))
    except (NotPrime, ArityMismatch, ValueError) as e:
        raise ConfigError(str(e))


def _validation_message(e: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(x) for x in err['loc']) or 'config'}: {err['msg']}"
        for err in e.errors()
    )


def _build_run_config(config_file: Optional[str],
                      overrides: Dict[str, Any]) -> RunConfig:
    defaults: Dict[str, Any] = {}
    if config_file is not None:
        try:
            defaults = RunConfig.load_defaults(Path(config_file))
        except (OSError, ValueError, yaml.YAMLError) as e:
            msg = f"Failed to load config file {config_file}. Reason: {e}"
            raise ConfigError(msg)
    if overrides.get("backend") not in (None, defaults.get("backend")):
        # backend params of the config file belong to another backend
        defaults.pop("backend_params", None)
    merged = {**defaults, **{k: v for k, v in overrides.items() if v is not None}}
    try:
        return RunConfig(**merged)
    except ValidationError as e:
        raise ConfigError(_validation_message(e))


def _build_interpolator(config: RunConfig) -> MultivariateInterpolator:
    try:
        return MultivariateInterpolator.from_config(config.interpolator_config())
    except (ValueError, TypeError) as e:
        raise ConfigError(f"Failed to build the interpolator. Reason: {e}")


def _resolve_ring(config: RunConfig,
                  interpolator: MultivariateInterpolator,
                  n: int,
                  T: int,
                  D: int) -> Ring:
    if not config.auto_ring:
        return ring_from_string(config.ring)
    q = smallest_admissible_prime(interpolator, n, T, D)
    logger.info(f"fq:auto resolved to q={q} for n={n} T={T} D={D}")
    return ring_from_string(f"fq:{q}")


def _load_source(config: RunConfig,
                 interpolator: MultivariateInterpolator) -> Tuple[PolySource, int, int]:
    """
    The polynomial source with its term and degree bounds. A `.poly` file
    brings its own ring and arity; its `T:` and `D:` only fill in bounds the
    flags leave out.
    """
    if config.file is not None:
        source = load_poly_file(config.file)
        if config.n is not None and config.n != source.n:
            raise ConfigError(f"-n {config.n} disagrees with n={source.n} in "
                              f"{config.file}")
        T, D = config.T or source.T, config.D or source.D
        if T is None or D is None:
            raise ConfigError(f"-T and -D are required, {config.file} sets neither")
        return source, T, D

    if config.n is None or config.T is None or config.D is None:
        raise ConfigError("-n, -T and -D are required with --expr and --sparse")
    ring = _resolve_ring(config, interpolator, config.n, config.T, config.D)
    text = config.expr if config.expr is not None else config.sparse
    assert text is not None
    source = source_from_text(text, config.n, ring, sparse=config.sparse is not None)
    return source, config.T, config.D


def _precheck_bounds(source: PolySource, T: int, D: int):
    """
    Reject a sum-of-terms source that already breaks the bounds. For an
    expression the degree hint is only an upper bound, so it is only logged.
    """
    hint = source.degree_hint()
    if source.poly is not None:
        if hint >= D:
            raise BoundsError(f"the polynomial has total degree {hint}, "
                              f"expected below D={D}")
        if source.poly.num_terms > T:
            raise BoundsError(f"the polynomial has {source.poly.num_terms} terms, "
                              f"expected at most T={T}")
    elif hint >= D:
        logger.info(f"expression degree may reach {hint}, D={D} assumes it "
                       f"stays below")


class SparseKronCommandGroup(click.Group):
    """
    A custom click Group that lets us control the order of commands in the help menu.
    """
    def __init__(self, name=None, commands=None, **attrs):
        super().__init__(name, commands, **attrs)
        self._commands_order = {
            "interp": 0,
            "bench": 1,
            "verify": 2,
            "create-config": 3,
        }

    def list_commands(self, ctx):
        return sorted(self.commands, key=lambda x: self._commands_order.get(x, 1000))


@click.group(invoke_without_command=True, context_settings=CONTEXT_SETTINGS,
             cls=SparseKronCommandGroup)
@click.version_option(__version__, "-v", "--version", prog_name="sparsekron")
@click.option("--log-level", default="WARNING", envvar="SPARSEKRON_LOG_LEVEL",
              type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help="Logging level on stderr. Defaults to WARNING.")
@click.pass_context
def cli(ctx, log_level: str):
    """
    \b
    Deterministic sparse interpolation of multivariate polynomials from
    black boxes, through base-changing and modulus-changing Kronecker
    substitutions.
    """
    _configure_logging(log_level)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command(
    help=(
        """
        \b
        Interpolate a black box polynomial.

        The polynomial comes from exactly one of --expr (any arithmetic
        expression in x1..xn), --sparse (sum of terms) or --file (a .poly
        file). It must have at most T terms and total degree below D.
        Exit codes: 2 on parse or config errors, 3 when the black box violates
        the bounds, 4 when the ring is too small for the run.
        """  # noqa: E501
    )
)
@click.option("--alg", "algorithm", default=None,
              type=click.Choice(["base", "modulus", "auto"]),
              help="Interpolation algorithm. Defaults to auto.")
@click.option("--backend", default=None, type=click.Choice(["lagrange", "bot"]),
              help="Univariate backend. Defaults to bot (Ben-Or/Tiwari).")
@click.option("--ring", default=None, envvar="SPARSEKRON_RING",
              help="`zz`, `fq:<q>` or `fq:auto`. Can also be set by the "
                   "`SPARSEKRON_RING` environment variable.")
@click.option("-n", "n", type=int, default=None, help="Number of variables.")
@click.option("-T", "T", type=int, default=None, help="Upper bound on the terms.")
@click.option("-D", "D", type=int, default=None,
              help="Strict upper bound on the total degree.")
@click.option("--expr", default=None, help="Expression black box.")
@click.option("--sparse", default=None, help="Polynomial in sum-of-terms form.")
@click.option("--file", "file", default=None,
              type=click.Path(exists=True, dir_okay=False), help="A .poly file.")
@click.option("--format", "output_format", default=None,
              type=click.Choice(["text", "json", "csv"]),
              help="Report format. Defaults to text.")
@click.option("--jobs", type=int, default=None,
              help="Threads for independent image interpolations.")
@click.option("--timings/--no-timings", default=False,
              help="Include the wall time in the report.")
@click.option("--config", "-c", default=None, envvar="SPARSEKRON_CONFIG_FILE",
              help="Path to a sparsekron config file. Can also be set by the "
                   "`SPARSEKRON_CONFIG_FILE` environment variable. Otherwise, the "
                   "built-in defaults are used.")
def interp(config: Optional[str], **options):
    run_config = _build_run_config(config, options)
    interpolator = _build_interpolator(run_config)
    with _translate_errors():
        source, T, D = _load_source(run_config, interpolator)
        _precheck_bounds(source, T, D)
        bb = source.to_blackbox()
        report = interpolator.interpolate(bb, T, D)
    click.echo(report.render(run_config.output_format,
                             timings=run_config.timings).rstrip("\n"))


def _parse_int_list(text: str) -> List[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"expected a comma-separated list of integers, got '{text}'")
    if not values or any(v < 1 for v in values):
        raise ConfigError(f"expected positive integers, got '{text}'")
    return values


@cli.command(
    help=(
        """
        \b
        Benchmark both interpolators on random polynomials.

        Builds one random polynomial per value of -T (n and D fixed) and
        interpolates it with each algorithm. Writes CSV with the probe and
        univariate interpolation counts; the first line records the seed.
        """  # noqa: E501
    )
)
@click.option("--seed", type=int, default=0, help="Generator seed.")
@click.option("-n", "n", type=click.IntRange(min=1), default=2)
@click.option("-T", "T_values", default="1,2,4",
              help="Comma-separated term counts, e.g. 1,2,4,8.")
@click.option("-D", "D", type=click.IntRange(min=1), default=4)
@click.option("--alg", "algorithm", default="both",
              type=click.Choice(["base", "modulus", "auto", "both"]))
@click.option("--backend", default="bot", type=click.Choice(["lagrange", "bot"]))
@click.option("--ring", default="zz", envvar="SPARSEKRON_RING",
              help="`zz`, `fq:<q>` or `fq:auto`.")
@click.option("--jobs", type=click.IntRange(min=1), default=1)
@click.option("--timings/--no-timings", default=False,
              help="Add a wall time column. The CSV is then not reproducible.")
@click.option("--progress/--no-progress", default=False)
@click.option("--output", "-o", default=None, type=click.Path(dir_okay=False),
              help="Write the CSV to a file instead of stdout.")
def bench(seed: int, n: int, T_values: str, D: int, algorithm: str, backend: str,
          ring: str, jobs: int, timings: bool, progress: bool, output: Optional[str]):
    algorithms = ["base", "modulus"] if algorithm == "both" else [algorithm]
    with _translate_errors():
        frame = bench_rows(seed, n, _parse_int_list(T_values), D, algorithms,
                           backend, ring.strip().lower(), jobs=jobs,
                           timings=timings, progress=progress)
    text = bench_csv(frame, seed, header=f"n={n} D={D} backend={backend}")
    if output is None:
        click.echo(text.rstrip("\n"))
        return
    Path(output).write_text(text, encoding="utf-8")
    click.echo(click.style(f"{len(frame)} rows written to {output}", fg="green"),
               err=True)


@cli.command(
    help=(
        """
        \b
        Run the property suites.

        `lemmas` checks the collision counting facts both interpolators rely on
        by brute force; `roundtrip` interpolates random polynomials with every
        algorithm and backend over the integers and the smallest admissible
        prime field. Exits with 1 and a minimized counterexample on failure.
        """  # noqa: E501
    )
)
@click.option("--scope", default="all",
              type=click.Choice(["lemmas", "roundtrip", "all"]))
@click.option("--seed", type=int, default=0, help="Generator seed.")
@click.option("--count", type=click.IntRange(min=0), default=50,
              help="Random instances per suite.")
@click.option("--progress/--no-progress", default=False)
def verify(scope: str, seed: int, count: int, progress: bool):
    if count == 0:
        click.echo(click.style("warning: --count 0 checks nothing", fg="yellow"),
                   err=True)
    result = run_suites(scope, seed, count, progress=progress)  # type: ignore[arg-type]
    click.echo(result.summary())
    if not result.passed:
        dump = [failure.model_dump() for failure in result.failures]
        click.echo(yaml.safe_dump(dump, sort_keys=False), err=True)
        raise PropertyError(f"{len(result.failures)} of {result.checks} property "
                            f"checks failed")


@cli.command(help="Writes the config templates to a directory.")
@click.argument("out_path", type=click.Path(), required=True)
def create_config(out_path):

    out_path = Path(out_path)

    if out_path.is_file():
        raise CLIError(f"Path expected to be a directory,"
                       f"but found a file at {out_path}")

    if out_path.exists() and any(out_path.iterdir()):
        click.confirm(click.style(f"Path {out_path} is not empty. Overwrite?",
                                  fg="red"),
                      abort=True)

    try:
        shutil.copytree(Directory.CONFIG_TEMPLATES, out_path, dirs_exist_ok=True)
    except Exception as e:
        raise CLIError(f"Failed to write config template to {out_path}. Reason:\n{e}")

    click.echo(click.style(f"Config templates written to {out_path}", fg="green"))


if __name__ == "__main__":
    cli()
