"""``starmat`` command line: eval, check, witness.

Exit codes: 0 success, 1 evaluation error, 2 usage error, 3 counterexample.
"""

from __future__ import annotations

import json
import sys

import click

from . import codec
from .checks import PROPERTIES, run_check
from .errors import StarmatError
from .expr import evaluate, format_value
from .scalars import get_backend
from .witnesses import WITNESSES

EXIT_EVAL, EXIT_COUNTEREXAMPLE = 1, 3


def _fail(exc: StarmatError) -> None:
    click.echo(str(exc), err=True)
    raise SystemExit(EXIT_EVAL)


def _parse_bindings(lets, backend) -> dict:
    env = {}
    for item in lets:
        name, sep, text = item.partition("=")
        name = name.strip()
        if not sep or not name.isidentifier():
            raise click.BadParameter(f"expected NAME=EXPR, got {item!r}", param_hint="--let")
        try:
            env[name] = evaluate(text, env, backend)
        except StarmatError as exc:
            click.echo(f"in --let {name}: ", err=True, nl=False)
            _fail(exc)
    return env


backend_option = click.option("--backend", type=click.Choice(["rational", "float"]),
                              default="rational", show_default=True)
json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")


@click.group()
def cli():
    """Exact star-product matrix algebra and the hyperbolic motion group."""


@cli.command("eval")
@click.argument("expression")
@click.option("--let", "lets", multiple=True, metavar="NAME=EXPR",
              help="Bind a name; later bindings may use earlier ones.")
@backend_option
@json_option
def eval_cmd(expression, lets, backend, as_json):
    """Evaluate EXPRESSION and print the result."""
    bk = get_backend(backend)
    env = _parse_bindings(lets, bk)
    try:
        value = evaluate(expression, env, bk)
    except StarmatError as exc:
        _fail(exc)
    click.echo(codec.dumps(value) if as_json else format_value(value))


@cli.command("check")
@click.argument("prop", metavar="PROPERTY", type=click.Choice(list(PROPERTIES)))
@click.option("--trials", type=click.IntRange(min=0), default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--exhaustive", is_flag=True, help="assoc2 only: every triple over {-1,0,1}.")
@backend_option
@json_option
def check_cmd(prop, trials, seed, exhaustive, backend, as_json):
    """Run a seeded property suite."""
    try:
        report = run_check(prop, trials, seed, backend, exhaustive)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    if as_json:
        click.echo(codec.dumps(report))
    else:
        status = "PASS" if report.passed else "FAIL"
        click.echo(f"{status} {report.property} [{report.backend}, {report.mode}] "
                   f"trials={report.trials} seed={report.seed} "
                   f"failures={len(report.failures)} ({report.elapsed_ms:.1f} ms)")
        for failure in report.failures:
            click.echo("  " + json.dumps(failure, separators=(",", ":")))
    if not report.passed:
        raise SystemExit(EXIT_COUNTEREXAMPLE)


@cli.command("witness")
@click.argument("name", type=click.Choice(list(WITNESSES)))
@click.argument("matrix", required=False)
@json_option
def witness_cmd(name, matrix, as_json):
    """Print a construction and the computation that verifies it."""
    if name == "zerodiv":
        if matrix is None:
            raise click.UsageError("zerodiv needs a MATRIX argument, e.g. \"[0,2;3,5]\"")
        try:
            result = WITNESSES[name](evaluate(matrix))
        except StarmatError as exc:
            _fail(exc)
    else:
        if matrix is not None:
            raise click.UsageError(f"{name} takes no MATRIX argument")
        result = WITNESSES[name]()
    if as_json:
        click.echo(json.dumps({"witness": name,
                               "values": {k: codec.encode_value(v) for k, v in result.items()}},
                              separators=(",", ":")))
    else:
        for key, value in result.items():
            click.echo(f"{key} = {format_value(value)}")


def main(argv=None):
    return cli.main(args=argv, prog_name="starmat")


if __name__ == "__main__":
    sys.exit(main())
