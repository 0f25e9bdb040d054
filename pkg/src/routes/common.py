"""Options and writers shared by the command modules."""
import csv
import json
from fractions import Fraction

import click

from src.models.command import CommandConfig


def _parse_lambdas(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(Fraction(v) for v in value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f'expected four rationals such as 1 or 1/2, got {" ".join(value)}')


def label_options(command):
    for name in ('q2', 'p2', 'q1', 'p1'):
        command = click.option(f'--{name}', type=click.IntRange(min=0), required=True)(command)
    return command


def lambdas_option(command):
    return click.option('--lambdas', nargs=4, type=str, default=None, callback=_parse_lambdas,
                        help="C4' coefficients l1 l2 l3 l4 (default 1 0 0 0).")(command)


def output_options(command):
    command = click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None)(command)
    return click.option('--json', 'json_path', type=click.Path(dir_okay=False), default=None)(command)


def build_config(subcommand, **fields):
    """CommandConfig from parsed flags; invalid values become usage errors (exit 2)."""
    fields = {k: v for k, v in fields.items() if v is not None}
    try:
        return CommandConfig(subcommand, **fields)
    except ValueError as e:
        raise click.UsageError(str(e))


def emit(config, data, rows, text):
    if config.json_path:
        with open(config.json_path, 'w') as f:
            json.dump(data, f, indent=2)
            f.write('\n')
    if config.csv_path:
        with open(config.csv_path, 'w', newline='') as f:
            csv.writer(f).writerows(rows)
    if config.format == 'text':
        click.echo(text)


def fail(message):
    click.echo(f'error: {message}', err=True)
    raise SystemExit(1)
