import logging

import click

from src.config import DEFAULT_BATTERY_BOUND
from src.engine.decomposer import resolve
from src.errors import EngineError
from src.models.labels import IrrepLabel
from src.routes.common import build_config, emit, fail, lambdas_option, output_options

logger = logging.getLogger(__name__)


def battery_labels(bound):
    return sorted(IrrepLabel(p, s - p) for s in range(bound + 1) for p in range(s + 1))


def _row(report):
    first, second = report.factors
    repeated = [t for t in report.terms if t.multiplicity > 1]
    return {
        'factors': [[first.p, first.q], [second.p, second.q]],
        'terms': [[t.irrep.p, t.irrep.q, t.multiplicity] for t in report.terms],
        'agreement': report.oracle_agreement,
        'dimension_check': report.dimension_check,
        'distinct': all(t.distinct for t in repeated),
        'findings': list(report.findings),
    }


def format_rows(rows):
    lines = []
    for row in rows:
        (p1, q1), (p2, q2) = row['factors']
        terms = ' + '.join(f'{m}({p},{q})' if m > 1 else f'({p},{q})' for p, q, m in row['terms'])
        status = 'agree' if row['agreement'] and row['dimension_check'] else 'DISAGREE'
        distinct = 'distinct' if row['distinct'] else 'DEGENERATE'
        lines.append(f'({p1},{q1}) x ({p2},{q2}) = {terms}  [{status}, {distinct}]')
    return '\n'.join(lines)


@click.command('battery')
@click.option('--bound', type=click.IntRange(min=0), default=DEFAULT_BATTERY_BOUND,
              help='Every factor label with p+q <= bound.')
@lambdas_option
@output_options
def battery_cmd(bound, lambdas, json_path, csv_path):
    """Compare the Fock decomposition with the character oracle over all label pairs."""
    config = build_config('battery', bound=bound, lambdas=lambdas, json_path=json_path, csv_path=csv_path)
    labels = battery_labels(config.bound)
    rows = []
    try:
        for first in labels:
            for second in labels:
                report = resolve(first.p, first.q, second.p, second.q, coeffs=config.lambdas)
                rows.append(_row(report))
                logger.info('%r: agreement=%s', report, report.oracle_agreement)
    except EngineError as e:
        fail(str(e))
    table = [['p1', 'q1', 'p2', 'q2', 'agreement', 'dimension_check', 'distinct']]
    for row in rows:
        (p1, q1), (p2, q2) = row['factors']
        table.append([p1, q1, p2, q2, str(row['agreement']).lower(),
                      str(row['dimension_check']).lower(), str(row['distinct']).lower()])
    emit(config, rows, table, format_rows(rows))
    disagreements = [row['factors'] for row in rows if not (row['agreement'] and row['dimension_check'])]
    if disagreements:
        click.echo(f'disagreements: {disagreements}', err=True)
        raise SystemExit(1)
