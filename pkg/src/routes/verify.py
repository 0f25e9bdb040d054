import click

from src.engine.verifier import SUITES, default_truncation, run_suite
from src.errors import EngineError, TruncationError
from src.models.report import Truncation
from src.routes.common import build_config, emit, fail, output_options


def _truncation(suite, nmax, margin):
    if nmax is None and margin is None:
        return None
    base = default_truncation(suite)
    return Truncation(base.nmax if nmax is None else nmax, base.interior_margin if margin is None else margin)


def format_reports(reports):
    lines = []
    for report in reports:
        nmax = report.truncation.nmax if report.truncation else '-'
        lines.append(f'{report.identity:<14} nmax={nmax:<3} states={report.states_checked:<6} {report.status}')
        if report.counterexample:
            lines.append(f'  counterexample: {report.counterexample}')
    return '\n'.join(lines)


@click.command('verify')
@click.argument('suite', type=click.Choice(SUITES + ('all',)))
@click.option('--nmax', type=int, default=None, help='Maximum total quanta of the truncation.')
@click.option('--margin', type=click.IntRange(min=0), default=None, help='Interior margin.')
@output_options
def verify_cmd(suite, nmax, margin, json_path, csv_path):
    """Check operator identities exactly on interior states."""
    config = build_config('verify', nmax=nmax, margin=margin, json_path=json_path, csv_path=csv_path)
    try:
        reports = run_suite(suite, _truncation(suite, config.nmax, config.margin))
    except TruncationError as e:
        raise click.UsageError(str(e))
    except EngineError as e:
        fail(str(e))
    rows = [['identity', 'nmax', 'states_checked', 'status']]
    rows.extend([r.identity, r.truncation.nmax if r.truncation else '', r.states_checked, r.status] for r in reports)
    emit(config, [r.to_dict() for r in reports], rows, format_reports(reports))
    if not all(r.passed for r in reports):
        raise SystemExit(1)
