import click

from src.engine.decomposer import resolve
from src.errors import EngineError
from src.routes.common import build_config, emit, fail, label_options, lambdas_option, output_options


def format_report(report):
    first, second = report.factors
    lines = [f'({first.p},{first.q}) x ({second.p},{second.q})']
    for term in report.terms:
        values = ', '.join(term.eigenvalue_labels)
        flag = '' if term.exact else '  (inexact)'
        lines.append(f'  ({term.irrep.p},{term.irrep.q}) x{term.multiplicity}  C4\' = [{values}]{flag}')
    lines.append(f'dimension check: {"ok" if report.dimension_check else "FAILED"}')
    lines.append(f'oracle agreement: {"ok" if report.oracle_agreement else "FAILED"}')
    for finding in report.findings:
        lines.append(f'finding: {finding}')
    return '\n'.join(lines)


@click.command('decompose')
@label_options
@lambdas_option
@output_options
def decompose_cmd(p1, q1, p2, q2, lambdas, json_path, csv_path):
    """Decompose (p1,q1) x (p2,q2) and label repeated irreps by the C4' spectrum."""
    config = build_config('decompose', labels=(p1, q1, p2, q2), lambdas=lambdas,
                          json_path=json_path, csv_path=csv_path)
    try:
        report = resolve(*config.labels, coeffs=config.lambdas)
    except EngineError as e:
        fail(str(e))
    emit(config, report.to_dict(), report.csv_rows(), format_report(report))
    if not report.consistent:
        raise SystemExit(1)
