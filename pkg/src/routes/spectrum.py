import click

from src.engine.decomposer import resolve_target
from src.errors import EngineError
from src.routes.common import build_config, emit, fail, label_options, lambdas_option, output_options


@click.command('spectrum')
@label_options
@click.option('--p', 'p', type=click.IntRange(min=0), required=True)
@click.option('--q', 'q', type=click.IntRange(min=0), required=True)
@lambdas_option
@output_options
def spectrum_cmd(p1, q1, p2, q2, p, q, lambdas, json_path, csv_path):
    """C4' spectrum on the highest-weight space of one coupled irrep (p,q)."""
    config = build_config('spectrum', labels=(p1, q1, p2, q2, p, q), lambdas=lambdas,
                          json_path=json_path, csv_path=csv_path)
    try:
        term = resolve_target(*config.labels, coeffs=config.lambdas)
    except EngineError as e:
        fail(str(e))
    eigenpairs = term.eigenpairs if term else []
    data = {
        'factors': [[p1, q1], [p2, q2]],
        'p': p,
        'q': q,
        'multiplicity': term.multiplicity if term else 0,
        'eigenpairs': [pair.to_dict() for pair in eigenpairs],
    }
    rows = [['value', 'multiplicity', 'exact']]
    rows.extend([pair.label, pair.multiplicity, str(pair.exact).lower()] for pair in eigenpairs)
    if term is None:
        text = f'({p},{q}) does not occur in ({p1},{q1}) x ({p2},{q2})'
    else:
        text = '\n'.join([f'({p},{q}) x{term.multiplicity}']
                         + [f'  {pair.label}  multiplicity {pair.multiplicity}'
                            + ('' if pair.exact else f'  (inexact, {pair.digits} digits, error {pair.error_bound})')
                            for pair in eigenpairs])
    emit(config, data, rows, text)
