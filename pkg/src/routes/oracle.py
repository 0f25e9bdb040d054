import click

from src.engine.oracle import tensor_decompose
from src.errors import EngineError
from src.models.labels import IrrepLabel
from src.routes.common import build_config, emit, fail, label_options, output_options


@click.command('oracle')
@label_options
@output_options
def oracle_cmd(p1, q1, p2, q2, json_path, csv_path):
    """Character-theoretic decomposition only, without copy labels."""
    config = build_config('oracle', labels=(p1, q1, p2, q2), json_path=json_path, csv_path=csv_path)
    first, second = IrrepLabel(p1, q1), IrrepLabel(p2, q2)
    try:
        result = tensor_decompose(first, second)
    except EngineError as e:
        fail(str(e))
    data = {
        'factors': [[p1, q1], [p2, q2]],
        'terms': [{'p': label.p, 'q': label.q, 'multiplicity': m} for label, m in result.items()],
    }
    rows = [['p', 'q', 'multiplicity']]
    rows.extend([label.p, label.q, m] for label, m in result.items())
    text = ' + '.join(f'{m}({label.p},{label.q})' if m > 1 else f'({label.p},{label.q})'
                      for label, m in result.items())
    emit(config, data, rows, f'({p1},{q1}) x ({p2},{q2}) = {text}')
