import logging
import os
import sys
# DON'T CHANGE THIS !!!
sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

import click

from src.routes.battery import battery_cmd
from src.routes.decompose import decompose_cmd
from src.routes.oracle import oracle_cmd
from src.routes.spectrum import spectrum_cmd
from src.routes.verify import verify_cmd


@click.group(name='su3-resolve')
@click.option('-v', '--verbose', count=True, help='-v for progress, -vv for debug output.')
def cli(verbose):
    """Exact SU(3) outer multiplicity resolution on Schwinger boson Fock spaces."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)


cli.add_command(decompose_cmd)
cli.add_command(verify_cmd)
cli.add_command(battery_cmd)
cli.add_command(spectrum_cmd)
cli.add_command(oracle_cmd)


if __name__ == '__main__':
    cli()
