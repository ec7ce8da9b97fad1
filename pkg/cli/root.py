"""Topmost command line, kept separate to prevent import cycles."""
import logging

import click
from dotenv import find_dotenv, load_dotenv


@click.group('iacla')
@click.option(
    '--verbose',
    '-v',
    count=True,
    help='Log pipeline milestones to stderr. Repeat for per-move search details.'
)
def cmd_root(verbose):
    """
    Link abstraction toolkit for interference-aware maximum-likelihood receivers: channel generation, MIB and AWGN tables, link-level measurements, combining-ratio training, abstraction and validation.
    """
    # worker defaults may come from a .env file in the working directory
    load_dotenv(find_dotenv(usecwd=True))
    if verbose:
        logging.basicConfig(level=logging.DEBUG if verbose > 1 else logging.INFO,
                            format='%(levelname)s %(name)s: %(message)s')
