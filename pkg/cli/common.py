"""Options, error reporting and manifest handling shared by all commands."""
import os
import sys
import warnings

import click
from pydantic import ValidationError

from iac_link_abstraction.errors import LinkAbstractionError
from iac_link_abstraction.utils import create_directory, default_workers
from iac_link_abstraction.utils.manifest import RunManifest

DEFAULT_SNR_GRID_DB = (-2.0, 0.0, 2.0, 4.0, 6.0, 8.0, 10.0)


def ignore_warnings(ignore):
    if ignore:
        warnings.filterwarnings('ignore')


def workers_option(command):
    return click.option(
        '--workers',
        default=default_workers,
        show_default='IACLA_WORKERS or 1',
        help='Number of worker processes. Results do not depend on it.',
        type=click.IntRange(min=1)
    )(command)


def snr_option(command):
    return click.option(
        '--snr',
        'snr_grid_db',
        multiple=True,
        default=DEFAULT_SNR_GRID_DB,
        show_default=True,
        help='SNR point in dB. Repeat the option for several points.',
        type=float
    )(command)


def manifest_path(output_path, manifest_file=None):
    """
    Manifest next to the output file, or inside the output directory
    """
    if manifest_file:
        return manifest_file
    if os.path.isdir(output_path):
        return os.path.join(output_path, 'manifest.json')
    return f'{output_path}.manifest.json'


def prepare_output(output_path, is_dir=False):
    create_directory(output_path if is_dir else os.path.dirname(output_path))


def start_run(command, config, master_seed=None, input_paths=()):
    return RunManifest.for_run(command, config, master_seed, [p for p in input_paths if p])


def fail(e, hint=''):
    """
    Reports an error and terminates with its exit code
    2 usage or configuration, 3 data or format, 4 numerical failure
    """
    if isinstance(e, ValidationError):
        fields = '; '.join(f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}"
                           for error in e.errors())
        click.echo(f'An error of type ConfigError occurred. Check the configuration file. More info: {fields}.', err=True)
        sys.exit(2)

    if isinstance(e, LinkAbstractionError):
        exit_code = e.exit_code
    elif isinstance(e, (OSError, KeyError, ValueError)):
        exit_code = 3
    else:
        exit_code = 1

    click.echo(f'An error of type {type(e).__name__} occurred. {hint}More info: {str(e)}.', err=True)
    sys.exit(exit_code)
