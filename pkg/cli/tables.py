import os

import click

from cli.common import (fail, ignore_warnings, manifest_path, prepare_output,
                        snr_option, start_run, workers_option)
from cli.root import cmd_root
from iac_link_abstraction.abstraction import save_awgn_lut
from iac_link_abstraction.lls import (DEFAULT_MCS_TABLE, LlsConfig,
                                      gen_awgn_lut, save_measurements)
from iac_link_abstraction.phy import MibGridSpec, build_mib_table, save_mib_table
from iac_link_abstraction.phy.constellation import SUPPORTED_ORDERS


@cmd_root.group('tables')
@click.option(
    '--ignore',
    '-W',
    is_flag=True,
    help='Ignore warnings.'
)
def cmd_tables(ignore):
    """
    Build the mapping tables of the abstraction: SNR to MIB per modulation order, SNR to BLER per MCS over AWGN.
    """
    ignore_warnings(ignore)


@cmd_tables.command('mib')
@click.option(
    '--order',
    'orders',
    multiple=True,
    default=SUPPORTED_ORDERS,
    show_default=True,
    help='Modulation order. Repeat the option for several orders.',
    type=click.Choice([str(order) for order in SUPPORTED_ORDERS])
)
@click.option('--min-db', default=MibGridSpec().min_db, show_default=True, type=float, help='First grid point in dB.')
@click.option('--max-db', default=MibGridSpec().max_db, show_default=True, type=float, help='Last grid point in dB.')
@click.option('--step-db', default=MibGridSpec().step_db, show_default=True, type=click.FloatRange(min=0, min_open=True), help='Grid step in dB.')
@click.option('--nodes', default=MibGridSpec().nodes, show_default=True, type=click.IntRange(min=2), help='Gauss-Hermite nodes per dimension.')
@click.option(
    '--output-dir',
    required=True,
    help='Path to the directory where mib_<order>.csv files will be written.',
    type=click.Path(exists=False, file_okay=False, dir_okay=True),
)
def cmd_tables_mib(orders,
                   min_db,
                   max_db,
                   step_db,
                   nodes,
                   output_dir):
    """
    Tabulate the per-bit mutual information of Gray-labeled QAM over AWGN.
    """
    try:
        grid_spec = MibGridSpec(min_db=min_db, max_db=max_db, step_db=step_db, nodes=nodes)
        orders = sorted({int(order) for order in orders})
        manifest = start_run('tables mib', {'orders': orders, 'grid': grid_spec.model_dump(mode='json')})

        prepare_output(output_dir, is_dir=True)
        output_files = []
        for order in orders:
            output_file = os.path.join(output_dir, f'mib_{order}.csv')
            save_mib_table(output_file, build_mib_table(order, grid_spec), manifest.digest)
            output_files.append(output_file)

        manifest.export(manifest_path(output_dir), output_files)
        click.echo(f'MIB tables for orders {orders} were saved in {output_dir}.')
    except Exception as e:
        fail(e)


@cmd_tables.command('awgn-lut')
@click.option(
    '--config-file',
    required=True,
    help='Path to the YAML file of the link-level simulator (scenario, stop rule, seed). See lls_config.yaml in the repository.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--mcs',
    'mcs_indices',
    multiple=True,
    default=tuple(DEFAULT_MCS_TABLE),
    show_default=True,
    help='MCS index of the default table. Repeat the option for several entries.',
    type=int
)
@snr_option
@click.option(
    '--max-extensions',
    default=10,
    show_default=True,
    help='How many grid steps the SNR grid may be extended on each side to capture the waterfall.',
    type=click.IntRange(min=0)
)
@click.option(
    '--output-dir',
    required=True,
    help='Path to the directory where awgn_lut_<mcs>.csv files and the measurement log will be written.',
    type=click.Path(exists=False, file_okay=False, dir_okay=True),
)
@workers_option
def cmd_tables_awgn_lut(config_file,
                        mcs_indices,
                        snr_grid_db,
                        max_extensions,
                        output_dir,
                        workers):
    """
    Measure the AWGN reference BLER curve of each MCS with the link-level simulator.
    """
    try:
        config = LlsConfig.load_from_config_file(config_file)
        manifest = start_run('tables awgn-lut',
                             {'lls': config.model_dump(mode='json'),
                              'mcs': list(mcs_indices),
                              'snr_grid_db': list(snr_grid_db),
                              'max_extensions': max_extensions},
                             master_seed=config.seed,
                             input_paths=[config_file])

        luts, records = gen_awgn_lut(config, mcs_indices, snr_grid_db, workers, max_extensions)

        prepare_output(output_dir, is_dir=True)
        output_files = []
        for index, lut in luts.items():
            output_file = os.path.join(output_dir, f'awgn_lut_{index}.csv')
            save_awgn_lut(output_file, lut, manifest.digest)
            output_files.append(output_file)

        log_file = os.path.join(output_dir, 'awgn_measurements.csv')
        save_measurements(log_file, records, {'manifest_digest': manifest.digest})
        output_files.append(log_file)

        manifest.export(manifest_path(output_dir), output_files)
        click.echo(f'AWGN curves for MCS {sorted(luts)} were saved in {output_dir}.')
    except Exception as e:
        fail(e, f'Check the simulator settings in {config_file}. ')
