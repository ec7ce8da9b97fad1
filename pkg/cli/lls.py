import click

from cli.common import (fail, ignore_warnings, manifest_path, prepare_output,
                        snr_option, start_run, workers_option)
from cli.root import cmd_root
from iac_link_abstraction.lls import (LlsConfig, measure_sweep,
                                      save_measurements)
from iac_link_abstraction.phy import load_channel_set


@cmd_root.group('lls')
@click.option(
    '--ignore',
    '-W',
    is_flag=True,
    help='Ignore warnings.'
)
def cmd_lls(ignore):
    """
    Run the link-level simulator.
    """
    ignore_warnings(ignore)


@cmd_lls.command('measure')
@click.option(
    '--config-file',
    required=True,
    help='Path to the YAML file of the link-level simulator (MCS, interferer order, stop rule, seed). See lls_config.yaml in the repository.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--channels-file',
    required=True,
    help='Path to a channel set written by "iacla channels generate".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@snr_option
@click.option(
    '--output-file',
    required=True,
    help='Path to the CSV measurement log to write. It serves as cached BLER source for training and abstraction.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
@workers_option
def cmd_lls_measure(config_file,
                    channels_file,
                    snr_grid_db,
                    output_file,
                    workers):
    """
    Measure the block error rate of every (realization, SNR) pair of a channel set.
    """
    try:
        config = LlsConfig.load_from_config_file(config_file)
        _, channel_set = load_channel_set(channels_file)
        manifest = start_run('lls measure',
                             {'lls': config.model_dump(mode='json'), 'snr_grid_db': list(snr_grid_db)},
                             master_seed=config.seed,
                             input_paths=[config_file, channels_file])

        records = measure_sweep(config, channel_set, snr_grid_db, workers)

        prepare_output(output_file)
        save_measurements(output_file, records, {'manifest_digest': manifest.digest})
        manifest.export(manifest_path(output_file), [output_file])
        click.echo(f'{len(records)} measurements were saved in {output_file}.')
    except Exception as e:
        fail(e)
