import click

from cli.common import (fail, ignore_warnings, manifest_path, prepare_output,
                        start_run, workers_option)
from cli.root import cmd_root
from iac_link_abstraction.phy import (ScenarioConfig, generate_set,
                                      generate_sweep, save_channel_set)


@cmd_root.group('channels')
@click.option(
    '--ignore',
    '-W',
    is_flag=True,
    help='Ignore warnings.'
)
def cmd_channels(ignore):
    """
    Generate Rayleigh-fading channel sets of the two-cell interference scenario.
    """
    ignore_warnings(ignore)


@cmd_channels.command('generate')
@click.option(
    '--config-file',
    required=True,
    help='Path to the YAML file that specifies the scenario (antennas, layers, subcarriers, interferer scale, seed). See scenario_config.yaml in the repository.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--count',
    required=True,
    help='Number of realizations per interferer scale.',
    type=click.IntRange(min=1)
)
@click.option(
    '--rho',
    multiple=True,
    help='Interferer amplitude scale. Repeat the option to sweep several scales; defaults to the scale of the config file.',
    type=click.FloatRange(min=0)
)
@click.option(
    '--output-file',
    required=True,
    help='Path to the JSON file where the channel set will be written.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
@workers_option
def cmd_channels_generate(config_file,
                          count,
                          rho,
                          output_file,
                          workers):
    """
    Draw a reproducible channel set and save it with its run manifest.
    """
    try:
        config = ScenarioConfig.load_from_config_file(config_file)
        manifest = start_run('channels generate',
                             {'scenario': config.model_dump(mode='json'), 'count': count, 'rho': list(rho)},
                             master_seed=config.seed,
                             input_paths=[config_file])

        if rho:
            realizations = generate_sweep(config, count, rho, workers)
        else:
            realizations = generate_set(config, count, workers)

        prepare_output(output_file)
        save_channel_set(output_file, config, realizations, manifest.digest)
        manifest.export(manifest_path(output_file), [output_file])
        click.echo(f'{len(realizations)} channel realizations were saved in {output_file}.')
    except Exception as e:
        fail(e, f'Check the scenario in {config_file}. ')
