import click

from cli.common import (fail, ignore_warnings, manifest_path, prepare_output,
                        start_run, workers_option)
from cli.root import cmd_root
from iac_link_abstraction.oracle import (OracleConfig, beta_scatter,
                                         beta_trend, filter_mib_band,
                                         isr_curve, save_curve, save_scatter)
from iac_link_abstraction.phy import load_channel_set, load_mib_table
from iac_link_abstraction.phy.numerics import from_db
from iac_link_abstraction.utils import SCHEMA_VERSION, export_to_json_file


@cmd_root.group('oracle')
@click.option(
    '--ignore',
    '-W',
    is_flag=True,
    help='Ignore warnings.'
)
def cmd_oracle(ignore):
    """
    Evaluate the exact mutual information of the joint ML receiver.
    """
    ignore_warnings(ignore)


@cmd_oracle.command('scatter')
@click.option(
    '--channels-file',
    required=True,
    help='Path to a channel set written by "iacla channels generate".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--mib-table',
    required=True,
    help='Path to the MIB table of the serving modulation order, written by "iacla tables mib".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--config-file',
    help='Path to the YAML file of the oracle (noise samples, seed, layer). Defaults apply when omitted.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--mod2', required=True, help='Interferer modulation order.', type=click.Choice(['4', '16', '64']))
@click.option('--snr', 'snr_db', required=True, help='SNR in dB; the noise variance is 10^(-SNR/10).', type=float)
@click.option(
    '--band',
    nargs=2,
    default=None,
    help='Keep only points whose exact MIB lies in [LOW, HIGH] when computing the trend.',
    type=click.FloatRange(min=0, max=1)
)
@click.option('--bins', default=10, show_default=True, help='Number of ISR bins of the trend.', type=click.IntRange(min=1))
@click.option(
    '--output-file',
    required=True,
    help='Path to the CSV file of (isr, optimal beta) points. The trend summary is written next to it as JSON.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
@workers_option
def cmd_oracle_scatter(channels_file,
                       mib_table,
                       config_file,
                       mod2,
                       snr_db,
                       band,
                       bins,
                       output_file,
                       workers):
    """
    Compute the optimal combining ratio of every subcarrier of a channel set, and its median trend over ISR.
    """
    try:
        config = OracleConfig.load_from_config_file(config_file) if config_file else OracleConfig()
        table = load_mib_table(mib_table)
        _, channel_set = load_channel_set(channels_file)
        manifest = start_run('oracle scatter',
                             {'oracle': config.model_dump(mode='json'),
                              'mod2': int(mod2),
                              'snr_db': snr_db,
                              'band': list(band) if band else None,
                              'bins': bins},
                             master_seed=config.seed,
                             input_paths=[channels_file, mib_table, config_file])

        result = beta_scatter(channel_set, float(from_db(-snr_db)), table.modulation, int(mod2), table, config, workers)
        points = filter_mib_band(result.points, *band) if band else result.points
        trend = beta_trend(points, bins)

        prepare_output(output_file)
        save_scatter(output_file, result, {'manifest_digest': manifest.digest, 'mod1': table.modulation,
                                           'mod2': int(mod2), 'snr_db': snr_db})
        trend_file = f'{output_file}.trend.json'
        export_to_json_file(trend_file, {'schema_version': SCHEMA_VERSION,
                                         'manifest_digest': manifest.digest,
                                         'n_points': len(points),
                                         'n_degenerate': result.n_degenerate,
                                         'bin_centers': trend.bin_centers.tolist(),
                                         'medians': trend.medians.tolist(),
                                         'counts': trend.counts.tolist(),
                                         'kendall_tau': trend.kendall_tau})
        manifest.export(manifest_path(output_file), [output_file, trend_file])
        click.echo(f'{len(result.points)} scatter points ({result.n_degenerate} degenerate) were saved in {output_file}. '
                   f'Kendall tau of the median trend: {trend.kendall_tau:.3f}.')
    except Exception as e:
        fail(e)


@cmd_oracle.command('curve')
@click.option(
    '--channels-file',
    required=True,
    help='Path to a channel set written by "iacla channels generate".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--realization', default=0, show_default=True, help='Position of the realization in the channel set.',
              type=click.IntRange(min=0))
@click.option('--subcarrier', default=0, show_default=True, help='Subcarrier of the realization.',
              type=click.IntRange(min=0))
@click.option(
    '--rho',
    required=True,
    multiple=True,
    help='Interferer amplitude factor; repeat the option to sweep several values.',
    type=click.FloatRange(min=0)
)
@click.option(
    '--mib-table',
    required=True,
    help='Path to the MIB table of the serving modulation order, written by "iacla tables mib".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--config-file',
    help='Path to the YAML file of the oracle (noise samples, seed, layer). Defaults apply when omitted.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--mod2', required=True, help='Interferer modulation order.', type=click.Choice(['4', '16', '64']))
@click.option('--snr', 'snr_db', required=True, help='SNR in dB; the noise variance is 10^(-SNR/10).', type=float)
@click.option(
    '--output-file',
    required=True,
    help='Path to the CSV file of (rho, isr, bounds, exact MIB, optimal beta) rows.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
@workers_option
def cmd_oracle_curve(channels_file,
                     realization,
                     subcarrier,
                     rho,
                     mib_table,
                     config_file,
                     mod2,
                     snr_db,
                     output_file,
                     workers):
    """
    Follow the bounds, the exact mutual information and the optimal combining ratio of one subcarrier over ISR.
    """
    try:
        config = OracleConfig.load_from_config_file(config_file) if config_file else OracleConfig()
        table = load_mib_table(mib_table)
        _, channel_set = load_channel_set(channels_file)
        if realization >= len(channel_set):
            raise ValueError(f'The channel set holds {len(channel_set)} realizations, got index {realization}')
        scales = sorted(rho)
        manifest = start_run('oracle curve',
                             {'oracle': config.model_dump(mode='json'),
                              'realization': realization,
                              'subcarrier': subcarrier,
                              'rho': scales,
                              'mod2': int(mod2),
                              'snr_db': snr_db},
                             master_seed=config.seed,
                             input_paths=[channels_file, mib_table, config_file])

        points = isr_curve(channel_set[realization], subcarrier, scales, float(from_db(-snr_db)),
                           table.modulation, int(mod2), table, config, workers)

        prepare_output(output_file)
        save_curve(output_file, points, {'manifest_digest': manifest.digest, 'mod1': table.modulation,
                                         'mod2': int(mod2), 'snr_db': snr_db,
                                         'realization_seed': channel_set[realization].seed,
                                         'subcarrier': subcarrier})
        manifest.export(manifest_path(output_file), [output_file])
        click.echo(f'{len(points)} curve points were saved in {output_file}.')
    except Exception as e:
        fail(e)
