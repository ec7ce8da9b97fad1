import click

from cli.common import (fail, ignore_warnings, manifest_path, prepare_output,
                        snr_option, start_run, workers_option)
from cli.root import cmd_root
from iac_link_abstraction.abstraction import (abstract_link,
                                              append_beta_model,
                                              load_awgn_lut, load_beta_models,
                                              load_report, save_report,
                                              select_beta_model,
                                              validate_records)
from iac_link_abstraction.errors import ConfigError
from iac_link_abstraction.lls import LlsConfig, load_measurements, mcs_entry
from iac_link_abstraction.phy import load_channel_set, load_mib_table
from iac_link_abstraction.phy.numerics import from_db
from iac_link_abstraction.training import (LiveBlerSource, TableBlerSource,
                                           fit_beta_model, fit_static_model,
                                           save_trace)
from iac_link_abstraction.utils import SCHEMA_VERSION, export_to_json_file


@cmd_root.group('model')
@click.option(
    '--ignore',
    '-W',
    is_flag=True,
    help='Ignore warnings.'
)
def cmd_model(ignore):
    """
    Train, apply and validate ISR-adaptive combining-ratio models.
    """
    ignore_warnings(ignore)


def serving_mcs(scenario, lut, table):
    """
    MCS entry of the AWGN curve, framed onto the scenario codeword
    Raises ConfigError if the MIB table is of another modulation order
    """
    mcs1 = mcs_entry(lut.mcs, scenario.n_subcarriers, scenario.v1)
    if table.modulation != mcs1.modulation:
        raise ConfigError(f'MCS {mcs1.index} uses order {mcs1.modulation}, the MIB table is of order {table.modulation}')
    return mcs1


@cmd_model.command('train')
@click.option(
    '--channels-file',
    required=True,
    help='Path to the training channel set written by "iacla channels generate".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--mib-table',
    required=True,
    help='Path to the MIB table of the serving modulation order.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--lut-file',
    required=True,
    help='Path to the AWGN curve of the serving MCS, written by "iacla tables awgn-lut".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--mod2', required=True, help='Interferer modulation order.', type=click.Choice(['4', '16', '64']))
@snr_option
@click.option(
    '--measurements-file',
    help='Path to a measurement log written by "iacla lls measure", used as cached BLER source.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--lls-config-file',
    help='Path to the YAML file of the link-level simulator, used to measure BLER on the fly when no measurement log is given.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--static', is_flag=True, help='Fit the constant-ratio baseline (y0 = y1, no floor) instead of the adaptive model.')
@click.option('--label', default=None, help='Model label in the model table. Defaults to "adaptive" or "static".')
@click.option(
    '--models-file',
    required=True,
    help='Path to the CSV model table the trained model is appended to.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
@click.option(
    '--trace-file',
    help='Path to a CSV file where the search trace will be written.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
@workers_option
def cmd_model_train(channels_file,
                    mib_table,
                    lut_file,
                    mod2,
                    snr_grid_db,
                    measurements_file,
                    lls_config_file,
                    static,
                    label,
                    models_file,
                    trace_file,
                    workers):
    """
    Fit a combining-ratio model for one (serving MCS, interferer order) pair by directed search.
    """
    try:
        if not measurements_file and not lls_config_file:
            raise ConfigError('Provide --measurements-file or --lls-config-file as BLER source')

        scenario, channel_set = load_channel_set(channels_file)
        table = load_mib_table(mib_table)
        lut = load_awgn_lut(lut_file)
        mcs1 = serving_mcs(scenario, lut, table)
        mod2 = int(mod2)
        label = label or ('static' if static else 'adaptive')

        if measurements_file:
            source = TableBlerSource(load_measurements(measurements_file), mcs1.index, mod2)
            lls_config = None
        else:
            lls_config = LlsConfig.load_from_config_file(lls_config_file)
            if (lls_config.mcs.index, lls_config.mod2) != (mcs1.index, mod2):
                raise ConfigError(f'Simulator configured for ({lls_config.mcs.index}, {lls_config.mod2}), '
                                  f'training for ({mcs1.index}, {mod2})')
            source = LiveBlerSource(lls_config, workers)

        manifest = start_run('model train',
                             {'mcs1': mcs1.index, 'mod2': mod2, 'snr_grid_db': list(snr_grid_db),
                              'static': static, 'label': label,
                              'lls': lls_config.model_dump(mode='json') if lls_config else None},
                             master_seed=lls_config.seed if lls_config else None,
                             input_paths=[channels_file, mib_table, lut_file, measurements_file, lls_config_file])

        fit = fit_static_model if static else fit_beta_model
        result = fit(channel_set, snr_grid_db, source, mcs1, mod2, table, lut)

        prepare_output(models_file)
        append_beta_model(models_file, result.model, label, manifest.digest)
        output_files = [models_file]
        if trace_file:
            prepare_output(trace_file)
            save_trace(trace_file, result.trace, {'manifest_digest': manifest.digest, 'label': label})
            output_files.append(trace_file)

        manifest.export(manifest_path(models_file), output_files)
        model = result.model
        click.echo(f'Model "{label}" for MCS {mcs1.index} and interferer order {mod2}: '
                   f'y0={model.y0}, y1={model.y1}, beta_min={model.beta_min}, mse={result.mse:.6g}. '
                   f'It was appended to {models_file}.')
    except Exception as e:
        fail(e)


@cmd_model.command('abstract')
@click.option(
    '--channels-file',
    required=True,
    help='Path to the channel set to evaluate.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--models-file',
    required=True,
    help='Path to the CSV model table written by "iacla model train".',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--label', default=None, help='Label of the model to apply. Defaults to the last model trained for the pair.')
@click.option(
    '--mib-table',
    'mib_tables',
    required=True,
    multiple=True,
    help='Path to a MIB table. Repeat the option for several modulation orders.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--lut-file',
    required=True,
    help='Path to the AWGN curve of the serving MCS.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option('--mod2', required=True, help='Interferer modulation order.', type=click.Choice(['4', '16', '64']))
@snr_option
@click.option(
    '--measurements-file',
    help='Path to a measurement log; when given, measured BLER and its AWGN-equivalent SINR are added to the report.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--output-file',
    required=True,
    help='Path to the CSV report to write.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
def cmd_model_abstract(channels_file,
                       models_file,
                       label,
                       mib_tables,
                       lut_file,
                       mod2,
                       snr_grid_db,
                       measurements_file,
                       output_file):
    """
    Predict the BLER of every (realization, SNR) pair of a channel set.
    """
    try:
        scenario, channel_set = load_channel_set(channels_file)
        tables = {t.modulation: t for t in map(load_mib_table, mib_tables)}
        lut = load_awgn_lut(lut_file)
        mcs1 = mcs_entry(lut.mcs, scenario.n_subcarriers, scenario.v1)
        mod2 = int(mod2)
        model = select_beta_model(load_beta_models(models_file), mcs1.index, mod2, label)
        source = TableBlerSource(load_measurements(measurements_file), mcs1.index, mod2) if measurements_file else None

        manifest = start_run('model abstract',
                             {'mcs1': mcs1.index, 'mod2': mod2, 'label': label,
                              'model': model.model_dump(mode='json'), 'snr_grid_db': list(snr_grid_db)},
                             input_paths=[channels_file, models_file, *mib_tables, lut_file, measurements_file])

        records = []
        for channels in channel_set:
            for snr_db in snr_grid_db:
                bler_monte = source.bler(channels, snr_db) if source else None
                records.append(abstract_link(channels, float(from_db(-snr_db)), mcs1, mod2, model,
                                             tables, lut, bler_monte))

        prepare_output(output_file)
        save_report(output_file, records, {'manifest_digest': manifest.digest, 'mcs1': mcs1.index, 'mod2': mod2,
                                           'label': label or '', 'y0': model.y0, 'y1': model.y1,
                                           'beta_min': model.beta_min})
        manifest.export(manifest_path(output_file), [output_file])
        click.echo(f'{len(records)} predictions were saved in {output_file}.')
    except Exception as e:
        fail(e)


@cmd_model.command('validate')
@click.option(
    '--report-file',
    'report_files',
    required=True,
    multiple=True,
    help='Path to a report written by "iacla model abstract" with measurements. Repeat the option to compare models.',
    type=click.Path(exists=True, file_okay=True, dir_okay=False),
)
@click.option(
    '--output-file',
    required=True,
    help='Path to the JSON file where the accuracy statistics will be written.',
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
)
def cmd_model_validate(report_files,
                       output_file):
    """
    Compare predicted effective SINRs with the AWGN-equivalent SINRs of the measured BLERs.
    """
    try:
        manifest = start_run('model validate', {'reports': list(report_files)}, input_paths=report_files)

        reports = {}
        for report_file in report_files:
            _, records = load_report(report_file)
            reports[report_file] = validate_records(records)
            overall = reports[report_file]['overall']
            click.echo(f'{report_file}: RMS {overall["rms_db"]:.3f} dB, mean {overall["mean_db"]:.3f} dB '
                       f'over {overall["count"]} points.')

        prepare_output(output_file)
        export_to_json_file(output_file, {'schema_version': SCHEMA_VERSION,
                                          'manifest_digest': manifest.digest,
                                          'reports': reports})
        manifest.export(manifest_path(output_file), [output_file])
        click.echo(f'Accuracy statistics were saved in {output_file}.')
    except Exception as e:
        fail(e)
