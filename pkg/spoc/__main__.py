import os
import sys
import shutil
import logging
import argparse
from pathlib import Path

from spoc import __version__
from spoc.config import Config
from spoc.errors import ConfigError, ReportError, SpocError
from spoc.experiment import OutputType, day_segments, emit_reports, \
                            load_power_matrix, run_experiment, write_frame, \
                            write_json
from spoc.labeling import calibrate, save_criteria
from spoc.classifiers import train_size
from spoc.occupancy import bin_occupancy_table, occupancy_vs_threshold, \
                           threshold_grid
from spoc.spectrum import cdf_table, get_band, get_generator_config, \
                          generate_synthetic, preset_for_band, \
                          save_generator_config, write_csv

log = logging.getLogger('spoc')

__EXAMPLE_DIR = os.path.join(os.path.dirname(__file__), 'examples')
def get_available_configs():
    configs = os.listdir(__EXAMPLE_DIR)
    configs = [conf.replace('.json', '') for conf in configs
               if conf.endswith('.json')]
    return sorted(configs)


def load_config(args) -> Config:
    overrides = {}
    for option, value in (('seed', args.seed), ('out-dir', args.out_dir),
                          ('days', args.days),
                          ('classifiers', args.classifiers),
                          ('split', args.split)):
        if value is not None:
            overrides[option] = value
    if args.config:
        config = Config.from_json(args.config, overrides)
    else:
        config = Config(overrides)
    return config.validate()


def out_dir(config) -> Path:
    path = Path(config.get('out-dir'))
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ReportError(path, exc) from exc
    return path


def cmd_generate(config):
    if config.get('data-source') != 'generator':
        raise ConfigError("'generate' needs 'data-source': 'generator'.")
    band = get_band(config.get('band'))
    preset = config.get('generator-preset') or preset_for_band(band)
    generator = get_generator_config(preset, seed=config.getint('seed'))
    n_slots = config.getint('days') * config.getint('slots-per-day')
    matrix, truth = generate_synthetic(generator, n_slots, band)
    target = out_dir(config)
    write_csv(matrix, target / 'power.csv')
    save_generator_config(generator, target / 'generator.json')
    print(f'Generated {n_slots} slots x {band.num_bins} bins of {band.name} ' +
          f'({preset}), PU busy share {truth.pu_active.mean():.3f}.')


def cmd_stats(config):
    matrix, _ = load_power_matrix(config)
    target = out_dir(config)
    grid = threshold_grid(matrix, config.getint('stats-threshold-count'))
    table = occupancy_vs_threshold(matrix, grid)
    write_frame(table, target / 'occupancy_vs_threshold.csv')
    write_frame(bin_occupancy_table(matrix, config.getfloats('gammas')),
                target / 'bin_occupancy.csv')
    write_frame(cdf_table(matrix), target / 'cdf.csv')
    for gamma, mean in zip(table['gamma_dbm'], table['mean_occupancy']):
        print(f'gamma = {gamma:9.3f} dBm: mean occupancy {mean:.4f}')


def cmd_calibrate(config):
    matrix, _ = load_power_matrix(config)
    # Same prefix as the comparison run: the shortest training block.
    ratio = min(config.getfloats('split'))
    reports = {}
    first = None
    for index, day in enumerate(day_segments(matrix, config)):
        n1 = train_size(day.n_slots, ratio)
        criteria, report = calibrate(day.slice_rows(0, n1),
                                     config.getfloats('gammas'),
                                     config.getfloats('ms-grid'),
                                     config.getfloat('target-protection'))
        reports[f'day-{index + 1}'] = report.to_dict()
        first = first or criteria
        print(f'day {index + 1}: gamma = {criteria.gamma:g} dBm, ' +
              f'[l_oc, u_oc] = [{criteria.l_oc:g}, {criteria.u_oc:g}], ' +
              f'B = {criteria.b_min_run}')
    target = out_dir(config)
    write_json(reports, target / 'calibration.json')
    save_criteria(first, target / 'criteria.json')


def cmd_compare(config):
    report = run_experiment(config)
    if report is None:
        return
    emit_reports(report, out_dir(config),
                 OutputType.from_name(config.get('output-type')))
    print(report.summary.to_string(index=False))


def cmd_outage(config):
    report = run_experiment(config)
    if report is None:
        return
    write_frame(report.outage, out_dir(config) / 'outage.csv')
    means = report.outage.groupby('classifier', sort=False)[
        ['expected_outage', 'evaluated_outage', 'abs_difference']].mean()
    print(means.to_string())


def cmd_get(config_name):
    available = get_available_configs()
    if config_name not in available:
        print(f'Choose from: {", ".join(available)}')
        return 2
    shutil.copyfile(os.path.join(__EXAMPLE_DIR, f'{config_name}.json'),
                    'config.json')
    print(f'Wrote config.json from {config_name}.')
    return 0


commands = {
    'generate': cmd_generate,
    'stats': cmd_stats,
    'calibrate': cmd_calibrate,
    'compare': cmd_compare,
    'outage': cmd_outage,
}


def main(argv=None):
    parser = argparse.ArgumentParser(prog="spoc", usage="%(prog)s [options]")

    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="debug logging")
    subparsers = parser.add_subparsers(help="sub-command help",
                                       dest="subparser_name")

    for name in commands:
        sub = subparsers.add_parser(name, help=f"{name} step")
        sub.add_argument('--config', type=str, help="JSON config file")
        sub.add_argument('--seed', type=int)
        sub.add_argument('--out-dir', type=str)
        sub.add_argument('--days', type=int)
        sub.add_argument('--classifiers', type=str,
                         help="comma separated, e.g. nbc,dt,svm")
        sub.add_argument('--split', type=str,
                         help="comma separated training fractions")

    get_parser = subparsers.add_parser("get", help="copy an example config")
    available = get_available_configs()
    get_parser.add_argument('config_name', type=str,
                            help="Name of the config: {}".format(
                                ", ".join(available)))
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(levelname)s %(name)s: %(message)s')

    if args.subparser_name is None:
        parser.print_help()
        return 2
    if args.subparser_name == "get":
        return cmd_get(args.config_name)

    try:
        config = load_config(args)
        commands[args.subparser_name](config)
    except ConfigError as exc:
        log.error(f'Configuration error: {exc}')
        return 2
    except SpocError as exc:
        log.error(str(exc))
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
