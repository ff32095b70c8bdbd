import json
import numpy as np
import pandas as pd
import pytest

import spoc.experiment.experiment as experiment_module
from spoc.__main__ import main
from spoc.classifiers import Dataset, train_size
from spoc.config import Config
from spoc.errors import ConfigError, ExperimentError
from spoc.experiment import OutputType, comparison_columns, emit_reports, \
                            outage_columns, run_experiment
from spoc.spectrum import PowerMatrix, get_band, write_csv
from spoc.tuning import tuning_history_columns

ALL_CLASSIFIERS = ['nbc', 'dt', 'svm', 'lr', 'hmm', 'trained-hmm', 'svm-ffa']
NUMBER_FILES = ['comparison.csv', 'outage.csv', 'calibration.json',
                'occupancy_vs_threshold.csv', 'bin_occupancy.csv',
                'tuning_history.csv', 'summary.csv', 'cdf.csv']


@pytest.fixture(scope='function')
def get_small_config():
    return {
            'band': 'band-880-890',
            'days': 2,
            'slots-per-day': 200,
            'split': [0.15, 0.3],
            'classifiers': ALL_CLASSIFIERS,

            'ffa-swarm-size': 4,
            'ffa-iterations': 3,

            'report-timings': False,
            'seed': 3,
           }


def write_config(path, values):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(values, f)
    return str(path)


def test_minimal_pipeline(get_small_config):
    config = get_small_config
    config.update({'days': 1, 'classifiers': ['nbc'], 'split': [0.3]})
    report = run_experiment(Config(config))
    assert len(report.comparison) == 1
    assert len(report.outage) == 1
    assert list(report.comparison.columns) == comparison_columns
    assert list(report.outage.columns) == outage_columns
    row = report.comparison.iloc[0]
    assert (row['day'], row['classifier'], row['split_ratio']) == \
        (1, 'nbc', 0.3)
    assert row['fit_seconds'] == 0.0
    n_test = 200 - train_size(200, 0.3)
    assert row['misdetections'] + row['false_alarms'] <= n_test
    assert np.isclose(row['ca'], 1 - (row['misdetections'] +
                                      row['false_alarms']) / n_test)


def test_row_counts_and_means(get_small_config):
    report = run_experiment(Config(get_small_config))
    assert report.skipped_days == {}
    assert len(report.comparison) == 2 * len(ALL_CLASSIFIERS) * 2
    assert len(report.outage) == 2 * len(ALL_CLASSIFIERS)
    assert set(report.calibration) == {'day-1', 'day-2'}
    day_one = report.calibration['day-1']
    assert set(day_one) == {'calibration_slots', 'criteria', 'report'}
    assert day_one['calibration_slots'] == train_size(200, 0.15)
    assert list(report.tuning_history.columns) == \
        ['day'] + tuning_history_columns
    assert set(report.tuning_history['day']) <= {1, 2}

    summary = report.summary
    assert len(summary) == len(ALL_CLASSIFIERS) * 2
    for _, row in summary.iterrows():
        rows = report.comparison[
            (report.comparison['classifier'] == row['classifier']) &
            np.isclose(report.comparison['split_ratio'], row['split_ratio'])]
        assert abs(row['mean_ca'] - rows['ca'].mean()) < 1e-12
        assert row['days'] == 2

    outage = report.outage
    assert np.allclose(outage['abs_difference'],
                       (outage['expected_outage'] -
                        outage['evaluated_outage']).abs())
    assert outage['evaluated_outage'].between(0, 1).all()
    first_split = report.comparison[report.comparison['split_ratio'] == 0.15]
    perfect = first_split[first_split['ca'] == 1.0]
    for _, row in perfect.iterrows():
        match = outage[(outage['day'] == row['day']) &
                       (outage['classifier'] == row['classifier'])]
        assert match['abs_difference'].iloc[0] == 0.0


def test_lr_skipped_on_wide_bands(get_small_config):
    config = get_small_config
    config['lr-max-bins'] = 4
    report = run_experiment(Config(config))
    assert 'lr' not in set(report.comparison['classifier'])
    assert len(report.comparison) == 2 * (len(ALL_CLASSIFIERS) - 1) * 2


def test_test_rows_never_reach_fit_or_calibrate(monkeypatch, get_small_config):
    tags = []
    original_require = Dataset.require_trainable

    def recording_require(self):
        tags.append(self.tag)
        return original_require(self)

    calibrated = []
    original_calibrate = experiment_module.calibrate

    def recording_calibrate(matrix, *args, **kwargs):
        calibrated.append(matrix.n_slots)
        return original_calibrate(matrix, *args, **kwargs)

    monkeypatch.setattr(Dataset, 'require_trainable', recording_require)
    monkeypatch.setattr(experiment_module, 'calibrate', recording_calibrate)
    run_experiment(Config(get_small_config))
    assert tags and 'test' not in tags
    assert set(tags) <= {'train', 'validation'}
    # One calibration per day, on the prefix shared by both splits.
    assert calibrated == [train_size(200, 0.15)] * 2


def test_reruns_are_byte_identical(tmp_path, get_small_config):
    outputs = []
    for name in ('first', 'second'):
        report = run_experiment(Config(get_small_config))
        written = emit_reports(report, tmp_path / name)
        assert sorted(p.name for p in written) == sorted(NUMBER_FILES)
        outputs.append({p.name: p.read_bytes() for p in written})
    assert outputs[0] == outputs[1]
    comparison = pd.read_csv(tmp_path / 'first' / 'comparison.csv')
    assert list(comparison.columns) == comparison_columns


def test_pictures(tmp_path, get_small_config):
    config = get_small_config
    config.update({'days': 1, 'classifiers': ['nbc', 'dt']})
    written = emit_reports(run_experiment(Config(config)), tmp_path,
                           OutputType.ALL)
    names = {p.name for p in written}
    assert {'occupancy_vs_threshold.png', 'ca_per_day.png',
            'outage.png'} <= names
    assert all(p.stat().st_size > 0 for p in written)


def constant_csv(tmp_path, n_slots=120):
    band = get_band('band-880-890')
    path = tmp_path / 'flat.csv'
    write_csv(PowerMatrix(band, np.full((n_slots, band.num_bins), -110.0)),
              path)
    return path


def test_every_day_failing_calibration(tmp_path, get_small_config):
    config = get_small_config
    config.update({'data-source': 'csv',
                   'csv-path': str(constant_csv(tmp_path)),
                   'slots-per-day': 60})
    with pytest.raises(ExperimentError):
        run_experiment(Config(config))
    config['days'] = 0
    with pytest.raises(ConfigError):
        run_experiment(Config(config))


def test_cli_compare(tmp_path, get_small_config):
    config = get_small_config
    config['out-dir'] = str(tmp_path / 'out')
    path = write_config(tmp_path / 'config.json', config)
    assert main(['compare', '--config', path, '--days', '1',
                 '--classifiers', 'nbc,hmm', '--split', '0.3']) == 0
    comparison = pd.read_csv(tmp_path / 'out' / 'comparison.csv')
    assert comparison['classifier'].tolist() == ['nbc', 'hmm']
    assert comparison['split_ratio'].tolist() == [0.3, 0.3]
    assert main(['outage', '--config', path, '--days', '1',
                 '--classifiers', 'dt']) == 0
    assert (tmp_path / 'out' / 'outage.csv').is_file()


def test_cli_exit_codes(tmp_path, get_small_config):
    assert main(['compare', '--days', '0']) == 2
    assert main(['compare', '--classifiers', 'knn']) == 2
    assert main(['stats', '--config', str(tmp_path / 'missing.json')]) == 2

    config = get_small_config
    config.update({'data-source': 'csv', 'days': 1, 'slots-per-day': 60,
                   'csv-path': str(constant_csv(tmp_path)),
                   'out-dir': str(tmp_path / 'out')})
    assert main(['compare', '--config',
                 write_config(tmp_path / 'flat.json', config)]) == 3


def test_cli_generate_stats_calibrate(tmp_path):
    out = tmp_path / 'generated'
    assert main(['generate', '--out-dir', str(out), '--days', '1',
                 '--seed', '2']) == 0
    assert (out / 'power.csv').is_file()
    assert (out / 'generator.json').is_file()

    config = {'data-source': 'csv', 'csv-path': str(out / 'power.csv'),
              'band': 'band-880-915', 'days': 1, 'out-dir': str(out)}
    path = write_config(tmp_path / 'csv.json', config)
    assert main(['stats', '--config', path]) == 0
    for name in ('occupancy_vs_threshold.csv', 'bin_occupancy.csv', 'cdf.csv'):
        assert (out / name).is_file()
    table = pd.read_csv(out / 'occupancy_vs_threshold.csv')
    assert (table['mean_occupancy'].diff().dropna() <= 0).all()

    assert main(['calibrate', '--config', path]) == 0
    criteria = json.loads((out / 'criteria.json').read_text())
    assert set(criteria) == {'gamma', 'u_oc', 'l_oc', 'b_min_run'}
    assert 'day-1' in json.loads((out / 'calibration.json').read_text())


def test_cli_get(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(['get', 'quick']) == 0
    values = json.loads((tmp_path / 'config.json').read_text())
    Config(values).validate()
    assert main(['get', 'no-such-config']) == 2


def test_cli_unwritable_out_dir(tmp_path):
    blocker = tmp_path / 'blocker'
    blocker.write_text('not a directory')
    for command in ('generate', 'stats'):
        assert main([command, '--days', '1', '--seed', '2',
                     '--out-dir', str(blocker / 'sub')]) == 3
