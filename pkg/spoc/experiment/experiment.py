"""The day-by-day comparison of PU status classifiers."""
import logging
import time
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from ..classifiers import ConstantModel, Dataset, evaluate, get_classifier, \
                          majority_class, split, svm_fit, train_size
from ..config import Config
from ..errors import CalibrationError, ContractError, ConvergenceError, \
                    ExperimentError, SplitError
from ..hmm import StateSequence, default_hmm, discretize_observations, \
                  estimate_hmm, hmm_predict
from ..labeling import calibrate, label_pu
from ..occupancy import bin_occupancy_table, occupancy_vs_threshold, \
                        slot_occupancy, threshold_grid, threshold_status
from ..outage import su_outage_probability
from ..spectrum import cdf_table, generate_synthetic, get_band, \
                       get_generator_config, load_csv, preset_for_band
from ..tuning import SwarmConfig, svm_ffa_fit, tuning_history_columns, \
                    tuning_history_frame
from .transport import DayTransport

log = logging.getLogger(__name__)

comparison_columns = ['day', 'classifier', 'split_ratio', 'ca',
                      'misdetections', 'false_alarms', 'fit_seconds',
                      'predict_seconds']
outage_columns = ['day', 'classifier', 'expected_outage', 'evaluated_outage',
                  'abs_difference']
summary_columns = ['classifier', 'split_ratio', 'mean_ca', 'mean_fit_seconds',
                   'mean_predict_seconds', 'days']


@dataclass
class DayResult:
    day: int
    comparison: list = field(default_factory=list)
    outage: list = field(default_factory=list)
    calibration: dict = field(default_factory=dict)
    tuning_history: list = field(default_factory=list)
    skipped: str = ''


@dataclass
class ComparisonReport:
    comparison: pd.DataFrame
    outage: pd.DataFrame
    calibration: dict
    tuning_history: pd.DataFrame
    occupancy_vs_threshold: pd.DataFrame
    bin_occupancy: pd.DataFrame
    cdf: pd.DataFrame
    skipped_days: dict = field(default_factory=dict)

    @property
    def summary(self) -> pd.DataFrame:
        grouped = self.comparison.groupby(['classifier', 'split_ratio'],
                                          sort=False)
        summary = grouped.agg(mean_ca=('ca', 'mean'),
                              mean_fit_seconds=('fit_seconds', 'mean'),
                              mean_predict_seconds=('predict_seconds', 'mean'),
                              days=('day', 'count')).reset_index()
        return summary[summary_columns]

    def mean_ca(self, classifier, split_ratio=None):
        rows = self.comparison[self.comparison['classifier'] == classifier]
        if split_ratio is not None:
            rows = rows[np.isclose(rows['split_ratio'], split_ratio)]
        return float(rows['ca'].mean())


def load_power_matrix(config: Config):
    """
    Power matrix of the configured source: a CSV file for 'csv', or
    days * slots-per-day synthetic slots of the band otherwise.

    Returns
    -------
    (PowerMatrix, GroundTruth or None)
    """
    band = get_band(config.get('band'))
    if config.get('data-source') == 'csv':
        return load_csv(config.get('csv-path'), band), None
    preset = config.get('generator-preset') or preset_for_band(band)
    generator = get_generator_config(preset, seed=config.getint('seed'))
    n_slots = config.getint('days') * config.getint('slots-per-day')
    return generate_synthetic(generator, n_slots, band)


def day_segments(matrix, config: Config):
    slots_per_day = config.getint('slots-per-day')
    days = matrix.day_segments(slots_per_day)
    if not days:
        log.info(f'Less than one day of data ({matrix.n_slots} slots); the ' +
                 'whole matrix is used as one day.')
        days = [matrix]
    return days[:config.getint('days')]


class _Timer:
    def __init__(self, enabled):
        self.enabled = enabled
        self.seconds = 0.0

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if self.enabled:
            self.seconds = time.perf_counter() - self._start


def _fit_supervised(name, config, train):
    fit = get_classifier(name, config)
    try:
        return fit(train)
    except ContractError as exc:
        # Only the SVM refuses single-class data.
        log.warning(f'{name}: {exc} Predicting the majority class.')
    except ConvergenceError as exc:
        log.warning(f'{name}: {exc}. Predicting the majority class.')
    return ConstantModel(majority_class(train.labels))


def _fit_svm_ffa(train, config, day, rows_out):
    box = config.getfloat('svm-box-constraint', 1.0)
    max_iter = config.getint('svm-max-iter', 10000)
    tolerance = config.getfloat('svm-tolerance', 1e-3)
    n_val = train_size(train.n_samples, config.getfloat('ffa-validation-fraction'))
    n_fit = train.n_samples - n_val
    fit_part = train.rows(0, n_fit, 'train')
    validation = train.rows(n_fit, train.n_samples, 'validation')
    if n_fit < 1 or fit_part.classes.size < 2 or validation.classes.size < 2:
        log.warning(f'day {day}: svm-ffa cannot hold out a two-class ' +
                    f'validation block; using Box_ct = {box}.')
        return _fit_supervised('svm', config, train)

    swarm = SwarmConfig.from_config(config, seed=config.getint('seed') + day)
    try:
        _, result = svm_ffa_fit(fit_part, validation, swarm, max_iter,
                                tolerance)
        model = svm_fit(train, result.best_position, max_iter, tolerance)
    except ConvergenceError as exc:
        log.warning(f'day {day}: svm-ffa {exc}. Predicting the majority class.')
        return ConstantModel(majority_class(train.labels))
    if rows_out is not None:
        history = tuning_history_frame(result)
        history.insert(0, 'day', day)
        rows_out.extend(history.to_dict('records'))
    return model


def run_day(day_index, matrix, config: Config) -> DayResult:
    """
    Calibrate on the shortest training prefix, label, split and score every
    configured classifier for one day. Days are numbered from 1.
    """
    day = day_index + 1
    result = DayResult(day)
    classifiers = config.getlist('classifiers')
    splits = config.getfloats('split')
    timed = config.getbool('report-timings', True)
    out_su = config.getint('out-su')
    mode = config.get('outage-mode', 'as-written')
    inclusive = config.getbool('outage-inclusive', True)
    n_symbols = config.getint('hmm-symbols', 2)

    try:
        sizes = []
        for ratio in splits:
            n1 = train_size(matrix.n_slots, ratio)
            if not 1 <= n1 < matrix.n_slots:
                raise SplitError(f'Splitting {matrix.n_slots} slots at ' +
                                 f'{ratio} leaves one side empty.')
            sizes.append(n1)
        # The shortest prefix lies inside every training block, so all
        # split ratios share one labeling.
        n_cal = min(sizes)
        criteria, calibration = calibrate(
            matrix.slice_rows(0, n_cal), config.getfloats('gammas'),
            config.getfloats('ms-grid'), config.getfloat('target-protection'))
        result.calibration = {'calibration_slots': n_cal,
                              'criteria': criteria.to_dict(),
                              'report': calibration.to_dict()}

        status = threshold_status(matrix, criteria.gamma)
        occ = slot_occupancy(status)
        labels = label_pu(status, occ, criteria).values

        for ratio_index, (ratio, n1) in enumerate(zip(splits, sizes)):
            binary = split(Dataset(status.values, labels), ratio)
            raw = None
            if config.get('nbc-kernel') == 'gaussian':
                raw = split(Dataset(matrix.values, labels, binary=False),
                            ratio)
            test_occ = occ.slice(n1, matrix.n_slots)
            first = ratio_index == 0

            predictions = {}
            for name in classifiers:
                train, test = binary.train, binary.test
                if name == 'nbc' and raw is not None:
                    train, test = raw.train, raw.test
                if name == 'lr' and \
                        matrix.band.num_bins > config.getint('lr-max-bins'):
                    log.info(f'day {day}: lr skipped, {matrix.band.num_bins} ' +
                             f'bins exceed lr-max-bins.')
                    continue

                with _Timer(timed) as fit_time:
                    if name == 'hmm':
                        model = default_hmm(n_symbols)
                    elif name == 'trained-hmm':
                        model = estimate_hmm(
                            StateSequence(train.labels),
                            discretize_observations(occ.slice(0, n1),
                                                    criteria.u_oc, n_symbols),
                            config.getfloat('hmm-smoothing', 1.0))
                    elif name == 'svm-ffa':
                        model = _fit_svm_ffa(
                            train, config, day,
                            result.tuning_history if first else None)
                    else:
                        model = _fit_supervised(name, config, train)

                with _Timer(timed) as predict_time:
                    if name in ('hmm', 'trained-hmm'):
                        # Decoding runs over the test slots only.
                        test_obs = discretize_observations(
                            test_occ, criteria.u_oc, n_symbols)
                        predicted = hmm_predict(model, test_obs)
                    else:
                        predicted = model.predict(test.features)

                metrics = evaluate(predicted, test.labels,
                                   (fit_time.seconds, predict_time.seconds))
                result.comparison.append({
                    'day': day, 'classifier': name, 'split_ratio': ratio,
                    'ca': metrics.ca, 'misdetections': metrics.misdetections,
                    'false_alarms': metrics.false_alarms,
                    'fit_seconds': metrics.fit_seconds,
                    'predict_seconds': metrics.predict_seconds})
                predictions[name] = predicted

            if first:
                expected = su_outage_probability(
                    binary.test.labels, test_occ, out_su, mode,
                    inclusive).p_outage
                for name, predicted in predictions.items():
                    evaluated = su_outage_probability(
                        predicted, test_occ, out_su, mode, inclusive).p_outage
                    result.outage.append({
                        'day': day, 'classifier': name,
                        'expected_outage': expected,
                        'evaluated_outage': evaluated,
                        'abs_difference': abs(expected - evaluated)})
    except (CalibrationError, SplitError) as exc:
        log.info(f'day {day} skipped: {exc}')
        return DayResult(day, skipped=str(exc))

    log.info(f'day {day}: {len(result.comparison)} classifier runs')
    return result


def run_experiment(config: Config) -> ComparisonReport:
    """
    Runs every day of the configured data through the classifier
    comparison. On MPI runs only rank 0 gets the report; other ranks
    get None.
    """
    config.validate()
    matrix, _ = load_power_matrix(config)
    days = day_segments(matrix, config)
    transport = DayTransport(len(days), config.getint('workers', 1))
    results = transport.map(run_day, days, config)
    if not transport.is_root:
        return None

    skipped = {r.day: r.skipped for r in results if r.skipped}
    if len(skipped) == len(results):
        raise ExperimentError('Calibration failed on every day: ' +
                              '; '.join(skipped.values()))

    def frame(rows, columns):
        return pd.DataFrame(rows, columns=columns)

    comparison = frame([row for r in results for row in r.comparison],
                       comparison_columns)
    if comparison.empty:
        raise ExperimentError('No classifier produced a result.')
    outage = frame([row for r in results for row in r.outage], outage_columns)
    tuning = frame([row for r in results for row in r.tuning_history],
                   ['day'] + tuning_history_columns)

    grid = threshold_grid(matrix, config.getint('stats-threshold-count', 7))

    return ComparisonReport(
        comparison=comparison,
        outage=outage,
        calibration={f'day-{r.day}': r.calibration for r in results
                     if not r.skipped},
        tuning_history=tuning,
        occupancy_vs_threshold=occupancy_vs_threshold(matrix, grid),
        bin_occupancy=bin_occupancy_table(matrix, config.getfloats('gammas')),
        cdf=cdf_table(matrix),
        skipped_days=skipped)
