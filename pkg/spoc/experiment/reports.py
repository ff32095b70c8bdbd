"""Files written by a comparison run."""
import json
import logging
from pathlib import Path

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from ..errors import ConfigError, ReportError

log = logging.getLogger(__name__)


class OutputType:

    __slots__ = ()

    NUMBERS = 0x1
    PICTURES = 0x2
    ALL = NUMBERS | PICTURES

    @staticmethod
    def from_name(name: str) -> int:
        try:
            return {'numbers': OutputType.NUMBERS,
                    'pictures': OutputType.PICTURES,
                    'all': OutputType.ALL}[name]
        except KeyError:
            raise ConfigError(f'Unknown output type {name!r}.') from None


def write_frame(frame, path):
    try:
        frame.to_csv(path, index=False, lineterminator='\n')
    except OSError as exc:
        raise ReportError(path, exc) from exc
    return Path(path)


def write_json(values, path):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(values, f, indent=4, sort_keys=True)
            f.write('\n')
    except OSError as exc:
        raise ReportError(path, exc) from exc
    return Path(path)


def _save_figure(fig, path):
    try:
        fig.savefig(path)
    except OSError as exc:
        raise ReportError(path, exc) from exc
    finally:
        plt.close(fig)
    return Path(path)


def plot_occupancy_vs_threshold(table, path):
    fig, ax = plt.subplots()
    ax.plot(table['gamma_dbm'], table['mean_occupancy'], marker='o')
    ax.set_xlabel('threshold, dBm')
    ax.set_ylabel('mean occupancy')
    return _save_figure(fig, path)


def plot_ca_per_day(comparison, path):
    fig, ax = plt.subplots()
    for (name, ratio), rows in comparison.groupby(['classifier',
                                                   'split_ratio'], sort=False):
        ax.plot(rows['day'], rows['ca'], marker='.', label=f'{name} {ratio:g}')
    ax.set_xlabel('day')
    ax.set_ylabel('CA')
    ax.legend(fontsize='small')
    return _save_figure(fig, path)


def plot_outage(outage, path):
    fig, ax = plt.subplots()
    means = outage.groupby('classifier', sort=False)[
        ['expected_outage', 'evaluated_outage']].mean()
    x = range(len(means))
    ax.bar([i - 0.2 for i in x], means['expected_outage'], 0.4,
           label='expected')
    ax.bar([i + 0.2 for i in x], means['evaluated_outage'], 0.4,
           label='evaluated')
    ax.set_xticks(list(x))
    ax.set_xticklabels(means.index)
    ax.set_ylabel('P(SU outage)')
    ax.legend()
    return _save_figure(fig, path)


def emit_reports(report, out_dir, output_type: int = OutputType.NUMBERS):
    """
    Writes the tables (and, for PICTURES, the figures) of a comparison
    report into out_dir. Returns the written paths.
    """
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ReportError(out_dir, exc) from exc

    written = []
    if output_type & OutputType.NUMBERS:
        written += [
            write_frame(report.comparison, out_dir / 'comparison.csv'),
            write_frame(report.outage, out_dir / 'outage.csv'),
            write_json(report.calibration, out_dir / 'calibration.json'),
            write_frame(report.occupancy_vs_threshold,
                        out_dir / 'occupancy_vs_threshold.csv'),
            write_frame(report.bin_occupancy, out_dir / 'bin_occupancy.csv'),
            write_frame(report.tuning_history, out_dir / 'tuning_history.csv'),
            write_frame(report.summary, out_dir / 'summary.csv'),
            write_frame(report.cdf, out_dir / 'cdf.csv'),
        ]
    if output_type & OutputType.PICTURES:
        written.append(plot_occupancy_vs_threshold(
            report.occupancy_vs_threshold, out_dir / 'occupancy_vs_threshold.png'))
        written.append(plot_ca_per_day(report.comparison,
                                       out_dir / 'ca_per_day.png'))
        if not report.outage.empty:
            written.append(plot_outage(report.outage, out_dir / 'outage.png'))
    log.info(f'Wrote {len(written)} files to {out_dir}')
    return written
