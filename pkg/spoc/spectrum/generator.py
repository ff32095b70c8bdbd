"""Synthetic spectrum data with known primary user activity."""
import json
import logging
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ..errors import ConfigError, ReportError
from .data import BandConfig, GroundTruth, PowerMatrix

log = logging.getLogger(__name__)


def _group_edges(num_bins, bin_groups):
    n_groups = min(bin_groups, num_bins)
    return np.linspace(0, num_bins, n_groups + 1).astype(np.int64)


@dataclass(frozen=True)
class PeriodicActivity:
    """Every other contiguous bin group is busy for a fixed share of each cycle."""
    period_slots: int
    duty_cycle: float
    bin_groups: int = 8
    kind: str = field(default='periodic', init=False)

    def __post_init__(self):
        if self.period_slots < 1:
            raise ConfigError('period_slots must be positive.')
        if not 0 < self.duty_cycle < 1:
            raise ConfigError('duty_cycle must lie in (0, 1).')
        if self.bin_groups < 1:
            raise ConfigError('bin_groups must be positive.')

    def activity(self, n_slots, num_bins, rng):
        edges = _group_edges(num_bins, self.bin_groups)
        on_slots = int(round(self.duty_cycle * self.period_slots))
        on_slots = min(max(on_slots, 1), max(self.period_slots - 1, 1))
        slots = np.arange(n_slots)
        active = np.zeros((n_slots, num_bins), dtype=np.int8)
        for g in range(0, edges.size - 1, 2):
            busy = (slots + g // 2) % self.period_slots < on_slots
            active[busy, edges[g]:edges[g + 1]] = 1
        return active

    def to_dict(self):
        return {'kind': self.kind, 'period_slots': self.period_slots,
                'duty_cycle': self.duty_cycle, 'bin_groups': self.bin_groups}


@njit(cache=True)
def _markov_chain(uniforms, initial, p_on, p_off):
    n_slots, n_groups = uniforms.shape
    states = np.zeros((n_slots, n_groups), dtype=np.int8)
    for g in range(n_groups):
        state = initial[g]
        for i in range(n_slots):
            if i > 0:
                if state == 1:
                    state = 0 if uniforms[i, g] < p_off else 1
                else:
                    state = 1 if uniforms[i, g] < p_on else 0
            states[i, g] = state
    return states


@dataclass(frozen=True)
class AperiodicActivity:
    """
    Each contiguous bin group follows its own two-state Markov chain with
    stationary busy probability `occupancy_rate` and mean busy dwell
    `dwell_slots`.
    """
    occupancy_rate: float
    dwell_slots: float = 10.0
    bin_groups: int = 8
    kind: str = field(default='aperiodic', init=False)

    def __post_init__(self):
        if not 0 <= self.occupancy_rate < 1:
            raise ConfigError('occupancy_rate must lie in [0, 1).')
        if self.dwell_slots < 1:
            raise ConfigError('dwell_slots must be at least 1.')
        if self.bin_groups < 1:
            raise ConfigError('bin_groups must be positive.')

    def activity(self, n_slots, num_bins, rng):
        edges = _group_edges(num_bins, self.bin_groups)
        n_groups = edges.size - 1
        p_off = 1.0 / self.dwell_slots
        p_on = p_off * self.occupancy_rate / (1.0 - self.occupancy_rate)
        if p_on > 1.0:
            log.warning(f'occupancy_rate {self.occupancy_rate} needs a ' +
                        f'longer dwell than {self.dwell_slots} slots; ' +
                        'the busy share will be lower.')
            p_on = 1.0
        initial = (rng.random(n_groups) < self.occupancy_rate).astype(np.int8)
        uniforms = rng.random((n_slots, n_groups))
        states = _markov_chain(uniforms, initial, p_on, p_off)
        return np.repeat(states, np.diff(edges), axis=1)

    def to_dict(self):
        return {'kind': self.kind, 'occupancy_rate': self.occupancy_rate,
                'dwell_slots': self.dwell_slots, 'bin_groups': self.bin_groups}


_activity_patterns = {
    'periodic': PeriodicActivity,
    'aperiodic': AperiodicActivity,
}


def activity_from_dict(values: dict):
    values = dict(values)
    kind = values.pop('kind', None)
    try:
        return _activity_patterns[kind](**values)
    except KeyError:
        raise ConfigError(f'Unknown activity pattern {kind!r}.') from None
    except TypeError as exc:
        raise ConfigError(f'Bad {kind} activity pattern: {exc}') from None


@dataclass(frozen=True)
class GeneratorConfig:
    noise_floor_mean: float
    noise_variance: float
    pu_power_range: tuple
    activity_pattern: object
    group: str = 'B'
    seed: int = 0

    def __post_init__(self):
        lower, upper = self.pu_power_range
        object.__setattr__(self, 'pu_power_range', (float(lower), float(upper)))
        if isinstance(self.activity_pattern, dict):
            object.__setattr__(self, 'activity_pattern',
                               activity_from_dict(self.activity_pattern))
        if not lower < upper:
            raise ConfigError('pu_power_range lower bound must be below ' +
                              'the upper bound.')
        if self.noise_variance < 0:
            raise ConfigError('noise_variance must be non-negative.')
        if self.group not in ('A', 'B'):
            raise ConfigError("group must be 'A' or 'B'.")

    def to_dict(self):
        return {'noise_floor_mean': self.noise_floor_mean,
                'noise_variance': self.noise_variance,
                'pu_power_range': list(self.pu_power_range),
                'activity_pattern': self.activity_pattern.to_dict(),
                'group': self.group,
                'seed': self.seed}

    @classmethod
    def from_dict(cls, values: dict) -> 'GeneratorConfig':
        try:
            return cls(**values)
        except TypeError as exc:
            raise ConfigError(f'Bad generator config: {exc}') from None


def load_generator_config(path) -> GeneratorConfig:
    with open(path, 'r', encoding='utf-8') as f:
        return GeneratorConfig.from_dict(json.load(f))


def save_generator_config(cfg: GeneratorConfig, path):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(cfg.to_dict(), f, indent=4)
            f.write('\n')
    except OSError as exc:
        raise ReportError(path, exc) from exc


def generate_synthetic(cfg: GeneratorConfig, n: int, band: BandConfig):
    """
    Generate n slots of received power for the band.

    Noise-only cells are Gaussian(noise_floor_mean, noise_variance); busy
    cells are a power level drawn uniformly from pu_power_range plus the
    same zero-mean noise, all in the dBm domain.

    Returns
    -------
    (PowerMatrix, GroundTruth)
    """
    if n < 1:
        raise ConfigError('The number of slots must be positive.')
    k = band.num_bins
    rng = np.random.default_rng(cfg.seed)

    active = cfg.activity_pattern.activity(n, k, rng)
    noise = rng.normal(0.0, np.sqrt(cfg.noise_variance), size=(n, k))
    signal = rng.uniform(*cfg.pu_power_range, size=(n, k))

    values = np.where(active == 1, signal, cfg.noise_floor_mean) + noise
    log.debug(f'generate_synthetic: {n} x {k} slots for {band.name}, ' +
              f'busy share {active.mean():.3f}')
    return PowerMatrix(band, values), GroundTruth(active)


# Group A presets span about -110..-30 dBm, group B presets -110..-100 dBm.
generator_presets = {
    'group-a-periodic': dict(
        noise_floor_mean=-108.0, noise_variance=1.0,
        pu_power_range=(-95.0, -35.0),
        activity_pattern=PeriodicActivity(period_slots=10, duty_cycle=0.5),
        group='A'),
    'group-a-aperiodic': dict(
        noise_floor_mean=-108.0, noise_variance=1.0,
        pu_power_range=(-95.0, -35.0),
        activity_pattern=AperiodicActivity(occupancy_rate=0.4),
        group='A'),
    'group-b-periodic': dict(
        noise_floor_mean=-108.0, noise_variance=0.25,
        pu_power_range=(-104.0, -100.0),
        activity_pattern=PeriodicActivity(period_slots=10, duty_cycle=0.5),
        group='B'),
    'group-b-aperiodic': dict(
        noise_floor_mean=-108.0, noise_variance=0.25,
        pu_power_range=(-104.0, -100.0),
        activity_pattern=AperiodicActivity(occupancy_rate=0.4),
        group='B'),
}


def preset_for_band(band: BandConfig) -> str:
    return 'group-{}-{}'.format(band.group.lower(),
                                'periodic' if band.periodic else 'aperiodic')


def get_generator_config(name: str, seed: int = 0) -> GeneratorConfig:
    try:
        preset = generator_presets[name]
    except KeyError:
        raise ConfigError(f'Unknown generator preset {name!r}; choose from ' +
                          f'{", ".join(generator_presets)}.') from None
    return GeneratorConfig(seed=seed, **preset)
