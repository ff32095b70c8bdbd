"""Module for bands, power matrices and generator ground truth."""
from dataclasses import dataclass

import numpy as np

from ..errors import ContractError, EmptyInputError

SLOT_DURATION_MINUTES = 1


def _frozen(values, dtype):
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class BandConfig:
    name: str
    f_start: float
    f_stop: float
    num_bins: int
    bin_width: float
    group: str = 'B'
    periodic: bool = False

    def __post_init__(self):
        if not self.f_stop > self.f_start:
            raise ContractError(f'Band {self.name}: f_stop must exceed f_start.')
        if self.num_bins < 1:
            raise ContractError(f'Band {self.name}: num_bins must be positive.')
        span = self.f_stop - self.f_start
        if abs(self.num_bins * self.bin_width - span) > self.bin_width:
            raise ContractError(
                f'Band {self.name}: {self.num_bins} bins of {self.bin_width} MHz ' +
                f'do not cover {self.f_start}-{self.f_stop} MHz.')

    @classmethod
    def uniform(cls, name, f_start, f_stop, num_bins, **kwargs):
        return cls(name, f_start, f_stop, num_bins,
                   (f_stop - f_start) / num_bins, **kwargs)

    @property
    def frequencies(self):
        """Centre frequency of every bin in MHz."""
        return self.f_start + (np.arange(self.num_bins) + 0.5) * self.bin_width

    def to_dict(self):
        return {'name': self.name, 'f_start': self.f_start,
                'f_stop': self.f_stop, 'num_bins': self.num_bins,
                'bin_width': self.bin_width, 'group': self.group,
                'periodic': self.periodic}


@dataclass(frozen=True)
class PowerMatrix:
    """
    Received power in dBm, one row per slot, one column per frequency bin.
    The values array is read-only.
    """
    band: BandConfig
    values: np.ndarray
    slot_duration: int = SLOT_DURATION_MINUTES

    def __post_init__(self):
        values = _frozen(self.values, np.float64)
        if values.ndim != 2:
            raise ContractError('Power values must form an n x k grid.')
        if values.shape[1] != self.band.num_bins:
            raise ContractError(
                f'Band {self.band.name} has {self.band.num_bins} bins, ' +
                f'got rows of {values.shape[1]} values.')
        if not np.all(np.isfinite(values)):
            raise ContractError('Power values must be finite.')
        object.__setattr__(self, 'values', values)

    @property
    def n_slots(self):
        return self.values.shape[0]

    @property
    def shape(self):
        return self.values.shape

    def require_non_empty(self):
        if self.values.size == 0:
            raise EmptyInputError('Power matrix is empty.')
        return self

    def slice_rows(self, start, stop):
        return PowerMatrix(self.band, self.values[start:stop],
                           self.slot_duration)

    def day_segments(self, slots_per_day):
        """Splits the matrix into whole days; a trailing partial day is dropped."""
        n_days = self.n_slots // slots_per_day
        return [self.slice_rows(d * slots_per_day, (d + 1) * slots_per_day)
                for d in range(n_days)]


@dataclass(frozen=True)
class GroundTruth:
    pu_active: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'pu_active', _frozen(self.pu_active, np.int8))

    @property
    def shape(self):
        return self.pu_active.shape


# Measured bands. Group A bands have wide power ranges, group B bands stay
# near the noise floor; uplink bands show a periodic usage pattern.
band_presets = {
    'band-880-890': dict(f_start=880, f_stop=890, num_bins=9,
                         group='B', periodic=True),
    'band-880-915': dict(f_start=880, f_stop=915, num_bins=55,
                         group='B', periodic=True),
    'band-880-915-fine': dict(f_start=880, f_stop=915, num_bins=192,
                              group='B', periodic=True),
    'band-925-960': dict(f_start=925, f_stop=960, num_bins=192,
                         group='B', periodic=False),
    'band-1710-1785': dict(f_start=1710, f_stop=1785, num_bins=448,
                           group='A', periodic=True),
    'band-1805-1880': dict(f_start=1805, f_stop=1880, num_bins=448,
                           group='A', periodic=False),
    'band-1900-1920': dict(f_start=1900, f_stop=1920, num_bins=112,
                           group='B', periodic=False),
    'band-1920-1980': dict(f_start=1920, f_stop=1980, num_bins=336,
                           group='B', periodic=False),
    'band-2110-2170': dict(f_start=2110, f_stop=2170, num_bins=336,
                           group='A', periodic=True),
    'band-2400-2500': dict(f_start=2400, f_stop=2500, num_bins=560,
                           group='B', periodic=True),
}


def get_band(name: str, num_bins: int = None) -> BandConfig:
    try:
        preset = dict(band_presets[name])
    except KeyError:
        raise ContractError(f'Unknown band {name!r}; choose from ' +
                            f'{", ".join(band_presets)}.') from None
    if num_bins is not None:
        preset['num_bins'] = num_bins
    return BandConfig.uniform(name, **preset)
