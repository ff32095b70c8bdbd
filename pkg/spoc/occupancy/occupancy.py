"""Per-slot and per-bin occupancy statistics."""
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..errors import ContractError, EmptyInputError
from ..spectrum.data import PowerMatrix
from .status import StatusMatrix, threshold_status


def _frozen_fractions(values):
    values = np.array(values, dtype=np.float64)
    if values.ndim != 1:
        raise ContractError('Occupancy must be a one-dimensional vector.')
    if np.any((values < 0) | (values > 1)):
        raise ContractError('Occupancy values must lie in [0, 1].')
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class OccupancyVector:
    """Fraction of busy bins in every slot."""
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'values', _frozen_fractions(self.values))

    def __len__(self):
        return self.values.size

    def slice(self, start, stop):
        return OccupancyVector(self.values[start:stop])


@dataclass(frozen=True)
class BinOccupancyVector:
    """Fraction of busy slots in every frequency bin."""
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'values', _frozen_fractions(self.values))

    def __len__(self):
        return self.values.size


def _require_non_empty(status: StatusMatrix):
    if status.values.size == 0:
        raise EmptyInputError('Status matrix is empty.')


def slot_occupancy(status: StatusMatrix) -> OccupancyVector:
    _require_non_empty(status)
    return OccupancyVector(status.values.sum(axis=1) / status.num_bins)


def bin_occupancy(status: StatusMatrix) -> BinOccupancyVector:
    _require_non_empty(status)
    return BinOccupancyVector(status.values.sum(axis=0) / status.n_slots)


def occupancy_vs_threshold(matrix: PowerMatrix, gammas) -> pd.DataFrame:
    """
    Mean slot occupancy for every threshold.

    Returns
    -------
    pd.DataFrame
        Columns `gamma_dbm`, `mean_occupancy`, one row per threshold in
        the given order.
    """
    gammas = [float(g) for g in gammas]
    if not gammas:
        raise ContractError('At least one threshold is required.')
    means = [slot_occupancy(threshold_status(matrix, g)).values.mean()
             for g in gammas]
    return pd.DataFrame({'gamma_dbm': gammas, 'mean_occupancy': means})


def threshold_grid(matrix: PowerMatrix, count: int = 7):
    """
    `count` thresholds from the minimum to the maximum power of the matrix.
    The lowest one sits just below the minimum so that it counts every
    sample as busy.
    """
    matrix.require_non_empty()
    low, high = float(matrix.values.min()), float(matrix.values.max())
    grid = np.linspace(low, high, count)
    grid[0] = np.nextafter(low, -np.inf)
    return grid


def bin_occupancy_table(matrix: PowerMatrix, gammas) -> pd.DataFrame:
    """Per-bin occupancy at every threshold, one column per threshold."""
    table = pd.DataFrame({'bin': np.arange(1, matrix.band.num_bins + 1),
                          'frequency_mhz': matrix.band.frequencies})
    for gamma in gammas:
        table[f'occupancy_at_{float(gamma):g}'] = \
            bin_occupancy(threshold_status(matrix, gamma)).values
    return table
