"""Energy detection: binary spectrum status from power samples."""
from dataclasses import dataclass

import numpy as np

from ..errors import ContractError
from ..spectrum.data import PowerMatrix


@dataclass(frozen=True)
class StatusMatrix:
    values: np.ndarray
    threshold_used: float

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int8)
        if values.ndim != 2:
            raise ContractError('Status values must form an n x k grid.')
        if np.any((values != 0) & (values != 1)):
            raise ContractError('Status entries must be 0 or 1.')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @property
    def n_slots(self):
        return self.values.shape[0]

    @property
    def num_bins(self):
        return self.values.shape[1]

    def slice_rows(self, start, stop):
        return StatusMatrix(self.values[start:stop], self.threshold_used)


def threshold_status(matrix: PowerMatrix, gamma: float) -> StatusMatrix:
    """
    A cell is occupied (1) when its power is strictly above gamma;
    a power equal to gamma counts as idle.
    """
    if not np.isfinite(gamma):
        raise ContractError('The threshold must be finite.')
    return StatusMatrix((matrix.values > gamma).astype(np.int8), float(gamma))
