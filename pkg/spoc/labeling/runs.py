"""Longest runs of free frequency bins."""
import numpy as np
from numba import njit

from ..occupancy.status import StatusMatrix


@njit(cache=True)
def _longest_zero_runs(values):
    n_rows, n_cols = values.shape
    out = np.zeros(n_rows, dtype=np.int64)
    for i in range(n_rows):
        best = 0
        current = 0
        for j in range(n_cols):
            if values[i, j] == 0:
                current += 1
                if current > best:
                    best = current
            else:
                current = 0
        out[i] = best
    return out


def consecutive_free(status_row) -> int:
    """Length of the longest run of free (0) bins in one slot."""
    row = np.asarray(status_row, dtype=np.int8)
    if row.ndim != 1 or row.size < 1:
        raise ValueError('A status row must hold at least one bin.')
    return int(_longest_zero_runs(row.reshape(1, -1))[0])


def longest_free_runs(status: StatusMatrix) -> np.ndarray:
    """con^i for every slot of the status matrix."""
    return _longest_zero_runs(np.ascontiguousarray(status.values))
