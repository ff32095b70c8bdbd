import numpy as np
import pandas as pd

from ..errors import EmptyInputError
from .data import PowerMatrix


def empirical_cdf(matrix: PowerMatrix):
    """
    Empirical distribution of all power values of the matrix.

    Returns
    -------
    list of (power dBm, cumulative fraction) over the sorted distinct values
    """
    if matrix.values.size == 0:
        raise EmptyInputError('Cannot compute the CDF of an empty matrix.')
    powers, counts = np.unique(matrix.values, return_counts=True)
    fractions = np.cumsum(counts) / matrix.values.size
    # The last fraction is exactly 1 regardless of rounding in the cumsum.
    fractions[-1] = 1.0
    return [(float(p), float(f)) for p, f in zip(powers, fractions)]


def cdf_table(matrix: PowerMatrix, points: int = 201) -> pd.DataFrame:
    """The empirical CDF sampled at `points` powers from min to max."""
    if matrix.values.size == 0:
        raise EmptyInputError('Cannot compute the CDF of an empty matrix.')
    ordered = np.sort(matrix.values, axis=None)
    powers = np.linspace(ordered[0], ordered[-1], points)
    fractions = np.searchsorted(ordered, powers, side='right') / ordered.size
    return pd.DataFrame({'power_dbm': powers, 'cumulative_fraction': fractions})
