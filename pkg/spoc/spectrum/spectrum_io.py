"""Reading and writing power matrices as CSV files."""
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from ..errors import CsvParseError, EmptyInputError, ReportError
from .data import BandConfig, PowerMatrix

log = logging.getLogger(__name__)


def load_csv(path, band: BandConfig) -> PowerMatrix:
    """
    Load a power matrix from a CSV file with header `slot,bin_1,...,bin_k`.

    The first column is the slot index and is not stored, the remaining
    k columns are powers in dBm. Errors name the 1-based line of the file.
    """
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        lines = f.read().splitlines()

    numbered = [(idx + 1, line) for idx, line in enumerate(lines)
                if line.strip()]
    if not numbered:
        raise EmptyInputError(f'{path} is empty.')

    header_line, header = numbered[0]
    n_fields = band.num_bins + 1
    if len(header.split(',')) != n_fields:
        raise CsvParseError(
            path, header_line,
            f'header names {len(header.split(",")) - 1} power columns, ' +
            f'band {band.name} has {band.num_bins}')
    if len(numbered) == 1:
        raise EmptyInputError(f'{path} has a header but no data rows.')

    rows = np.empty((len(numbered) - 1, band.num_bins), dtype=np.float64)
    for row_idx, (line_no, line) in enumerate(numbered[1:]):
        fields = line.split(',')
        if len(fields) != n_fields:
            raise CsvParseError(path, line_no,
                                f'expected {n_fields} fields, got {len(fields)}')
        try:
            values = np.array(fields, dtype=np.float64)
        except ValueError:
            raise CsvParseError(path, line_no,
                                'non-numeric value') from None
        if not np.all(np.isfinite(values)):
            raise CsvParseError(path, line_no, 'non-finite value')
        rows[row_idx] = values[1:]

    log.debug(f'load_csv: {rows.shape[0]} slots x {rows.shape[1]} bins ' +
              f'from {path}')
    return PowerMatrix(band, rows)


def write_csv(matrix: PowerMatrix, path):
    columns = [f'bin_{j + 1}' for j in range(matrix.band.num_bins)]
    frame = pd.DataFrame(matrix.values, columns=columns)
    frame.insert(0, 'slot', np.arange(matrix.n_slots))
    try:
        frame.to_csv(path, index=False, lineterminator='\n')
    except OSError as exc:
        raise ReportError(path, exc) from exc
