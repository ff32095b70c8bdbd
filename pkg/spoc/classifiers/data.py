"""Module for classifier datasets and chronological train/test splits."""
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ContractError, SplitError

# Where a dataset came from. Fitting on 'test' data is refused.
dataset_tags = ('all', 'train', 'validation', 'test')


@dataclass(frozen=True)
class Dataset:
    """
    One row of features per slot and the PU label of that slot.

    Features are the binary spectrum status by default; `binary=False`
    admits raw power values (used by the Gaussian NBC kernel).
    """
    features: np.ndarray
    labels: np.ndarray
    tag: str = 'all'
    binary: bool = True

    def __post_init__(self):
        features = np.array(self.features, dtype=np.float64)
        labels = np.array(self.labels, dtype=np.int8)
        if features.ndim != 2 or labels.ndim != 1:
            raise ContractError('A dataset needs an n x k feature grid and ' +
                                'n labels.')
        if features.shape[0] != labels.size:
            raise ContractError(f'{features.shape[0]} feature rows but ' +
                                f'{labels.size} labels.')
        if np.any((labels != 0) & (labels != 1)):
            raise ContractError('Labels must be 0 or 1.')
        if self.binary and np.any((features != 0) & (features != 1)):
            raise ContractError('Binary features must be 0 or 1.')
        if not np.all(np.isfinite(features)):
            raise ContractError('Features must be finite.')
        if self.tag not in dataset_tags:
            raise ContractError(f'Unknown dataset tag {self.tag!r}.')
        features.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, 'features', features)
        object.__setattr__(self, 'labels', labels)

    @property
    def n_samples(self):
        return self.labels.size

    @property
    def n_features(self):
        return self.features.shape[1]

    @property
    def classes(self):
        return np.unique(self.labels)

    def rows(self, start, stop, tag=None):
        return Dataset(self.features[start:stop], self.labels[start:stop],
                       self.tag if tag is None else tag, self.binary)

    def require_trainable(self):
        if self.tag == 'test':
            raise ContractError('Test data must not be used for fitting.')
        if self.n_samples == 0:
            raise ContractError('Cannot fit on an empty dataset.')
        return self


@dataclass(frozen=True)
class TrainTestSplit:
    train: Dataset
    test: Dataset
    ratio: float


def train_size(n: int, train_fraction: float) -> int:
    # round() keeps 100 * 0.15 = 15.000000000000002 at 15.
    return math.ceil(round(n * train_fraction, 9))


def split(dataset: Dataset, train_fraction: float) -> TrainTestSplit:
    """First ceil(n * fraction) slots train, the rest test; no shuffling."""
    if not 0 < train_fraction < 1:
        raise SplitError(f'Training fraction {train_fraction} is not in (0, 1).')
    n = dataset.n_samples
    n1 = train_size(n, train_fraction)
    if n1 < 1 or n1 >= n:
        raise SplitError(f'Splitting {n} slots at {train_fraction} leaves ' +
                         'one side empty.')
    return TrainTestSplit(dataset.rows(0, n1, 'train'),
                          dataset.rows(n1, n, 'test'), train_fraction)


def majority_class(labels) -> int:
    """Most frequent label, 0 on ties."""
    labels = np.asarray(labels)
    return int(np.count_nonzero(labels == 1) > np.count_nonzero(labels == 0))


@dataclass(frozen=True)
class ConstantModel:
    """Predicts one label everywhere; the fallback for untrainable data."""
    label: int

    def predict(self, features):
        features = np.atleast_2d(np.asarray(features))
        return np.full(features.shape[0], self.label, dtype=np.int8)
