"""Module for the two-state HMM, its observations and decoded states."""
from dataclasses import dataclass

import numpy as np

from ..errors import ContractError

# State 0 is "PU absent" (u1), state 1 is "PU present" (u2).
N_STATES = 2
_ROW_TOLERANCE = 1e-12


def _stochastic(name, matrix, shape):
    matrix = np.array(matrix, dtype=np.float64)
    if matrix.shape != shape:
        raise ContractError(f'{name} must have shape {shape}, ' +
                            f'got {matrix.shape}.')
    if np.any(matrix < 0) or not np.all(np.isfinite(matrix)):
        raise ContractError(f'{name} entries must be finite and >= 0.')
    sums = matrix.sum(axis=-1)
    if np.any(np.abs(sums - 1) > _ROW_TOLERANCE):
        raise ContractError(f'{name} rows must sum to 1, got {sums}.')
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class HmmModel:
    transition: np.ndarray
    emission: np.ndarray
    initial: np.ndarray

    def __post_init__(self):
        emission = np.asarray(self.emission)
        if emission.ndim != 2 or emission.shape[1] < 2:
            raise ContractError('Emission must be a 2 x M matrix, M >= 2.')
        n_symbols = emission.shape[1]
        object.__setattr__(self, 'transition', _stochastic(
            'transition', self.transition, (N_STATES, N_STATES)))
        object.__setattr__(self, 'emission', _stochastic(
            'emission', self.emission, (N_STATES, n_symbols)))
        object.__setattr__(self, 'initial', _stochastic(
            'initial', self.initial, (N_STATES,)))

    @property
    def n_symbols(self):
        return self.emission.shape[1]

    def to_dict(self):
        return {'model': 'hmm', 'n_symbols': self.n_symbols,
                'transition': self.transition.tolist(),
                'emission': self.emission.tolist(),
                'initial': self.initial.tolist()}

    @classmethod
    def from_dict(cls, values):
        return cls(values['transition'], values['emission'], values['initial'])


@dataclass(frozen=True)
class ObservationSequence:
    symbols: np.ndarray
    n_symbols: int = 2

    def __post_init__(self):
        symbols = np.array(self.symbols, dtype=np.int64)
        if symbols.ndim != 1:
            raise ContractError('Observations must be a one-dimensional ' +
                                'sequence.')
        if np.any((symbols < 0) | (symbols >= self.n_symbols)):
            raise ContractError(f'Observation symbols must lie in ' +
                                f'[0, {self.n_symbols}).')
        symbols.setflags(write=False)
        object.__setattr__(self, 'symbols', symbols)

    def __len__(self):
        return self.symbols.size


@dataclass(frozen=True)
class StateSequence:
    states: np.ndarray
    zero_likelihood: bool = False

    def __post_init__(self):
        states = np.array(self.states, dtype=np.int8)
        if states.ndim != 1 or np.any((states != 0) & (states != 1)):
            raise ContractError('States must be a sequence of 0 and 1.')
        states.setflags(write=False)
        object.__setattr__(self, 'states', states)

    def __len__(self):
        return self.states.size


# Initial guesses of the untrained model.
DEFAULT_TRANSITION = ((0.7, 0.3), (0.3, 0.7))
DEFAULT_EMISSION = ((0.8, 0.2), (0.2, 0.8))
DEFAULT_EMISSION_WEIGHT = 0.8


def default_hmm(n_symbols: int = 2) -> HmmModel:
    """
    The untrained model: sticky transitions, a uniform start and emissions
    leaning to the lower half of the alphabet for state 0 and the upper
    half for state 1. With two symbols the emission is
    [[0.8, 0.2], [0.2, 0.8]].
    """
    if n_symbols < 2:
        raise ContractError('An HMM needs at least two symbols.')
    if n_symbols == 2:
        return HmmModel(DEFAULT_TRANSITION, DEFAULT_EMISSION, (0.5, 0.5))
    lower = np.arange(n_symbols) < n_symbols / 2
    w = DEFAULT_EMISSION_WEIGHT
    absent = np.where(lower, w / lower.sum(), (1 - w) / (~lower).sum())
    present = np.where(lower, (1 - w) / lower.sum(), w / (~lower).sum())
    return HmmModel(DEFAULT_TRANSITION, np.array([absent, present]),
                    (0.5, 0.5))
