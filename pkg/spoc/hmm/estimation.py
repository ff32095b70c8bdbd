"""Maximum likelihood HMM parameters from labeled state sequences."""
import numpy as np

from ..errors import ContractError
from .data import N_STATES, HmmModel, ObservationSequence, StateSequence


def _normalize_rows(counts):
    totals = counts.sum(axis=1, keepdims=True)
    # A state never visited gets a uniform row.
    uniform = np.full_like(counts, 1.0 / counts.shape[1])
    return np.where(totals > 0, counts / np.where(totals > 0, totals, 1),
                    uniform)


def estimate_hmm(states: StateSequence, obs: ObservationSequence,
                 smoothing: float = 1.0) -> HmmModel:
    """
    Transition, emission and initial probabilities counted from a state
    sequence and its observations, every count increased by `smoothing`.
    """
    q, o = states.states, obs.symbols
    if len(states) != len(obs):
        raise ContractError(f'{len(states)} states for {len(obs)} ' +
                            'observations.')
    if len(states) < 2:
        raise ContractError('Estimation needs at least two time steps.')
    if smoothing < 0:
        raise ContractError('Smoothing must be non-negative.')

    transition = np.full((N_STATES, N_STATES), float(smoothing))
    np.add.at(transition, (q[:-1], q[1:]), 1.0)
    emission = np.full((N_STATES, obs.n_symbols), float(smoothing))
    np.add.at(emission, (q, o), 1.0)
    initial = np.full(N_STATES, float(smoothing))
    initial[q[0]] += 1.0

    return HmmModel(_normalize_rows(transition), _normalize_rows(emission),
                    initial / initial.sum())


def sample_hmm(model: HmmModel, n_steps: int, rng: np.random.Generator):
    """Draws a (StateSequence, ObservationSequence) pair from the model."""
    states = np.empty(n_steps, dtype=np.int8)
    symbols = np.empty(n_steps, dtype=np.int64)
    uniforms = rng.random((n_steps, 2))
    cum_transition = np.cumsum(model.transition, axis=1)
    cum_emission = np.cumsum(model.emission, axis=1)
    state = int(np.searchsorted(np.cumsum(model.initial), uniforms[0, 0],
                                side='right'))
    for t in range(n_steps):
        if t > 0:
            state = int(np.searchsorted(cum_transition[state], uniforms[t, 0],
                                        side='right'))
        states[t] = min(state, N_STATES - 1)
        state = states[t]
        symbols[t] = min(int(np.searchsorted(cum_emission[state],
                                             uniforms[t, 1], side='right')),
                         model.n_symbols - 1)
    return StateSequence(states), ObservationSequence(symbols, model.n_symbols)
