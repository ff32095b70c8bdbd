"""Forward likelihood and Viterbi decoding."""
import numpy as np
from numba import njit

from ..errors import ContractError
from ..occupancy.occupancy import OccupancyVector
from .data import HmmModel, ObservationSequence, StateSequence


def discretize_observations(occ: OccupancyVector, split: float = 0.5,
                            n_symbols: int = 2) -> ObservationSequence:
    """
    Two symbols: 0 if OC < split else 1. More symbols: uniform bins of
    width 1 / n_symbols over [0, 1], the top bin including OC = 1.
    """
    oc = occ.values
    if n_symbols == 2:
        if not 0 < split < 1:
            raise ContractError(f'Observation split {split} is not in (0, 1).')
        return ObservationSequence((oc >= split).astype(np.int64), 2)
    if n_symbols < 2:
        raise ContractError('At least two observation symbols are needed.')
    symbols = np.minimum(np.floor(oc * n_symbols), n_symbols - 1)
    return ObservationSequence(symbols.astype(np.int64), n_symbols)


def _check(model: HmmModel, obs: ObservationSequence):
    if len(obs) == 0:
        raise ContractError('The observation sequence is empty.')
    if obs.n_symbols != model.n_symbols:
        raise ContractError(f'Observations use {obs.n_symbols} symbols, the ' +
                            f'model emits {model.n_symbols}.')


@njit(cache=True)
def _forward(initial, transition, emission, symbols):
    n_states = initial.size
    alpha = np.empty(n_states)
    for s in range(n_states):
        alpha[s] = initial[s] * emission[s, symbols[0]]
    log_likelihood = 0.0
    for t in range(symbols.size):
        if t > 0:
            previous = alpha.copy()
            for s in range(n_states):
                total = 0.0
                for r in range(n_states):
                    total += previous[r] * transition[r, s]
                alpha[s] = total * emission[s, symbols[t]]
        scale = alpha.sum()
        if scale == 0.0:
            return -np.inf
        alpha = alpha / scale
        log_likelihood += np.log(scale)
    return log_likelihood


def forward(model: HmmModel, obs: ObservationSequence) -> float:
    """log P(O | model) by the scaled forward recursion; -inf if impossible."""
    _check(model, obs)
    return float(_forward(model.initial, model.transition, model.emission,
                          obs.symbols))


@njit(cache=True)
def _viterbi(log_initial, log_transition, log_emission, symbols):
    n_steps = symbols.size
    n_states = log_initial.size
    score = log_initial + log_emission[:, symbols[0]]
    back = np.zeros((n_steps, n_states), dtype=np.int64)
    for t in range(1, n_steps):
        new_score = np.empty(n_states)
        for s in range(n_states):
            best, arg = score[0] + log_transition[0, s], 0
            for r in range(1, n_states):
                value = score[r] + log_transition[r, s]
                # Strict comparison keeps the lower state on ties.
                if value > best:
                    best, arg = value, r
            back[t, s] = arg
            new_score[s] = best + log_emission[s, symbols[t]]
        score = new_score

    path = np.zeros(n_steps, dtype=np.int8)
    last, best = 0, score[0]
    for s in range(1, n_states):
        if score[s] > best:
            last, best = s, score[s]
    path[-1] = last
    for t in range(n_steps - 1, 0, -1):
        path[t - 1] = back[t, path[t]]
    return path, best


def viterbi(model: HmmModel, obs: ObservationSequence) -> StateSequence:
    """
    Most probable state path, computed in the log domain. When every path
    has zero probability the tie-break path is returned with
    `zero_likelihood` set.
    """
    _check(model, obs)
    with np.errstate(divide='ignore'):
        path, best = _viterbi(np.log(model.initial),
                              np.log(model.transition),
                              np.log(model.emission), obs.symbols)
    return StateSequence(path, zero_likelihood=bool(np.isneginf(best)))


def path_log_probability(model: HmmModel, obs: ObservationSequence,
                         states: StateSequence) -> float:
    """log P(O, Q | model) of one given path."""
    _check(model, obs)
    q, o = states.states, obs.symbols
    with np.errstate(divide='ignore'):
        value = np.log(model.initial[q[0]]) + \
            np.log(model.emission[q, o]).sum() + \
            np.log(model.transition[q[:-1], q[1:]]).sum()
    return float(value)
