"""Soft-margin linear SVM trained by sequential minimal optimization."""
import logging
from dataclasses import dataclass

import numpy as np
from numba import njit

from ..errors import ContractError, ConvergenceError
from .data import Dataset

log = logging.getLogger(__name__)

_TAU = 1e-12
# At the iteration cap the fit is still accepted when the objective moved
# less than this (relative) over the last _STALL_WINDOW iterations.
_STALL_TOLERANCE = 1e-6
_STALL_WINDOW = 100


@dataclass(frozen=True)
class SvmModel:
    """
    Decision rule: 1 if weights . S + bias > decision_offset else 0.
    `objective_history` is the dual objective after every solver iteration.
    """
    weights: np.ndarray
    bias: float
    box_constraint: float
    decision_offset: float = 0.0
    iterations: int = 0
    objective_history: np.ndarray = None

    def decision_function(self, features):
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        if features.shape[1] != self.weights.size:
            raise ContractError(f'Model has {self.weights.size} features, ' +
                                f'got {features.shape[1]}.')
        return features @ self.weights + self.bias

    def predict(self, features):
        return (self.decision_function(features) >
                self.decision_offset).astype(np.int8)

    def to_dict(self):
        return {'model': 'svm', 'box_constraint': self.box_constraint,
                'weights': self.weights.tolist(), 'bias': self.bias,
                'decision_offset': self.decision_offset,
                'iterations': self.iterations}

    @classmethod
    def from_dict(cls, values):
        return cls(np.array(values['weights'], dtype=np.float64),
                   float(values['bias']), float(values['box_constraint']),
                   float(values['decision_offset']), int(values['iterations']))


@njit(cache=True)
def _select_pair(alpha, grad, y, c):
    # Maximal violating pair of the KKT conditions.
    i, j = -1, -1
    g_max, g_min = -np.inf, np.inf
    for t in range(y.size):
        value = -y[t] * grad[t]
        if (y[t] > 0 and alpha[t] < c) or (y[t] < 0 and alpha[t] > 0):
            if value > g_max:
                g_max, i = value, t
        if (y[t] < 0 and alpha[t] < c) or (y[t] > 0 and alpha[t] > 0):
            if value < g_min:
                g_min, j = value, t
    return i, j, g_max - g_min


@njit(cache=True)
def _smo(q, y, c, tolerance, max_iter):
    n = y.size
    alpha = np.zeros(n)
    grad = -np.ones(n)
    history = np.zeros(max_iter + 1)
    gap = np.inf
    it = 0
    while it < max_iter:
        i, j, gap = _select_pair(alpha, grad, y, c)
        if i < 0 or j < 0 or gap <= tolerance:
            break
        old_i, old_j = alpha[i], alpha[j]
        if y[i] != y[j]:
            quad = q[i, i] + q[j, j] + 2 * q[i, j]
            if quad <= 0:
                quad = _TAU
            delta = (-grad[i] - grad[j]) / quad
            diff = alpha[i] - alpha[j]
            alpha[i] += delta
            alpha[j] += delta
            if diff > 0:
                if alpha[j] < 0:
                    alpha[j] = 0.0
                    alpha[i] = diff
            elif alpha[i] < 0:
                alpha[i] = 0.0
                alpha[j] = -diff
            if diff > 0:
                if alpha[i] > c:
                    alpha[i] = c
                    alpha[j] = c - diff
            elif alpha[j] > c:
                alpha[j] = c
                alpha[i] = c + diff
        else:
            quad = q[i, i] + q[j, j] - 2 * q[i, j]
            if quad <= 0:
                quad = _TAU
            delta = (grad[i] - grad[j]) / quad
            total = alpha[i] + alpha[j]
            alpha[i] -= delta
            alpha[j] += delta
            if total > c:
                if alpha[i] > c:
                    alpha[i] = c
                    alpha[j] = total - c
                if alpha[j] > c:
                    alpha[j] = c
                    alpha[i] = total - c
            else:
                if alpha[j] < 0:
                    alpha[j] = 0.0
                    alpha[i] = total
                if alpha[i] < 0:
                    alpha[i] = 0.0
                    alpha[j] = total
        d_i = alpha[i] - old_i
        d_j = alpha[j] - old_j
        for t in range(n):
            grad[t] += q[i, t] * d_i + q[j, t] * d_j
        it += 1
        history[it] = 0.5 * np.dot(alpha, grad - 1.0)
    return alpha, grad, history[:it + 1], it, gap


def _bias(alpha, grad, y, c):
    y_grad = y * grad
    free = (alpha > 0) & (alpha < c)
    if np.any(free):
        rho = y_grad[free].mean()
    else:
        at_upper = alpha >= c
        at_lower = alpha <= 0
        upper_set = (at_upper & (y < 0)) | (at_lower & (y > 0))
        lower_set = (at_upper & (y > 0)) | (at_lower & (y < 0))
        ub = y_grad[upper_set].min() if np.any(upper_set) else np.inf
        lb = y_grad[lower_set].max() if np.any(lower_set) else -np.inf
        rho = (ub + lb) / 2
    return -float(rho)


def svm_fit(train: Dataset, box_constraint: float = 1.0,
            max_iter: int = 10000, tolerance: float = 1e-3) -> SvmModel:
    """
    Minimizes 1/2 |d|^2 + Box_ct * sum of hinge losses through its dual.
    Labels 0/1 are mapped to -1/+1.
    """
    train.require_trainable()
    if box_constraint <= 0:
        raise ContractError('The box constraint must be positive.')
    if train.classes.size < 2:
        raise ContractError('SVM training data must hold both classes.')

    x = train.features
    y = np.where(train.labels == 1, 1.0, -1.0)
    q = np.outer(y, y) * (x @ x.T)
    alpha, grad, history, iterations, gap = _smo(
        q, y, float(box_constraint), float(tolerance), int(max_iter))

    if gap > tolerance:
        window = history[-_STALL_WINDOW - 1:]
        delta = abs(window[-1] - window[0]) / max(abs(window[-1]), 1.0)
        if delta >= _STALL_TOLERANCE:
            raise ConvergenceError(iterations, float(gap), float(delta))
        log.warning(f'SVM stopped at the {iterations} iteration cap with ' +
                    f'KKT gap {gap:.2e}; the objective has settled.')

    weights = (alpha * y) @ x
    bias = _bias(alpha, grad, y, box_constraint)
    log.debug(f'svm_fit: Box_ct={box_constraint:.4g}, {iterations} ' +
              f'iterations, {np.count_nonzero(alpha)} support vectors')
    history.setflags(write=False)
    return SvmModel(weights, bias, float(box_constraint), 0.0, iterations,
                    history)


def svm_predict(model: SvmModel, features) -> np.ndarray:
    return model.predict(features)
