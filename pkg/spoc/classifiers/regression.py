"""Linear regression classifier with forward stepwise feature selection."""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lstsq

from ..errors import ContractError
from .data import Dataset

log = logging.getLogger(__name__)

# Regression outputs at or above the cutoff are PU present.
LR_CUTOFF = 0.5
# Relative singular value below which a candidate column is collinear.
_RANK_CUTOFF = 1e-10
# SSE at or below this share of the summed squared labels is an exact fit.
_EXACT_FIT = 1e-12


@dataclass(frozen=True)
class LrModel:
    intercept: float
    coefficients: np.ndarray
    selected_features: tuple
    sse_history: tuple
    max_predictors: int = 15
    degenerate: bool = False

    def regression_output(self, features):
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        if features.shape[1] != self.coefficients.size:
            raise ContractError(f'Model has {self.coefficients.size} ' +
                                f'features, got {features.shape[1]}.')
        return self.intercept + features @ self.coefficients

    def predict(self, features):
        return (self.regression_output(features) >= LR_CUTOFF).astype(np.int8)

    def to_dict(self):
        return {'model': 'lr', 'max_predictors': self.max_predictors,
                'intercept': self.intercept,
                'coefficients': self.coefficients.tolist(),
                'selected_features': list(self.selected_features),
                'sse_history': list(self.sse_history),
                'degenerate': self.degenerate}

    @classmethod
    def from_dict(cls, values):
        return cls(float(values['intercept']),
                   np.array(values['coefficients'], dtype=np.float64),
                   tuple(values['selected_features']),
                   tuple(values['sse_history']), values['max_predictors'],
                   values['degenerate'])


def _least_squares(x, y):
    """Coefficients, SSE and whether the design matrix has full rank."""
    coef, _, rank, _ = lstsq(x, y, cond=_RANK_CUTOFF, lapack_driver='gelsd')
    residual = y - x @ coef
    return coef, float(residual @ residual), rank == x.shape[1]


def lr_fit(train: Dataset, max_predictors: int = 15,
           tolerance: float = 1e-4) -> LrModel:
    """
    Starts from the intercept and adds, one at a time, the feature giving
    the smallest SSE after a least-squares refit. Stops at
    `max_predictors` features or when the SSE improvement, relative to
    the summed squared labels, falls below `tolerance`. Features making
    the design singular are dropped.
    """
    train.require_trainable()
    if max_predictors < 1:
        raise ContractError('max_predictors must be at least 1.')
    x = train.features
    y = train.labels.astype(np.float64)
    n, k = x.shape

    selected = []
    dropped = set()
    design = np.ones((n, 1))
    coef, sse, _ = _least_squares(design, y)
    history = [sse]
    scale = max(float(y @ y), 1.0)

    while len(selected) < max_predictors and sse > _EXACT_FIT * scale:
        best = None
        for j in range(k):
            if j in selected or j in dropped:
                continue
            candidate = np.column_stack([design, x[:, j]])
            c_coef, c_sse, full_rank = _least_squares(candidate, y)
            if not full_rank:
                dropped.add(j)
                continue
            if best is None or c_sse < best[2]:
                best = (j, c_coef, c_sse)
        if best is None:
            break
        j, c_coef, c_sse = best
        if (sse - c_sse) / scale < tolerance:
            break
        selected.append(j)
        design = np.column_stack([design, x[:, j]])
        coef, sse = c_coef, c_sse
        history.append(sse)

    degenerate = not selected
    if degenerate and history[0] > _EXACT_FIT * scale:
        log.warning('LR found no informative feature; using the ' +
                    'intercept-only model.')
    coefficients = np.zeros(k)
    coefficients[selected] = coef[1:]
    log.debug(f'lr_fit: selected {selected}, SSE {history[0]:.4g} -> ' +
              f'{sse:.4g}')
    return LrModel(float(coef[0]), coefficients, tuple(selected),
                   tuple(history), max_predictors, degenerate)


def lr_predict(model: LrModel, features) -> np.ndarray:
    return model.predict(features)
