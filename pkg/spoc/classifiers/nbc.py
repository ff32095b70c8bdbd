"""Naive Bayes classifier with Bernoulli or Gaussian feature likelihoods."""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

from ..errors import ContractError
from .data import Dataset, majority_class

log = logging.getLogger(__name__)

nbc_kernels = ('bernoulli', 'gaussian')

# Variance floor of the Gaussian kernel, relative to the feature variance.
_VAR_SMOOTHING = 1e-9


@dataclass(frozen=True)
class NbcModel:
    """
    class_priors[c] = p(P = c). For the Bernoulli kernel `params` holds
    theta[c, j] = p(S(j) = 1 | c); for the Gaussian kernel it holds
    (mean[c, j], var[c, j]).
    """
    class_priors: np.ndarray
    params: tuple
    kernel: str = 'bernoulli'
    smoothing: float = 1.0
    degenerate: bool = False
    majority: int = 0

    @property
    def n_features(self):
        return self.params[0].shape[1]

    def log_joint(self, features):
        """log p(c) + sum_j log p(S(j) | c), shape (n, 2)."""
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        if features.shape[1] != self.n_features:
            raise ContractError(f'Model has {self.n_features} features, got ' +
                                f'{features.shape[1]}.')
        with np.errstate(divide='ignore'):
            log_prior = np.log(self.class_priors)
        if self.kernel == 'bernoulli':
            theta, = self.params
            log_lik = features @ np.log(theta).T + \
                (1 - features) @ np.log1p(-theta).T
        else:
            mean, var = self.params
            log_lik = norm.logpdf(features[:, None, :], loc=mean[None],
                                  scale=np.sqrt(var)[None]).sum(axis=2)
        return log_lik + log_prior

    def posterior(self, features):
        """p(P = 1 | S) for every row."""
        joint = self.log_joint(features)
        joint -= joint.max(axis=1, keepdims=True)
        prob = np.exp(joint)
        return prob[:, 1] / prob.sum(axis=1)

    def predict(self, features):
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        if self.degenerate:
            return np.full(features.shape[0], self.majority, dtype=np.int8)
        joint = self.log_joint(features)
        # Ties go to class 0.
        return (joint[:, 1] > joint[:, 0]).astype(np.int8)

    def to_dict(self):
        return {'model': 'nbc', 'kernel': self.kernel,
                'smoothing': self.smoothing,
                'class_priors': self.class_priors.tolist(),
                'params': [p.tolist() for p in self.params],
                'degenerate': self.degenerate, 'majority': self.majority}

    @classmethod
    def from_dict(cls, values):
        return cls(np.array(values['class_priors']),
                   tuple(np.array(p) for p in values['params']),
                   values['kernel'], values['smoothing'],
                   values['degenerate'], values['majority'])


def nbc_fit(train: Dataset, kernel: str = 'bernoulli',
            smoothing: float = 1.0) -> NbcModel:
    train.require_trainable()
    if kernel not in nbc_kernels:
        raise ContractError(f'Unknown NBC kernel {kernel!r}.')
    features = train.features
    labels = train.labels
    counts = np.array([np.count_nonzero(labels == c) for c in (0, 1)])
    priors = counts / counts.sum()
    degenerate = bool(np.any(counts == 0))
    if degenerate:
        log.warning('NBC training data holds a single class; the model ' +
                    'predicts the majority class.')

    if kernel == 'bernoulli':
        ones = np.array([features[labels == c].sum(axis=0) for c in (0, 1)])
        theta = (ones + smoothing) / (counts[:, None] + 2 * smoothing)
        # Without smoothing an unseen value would give log(0).
        theta = np.clip(theta, 1e-12, 1 - 1e-12)
        params = (theta,)
    else:
        floor = _VAR_SMOOTHING * max(float(features.var(axis=0).max()), 1.0)
        mean = np.zeros((2, features.shape[1]))
        var = np.ones((2, features.shape[1]))
        for c in (0, 1):
            if counts[c]:
                mean[c] = features[labels == c].mean(axis=0)
                var[c] = features[labels == c].var(axis=0)
        params = (mean, var + floor)

    return NbcModel(priors, params, kernel, float(smoothing), degenerate,
                    majority_class(labels))


def nbc_predict(model: NbcModel, features) -> np.ndarray:
    return model.predict(features)
