"""ID3 decision tree over binary features."""
import logging
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.stats import entropy as _entropy

from ..errors import ContractError
from .data import Dataset, majority_class

log = logging.getLogger(__name__)

LEAF = -1
_MIN_GAIN = 1e-12


def entropy(fractions) -> float:
    """Two-class entropy in bits; zero fractions contribute nothing."""
    fractions = np.asarray(fractions, dtype=np.float64)
    if fractions.sum() == 0:
        return 0.0
    return float(_entropy(fractions, base=2))


def _label_entropy(labels):
    ones = np.count_nonzero(labels)
    return entropy([labels.size - ones, ones])


@dataclass(frozen=True)
class DtModel:
    """
    Flat node arrays: `feature[i]` is the split feature of node i or LEAF,
    `children[i]` the nodes taken for S(j) = 0 and S(j) = 1,
    `label[i]` the majority class of the node.
    """
    feature: np.ndarray
    children: np.ndarray
    label: np.ndarray
    min_obs_per_node: int = 17

    @property
    def n_nodes(self):
        return self.feature.size

    @property
    def depth(self):
        depths = np.zeros(self.n_nodes, dtype=np.int64)
        for node in range(self.n_nodes):
            if self.feature[node] != LEAF:
                depths[self.children[node]] = depths[node] + 1
        return int(depths.max())

    def predict(self, features):
        features = np.atleast_2d(np.asarray(features, dtype=np.float64))
        return _traverse(features, self.feature, self.children, self.label)

    def to_dict(self):
        return {'model': 'dt', 'min_obs_per_node': self.min_obs_per_node,
                'feature': self.feature.tolist(),
                'children': self.children.tolist(),
                'label': self.label.tolist()}

    @classmethod
    def from_dict(cls, values):
        return cls(np.array(values['feature'], dtype=np.int64),
                   np.array(values['children'], dtype=np.int64).reshape(-1, 2),
                   np.array(values['label'], dtype=np.int8),
                   values['min_obs_per_node'])


@njit(cache=True)
def _traverse(features, feature, children, label):
    out = np.empty(features.shape[0], dtype=np.int8)
    for i in range(features.shape[0]):
        node = 0
        while feature[node] != -1:
            branch = 1 if features[i, feature[node]] > 0.5 else 0
            node = children[node, branch]
        out[i] = label[node]
    return out


def _best_split(features, labels):
    """Feature with the largest information gain, or None."""
    n = labels.size
    parent = _label_entropy(labels)
    ones = features.sum(axis=0)
    ones_and_busy = features[labels == 1].sum(axis=0)
    busy = np.count_nonzero(labels)

    best_gain, best_j = _MIN_GAIN, None
    for j in range(features.shape[1]):
        n1 = ones[j]
        n0 = n - n1
        if n0 == 0 or n1 == 0:
            continue
        b1 = ones_and_busy[j]
        b0 = busy - b1
        children = (n0 * entropy([n0 - b0, b0]) +
                    n1 * entropy([n1 - b1, b1])) / n
        gain = parent - children
        # Strict comparison keeps the lowest feature index on ties.
        if gain > best_gain:
            best_gain, best_j = gain, j
    return best_j


def dt_fit(train: Dataset, min_obs_per_node: int = 17) -> DtModel:
    """
    Greedy top-down induction: a node becomes a leaf when it holds fewer
    than `min_obs_per_node` slots, is pure, or has no split with positive
    information gain.
    """
    train.require_trainable()
    if min_obs_per_node < 1:
        raise ContractError('min_obs_per_node must be at least 1.')
    if not train.binary:
        raise ContractError('The decision tree needs binary features.')

    feature, children, label = [], [], []

    def new_node(rows):
        node = len(feature)
        feature.append(LEAF)
        children.append([0, 0])
        label.append(majority_class(train.labels[rows]))
        return node

    stack = [(new_node(np.arange(train.n_samples)),
              np.arange(train.n_samples))]
    while stack:
        node, rows = stack.pop()
        labels = train.labels[rows]
        if rows.size < min_obs_per_node or _label_entropy(labels) == 0:
            continue
        j = _best_split(train.features[rows], labels)
        if j is None:
            continue
        feature[node] = j
        on = train.features[rows, j] > 0.5
        for branch, subset in ((0, rows[~on]), (1, rows[on])):
            child = new_node(subset)
            children[node][branch] = child
            stack.append((child, subset))

    log.debug(f'dt_fit: {len(feature)} nodes from {train.n_samples} slots')
    return DtModel(np.array(feature, dtype=np.int64),
                   np.array(children, dtype=np.int64).reshape(-1, 2),
                   np.array(label, dtype=np.int8), min_obs_per_node)


def dt_predict(model: DtModel, features) -> np.ndarray:
    return model.predict(features)
