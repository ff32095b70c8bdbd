"""Primary user labels from occupancy: the four-condition rule."""
import json
import logging
from dataclasses import dataclass

import numpy as np

from ..errors import ContractError, ReportError
from ..occupancy.occupancy import OccupancyVector
from ..occupancy.status import StatusMatrix
from .runs import longest_free_runs

log = logging.getLogger(__name__)

# Empirical limits on the splitting range.
MIN_RECOMMENDED_U_OC = 0.75
MAX_RECOMMENDED_L_OC = 0.40


@dataclass(frozen=True)
class LabelingCriteria:
    gamma: float
    u_oc: float
    l_oc: float
    b_min_run: int

    def __post_init__(self):
        if not 0 <= self.l_oc <= self.u_oc <= 1:
            raise ContractError('Labeling criteria need 0 <= l_oc <= u_oc <= 1, ' +
                                f'got l_oc={self.l_oc}, u_oc={self.u_oc}.')
        if self.b_min_run < 1:
            raise ContractError('b_min_run must be at least 1.')

    def check_guardrails(self):
        """Returns the list of violated empirical limits, each also logged."""
        messages = []
        if self.u_oc < MIN_RECOMMENDED_U_OC:
            messages.append(f'u_oc = {self.u_oc} is below ' +
                            f'{MIN_RECOMMENDED_U_OC}')
        if self.l_oc > MAX_RECOMMENDED_L_OC:
            messages.append(f'l_oc = {self.l_oc} is above ' +
                            f'{MAX_RECOMMENDED_L_OC}')
        for message in messages:
            log.warning(f'Labeling criteria: {message}.')
        return messages

    def to_dict(self):
        return {'gamma': self.gamma, 'u_oc': self.u_oc, 'l_oc': self.l_oc,
                'b_min_run': self.b_min_run}

    @classmethod
    def from_dict(cls, values):
        return cls(gamma=float(values['gamma']), u_oc=float(values['u_oc']),
                   l_oc=float(values['l_oc']),
                   b_min_run=int(values['b_min_run']))


def save_criteria(criteria: LabelingCriteria, path):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(criteria.to_dict(), f, indent=4)
            f.write('\n')
    except OSError as exc:
        raise ReportError(path, exc) from exc


def load_criteria(path) -> LabelingCriteria:
    with open(path, 'r', encoding='utf-8') as f:
        return LabelingCriteria.from_dict(json.load(f))


@dataclass(frozen=True)
class PuLabelVector:
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int8)
        if values.ndim != 1:
            raise ContractError('PU labels must be a one-dimensional vector.')
        if np.any((values != 0) & (values != 1)):
            raise ContractError('PU labels must be 0 or 1.')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return self.values.size


def label_conditions(status: StatusMatrix, occ: OccupancyVector,
                     criteria: LabelingCriteria) -> np.ndarray:
    """Number (1..4) of the condition deciding every slot."""
    if status.n_slots != len(occ):
        raise ContractError(f'Status has {status.n_slots} slots, occupancy ' +
                            f'has {len(occ)}.')
    if criteria.b_min_run > status.num_bins:
        raise ContractError(f'b_min_run = {criteria.b_min_run} exceeds the ' +
                            f'{status.num_bins} bins of the band.')
    oc = occ.values
    con = longest_free_runs(status)

    conditions = np.zeros(oc.size, dtype=np.int8)
    conditions[oc > criteria.u_oc] = 1
    conditions[oc < criteria.l_oc] = 4
    ambiguous = (oc >= criteria.l_oc) & (oc <= criteria.u_oc)
    conditions[ambiguous & (con < criteria.b_min_run)] = 2
    conditions[ambiguous & (con >= criteria.b_min_run)] = 3
    assert np.all(conditions > 0), 'a slot matched none of the conditions'
    return conditions


def label_pu(status: StatusMatrix, occ: OccupancyVector,
             criteria: LabelingCriteria) -> PuLabelVector:
    """
    PU status per slot: present above u_oc (1), absent below l_oc (4);
    in between present only when no run of b_min_run free bins exists (2),
    absent otherwise (3).
    """
    conditions = label_conditions(status, occ, criteria)
    return PuLabelVector(np.isin(conditions, (1, 2)).astype(np.int8))


def select_b(status: StatusMatrix, occ: OccupancyVector, l_oc: float,
             u_oc: float, target_protection: float) -> int:
    """
    Smallest B for which at least `target_protection` of the slots with
    l_oc <= OC <= u_oc are labeled PU present. When no B up to k meets the
    target, k is returned and a warning is logged.
    """
    oc = occ.values
    in_range = (oc >= l_oc) & (oc <= u_oc)
    if not np.any(in_range):
        raise ContractError(f'No slot has occupancy in [{l_oc}, {u_oc}].')
    con = longest_free_runs(status)[in_range]
    k = status.num_bins
    for b in range(1, k + 1):
        if np.mean(con < b) >= target_protection:
            return b
    log.warning(f'No B in [1, {k}] protects {target_protection:.0%} of the ' +
                f'ambiguous slots; using B = {k}.')
    return k
