"""Selection of the threshold, the splitting range and B for a training block."""
import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import CalibrationError, ContractError
from ..occupancy.occupancy import OccupancyVector, slot_occupancy
from ..occupancy.status import threshold_status
from ..spectrum.data import PowerMatrix
from .rules import LabelingCriteria, select_b
from .runs import longest_free_runs

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GammaRecord:
    gamma: float
    l_s: float
    u_s: float
    in_range_count: int
    l_oc: float = None
    u_oc: float = None

    @property
    def valid(self):
        return self.l_oc is not None

    def to_dict(self):
        return {'gamma': self.gamma, 'l_s': self.l_s, 'u_s': self.u_s,
                'in_range_count': self.in_range_count,
                'l_oc': self.l_oc, 'u_oc': self.u_oc}


@dataclass(frozen=True)
class SplitRecord:
    ms: float
    n_idle: int
    n_busy: int
    majority_ca: float

    @property
    def single_class(self):
        return self.n_idle == 0 or self.n_busy == 0

    def to_dict(self):
        return {'ms': self.ms, 'n_idle': self.n_idle, 'n_busy': self.n_busy,
                'majority_ca': self.majority_ca}


@dataclass(frozen=True)
class CalibrationReport:
    records: list
    gamma: float
    l_oc: float
    u_oc: float
    ms_grid: list
    b_min_run: int
    b_target_met: bool
    split_sweep: list = field(default_factory=list)
    guardrails: list = field(default_factory=list)

    def to_dict(self):
        return {'records': [r.to_dict() for r in self.records],
                'gamma': self.gamma, 'l_oc': self.l_oc, 'u_oc': self.u_oc,
                'ms_grid': list(self.ms_grid), 'b_min_run': self.b_min_run,
                'b_target_met': self.b_target_met,
                'split_sweep': [s.to_dict() for s in self.split_sweep],
                'guardrails': list(self.guardrails)}


def _clean_grid(ms_grid):
    # 0.1 * 3 style float noise would break equality with occupancy values.
    return sorted({round(float(m), 10) for m in ms_grid})


def split_sweep(occ: OccupancyVector, ms_grid) -> list:
    """
    Labels the slots with a single split (busy iff OC > M_s) for every M_s
    and reports the class sizes and the accuracy of the majority-class
    predictor on those labels.
    """
    oc = occ.values
    records = []
    for ms in _clean_grid(ms_grid):
        n_busy = int(np.count_nonzero(oc > ms))
        n_idle = oc.size - n_busy
        records.append(SplitRecord(ms, n_idle, n_busy,
                                   max(n_idle, n_busy) / oc.size))
    return records


def _evaluate_gamma(gamma, occ, ms_grid):
    oc = occ.values
    l_s, u_s = float(oc.min()), float(oc.max())
    inside = [m for m in ms_grid if l_s < m < u_s]
    if not inside:
        return GammaRecord(gamma, l_s, u_s, 0)
    l_oc, u_oc = inside[0], inside[-1]
    count = int(np.count_nonzero((oc > l_oc) & (oc < u_oc)))
    return GammaRecord(gamma, l_s, u_s, count, l_oc, u_oc)


def calibrate(matrix: PowerMatrix, gammas, ms_grid,
              target_protection: float = 0.9):
    """
    Choose the labeling criteria for a block of slots.

    For every threshold the occupancy range [L_s, U_s] is measured; the
    split values strictly inside it form the candidate [l_oc, u_oc]. The
    threshold with the most slots strictly inside its range wins (the first
    one on ties), then B is swept for the protection target.

    Returns
    -------
    (LabelingCriteria, CalibrationReport)
    """
    gammas = [float(g) for g in gammas]
    ms_grid = _clean_grid(ms_grid)
    if not gammas or not ms_grid:
        raise ContractError('calibrate needs non-empty gammas and ms_grid.')
    matrix.require_non_empty()

    records = []
    best = None
    for gamma in gammas:
        occ = slot_occupancy(threshold_status(matrix, gamma))
        record = _evaluate_gamma(gamma, occ, ms_grid)
        records.append(record)
        log.debug(f'calibrate: gamma={gamma} L_s={record.l_s:.3f} ' +
                  f'U_s={record.u_s:.3f} in range={record.in_range_count}')
        if record.valid and (best is None or
                             record.in_range_count > best.in_range_count):
            best = record

    if best is None:
        raise CalibrationError(
            'Every threshold gives a single-class labeling: no split value ' +
            'lies strictly inside the occupancy range.')

    status = threshold_status(matrix, best.gamma)
    occ = slot_occupancy(status)
    ambiguous = (occ.values >= best.l_oc) & (occ.values <= best.u_oc)
    if np.any(ambiguous):
        b_min_run = select_b(status, occ, best.l_oc, best.u_oc,
                             target_protection)
        con = longest_free_runs(status)[ambiguous]
        b_target_met = bool(np.mean(con < b_min_run) >= target_protection)
    else:
        log.info('calibrate: no slot in the splitting range, B = 1.')
        b_min_run, b_target_met = 1, True

    criteria = LabelingCriteria(best.gamma, best.u_oc, best.l_oc, b_min_run)
    guardrails = criteria.check_guardrails()
    report = CalibrationReport(records, best.gamma, best.l_oc, best.u_oc,
                               ms_grid, b_min_run, b_target_met,
                               split_sweep(occ, ms_grid), guardrails)
    return criteria, report
