"""Secondary user outage probability from predicted PU labels."""
import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractError
from ..labeling.rules import PuLabelVector
from ..occupancy.occupancy import OccupancyVector

log = logging.getLogger(__name__)

outage_modes = ('as-written', 'complement')


@dataclass(frozen=True)
class OutageReport:
    free_blocks: list
    block_probabilities: list
    p_transmit: float
    p_outage: float
    out_su: int
    mode: str = 'as-written'
    inclusive: bool = True
    clamped: bool = False

    def to_dict(self):
        return {'free_blocks': [list(b) for b in self.free_blocks],
                'block_probabilities': list(self.block_probabilities),
                'p_transmit': self.p_transmit, 'p_outage': self.p_outage,
                'out_su': self.out_su, 'mode': self.mode,
                'inclusive': self.inclusive, 'clamped': self.clamped}


def _labels(p_eval):
    if isinstance(p_eval, PuLabelVector):
        return p_eval.values
    return PuLabelVector(p_eval).values


def find_free_blocks(p_eval, out_su: int) -> list:
    """Maximal runs of PU-free (0) slots at least `out_su` long, as (start, length)."""
    if out_su < 1:
        raise ContractError('out_su must be at least 1.')
    free = np.concatenate(([0], (_labels(p_eval) == 0).astype(np.int8), [0]))
    edges = np.flatnonzero(np.diff(free))
    starts, stops = edges[0::2], edges[1::2]
    return [(int(s), int(e - s)) for s, e in zip(starts, stops)
            if e - s >= out_su]


def su_outage_probability(p_eval, occ: OccupancyVector, out_su: int,
                          mode: str = 'as-written',
                          inclusive: bool = True) -> OutageReport:
    """
    P(SU outage) = 1 - sum over free blocks of P(FB).

    P(FB) of a block starting at r multiplies OC over slots r..r+out_su
    (`inclusive`, out_su + 1 factors) or r..r+out_su-1; the `complement`
    mode multiplies 1 - OC instead. Factors past the end of the vector are
    dropped. A sum above 1 is clamped with a warning.
    """
    labels = _labels(p_eval)
    if labels.size != len(occ):
        raise ContractError(f'{labels.size} labels for {len(occ)} ' +
                            'occupancy values.')
    if mode not in outage_modes:
        raise ContractError(f'Unknown outage mode {mode!r}.')

    factors = occ.values if mode == 'as-written' else 1.0 - occ.values
    span = out_su + 1 if inclusive else out_su
    blocks = find_free_blocks(labels, out_su)
    probabilities = [float(np.prod(factors[r:r + span])) for r, _ in blocks]

    p_transmit = float(np.sum(probabilities)) if probabilities else 0.0
    clamped = p_transmit > 1.0
    if clamped:
        log.warning(f'Sum of free block probabilities {p_transmit:.4f} ' +
                    'exceeds 1; clamped.')
        p_transmit = 1.0
    return OutageReport(blocks, probabilities, p_transmit, 1.0 - p_transmit,
                        out_su, mode, inclusive, clamped)
