import logging
import time

import numpy as np

from ..classifiers.metrics import Metrics, evaluate
from ..errors import ContractError
from ..labeling.rules import PuLabelVector
from .algorithms import viterbi
from .data import HmmModel, ObservationSequence

log = logging.getLogger(__name__)


def hmm_predict(model: HmmModel, obs: ObservationSequence) -> np.ndarray:
    """Viterbi-decoded states read as PU labels (state 1 = PU present)."""
    decoded = viterbi(model, obs)
    if decoded.zero_likelihood:
        log.warning('Every state path has zero probability under the HMM; ' +
                    'the decoded labels are the tie-break path.')
    return np.array(decoded.states, dtype=np.int8)


def hmm_classify(model: HmmModel, obs: ObservationSequence,
                 reference: PuLabelVector, fit_seconds: float = 0.0) -> Metrics:
    if len(obs) != len(reference):
        raise ContractError(f'{len(obs)} observations for {len(reference)} ' +
                            'reference labels.')
    start = time.perf_counter()
    predicted = hmm_predict(model, obs)
    predict_seconds = time.perf_counter() - start
    return evaluate(predicted, reference.values,
                    (fit_seconds, predict_seconds))
