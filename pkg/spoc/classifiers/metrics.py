from dataclasses import dataclass

import numpy as np

from ..errors import ContractError


@dataclass(frozen=True)
class Metrics:
    ca: float
    misdetections: int
    false_alarms: int
    n_samples: int
    fit_seconds: float = 0.0
    predict_seconds: float = 0.0

    @property
    def correct(self):
        return self.n_samples - self.misdetections - self.false_alarms

    def to_dict(self):
        return {'ca': self.ca, 'misdetections': self.misdetections,
                'false_alarms': self.false_alarms,
                'fit_seconds': self.fit_seconds,
                'predict_seconds': self.predict_seconds}


def evaluate(predicted, reference, timings=(0.0, 0.0)) -> Metrics:
    """
    Classification accuracy of predicted PU labels against the reference.
    A misdetection predicts 0 where the reference is 1, a false alarm
    predicts 1 where it is 0.
    """
    predicted = np.asarray(predicted).astype(np.int8).ravel()
    reference = np.asarray(reference).astype(np.int8).ravel()
    if predicted.size != reference.size:
        raise ContractError(f'{predicted.size} predictions for ' +
                            f'{reference.size} reference labels.')
    if predicted.size == 0:
        raise ContractError('Cannot evaluate an empty prediction.')
    misdetections = int(np.count_nonzero((predicted == 0) & (reference == 1)))
    false_alarms = int(np.count_nonzero((predicted == 1) & (reference == 0)))
    correct = int(np.count_nonzero(predicted == reference))
    fit_seconds, predict_seconds = timings
    return Metrics(correct / predicted.size, misdetections, false_alarms,
                   int(predicted.size), float(fit_seconds),
                   float(predict_seconds))
