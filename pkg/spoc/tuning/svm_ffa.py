"""SVM whose box constraint is tuned by the firefly algorithm."""
import logging

import pandas as pd

from ..classifiers.data import Dataset
from ..classifiers.metrics import evaluate
from ..classifiers.svm import svm_fit
from ..errors import ContractError, ConvergenceError
from .firefly import FfaResult, SwarmConfig, ffa_optimize

log = logging.getLogger(__name__)

tuning_history_columns = ['iteration', 'best_box_constraint', 'best_ca']


def box_constraint_objective(train: Dataset, validation: Dataset,
                             max_iter: int = 10000, tolerance: float = 1e-3):
    """Validation CA of an SVM trained at a given box constraint."""
    def objective(box_constraint):
        try:
            model = svm_fit(train, box_constraint, max_iter, tolerance)
        except ConvergenceError as exc:
            log.warning(f'Box_ct = {box_constraint:.4g}: {exc}; brightness 0.')
            return 0.0
        return evaluate(model.predict(validation.features),
                        validation.labels).ca
    return objective


def svm_ffa_fit(train: Dataset, validation: Dataset, cfg: SwarmConfig,
                max_iter: int = 10000, tolerance: float = 1e-3):
    """
    Tunes Box_ct for the best CA on `validation` and returns the SVM
    trained on `train` at that value.

    Returns
    -------
    (SvmModel, FfaResult)
    """
    train.require_trainable()
    validation.require_trainable()
    for name, dataset in (('training', train), ('validation', validation)):
        if dataset.classes.size < 2:
            raise ContractError(f'SVM+FFA {name} data must hold both classes.')

    result = ffa_optimize(
        box_constraint_objective(train, validation, max_iter, tolerance), cfg)
    log.info(f'svm+ffa: Box_ct = {result.best_position:.4g}, validation ' +
             f'CA = {result.best_brightness:.4f}')
    model = svm_fit(train, result.best_position, max_iter, tolerance)
    return model, result


def tuning_history_frame(result: FfaResult) -> pd.DataFrame:
    return pd.DataFrame(result.history, columns=tuning_history_columns)
