from ..errors import ConfigError
from .data import Dataset, TrainTestSplit, ConstantModel, split, train_size, \
                   majority_class
from .metrics import Metrics, evaluate
from .nbc import NbcModel, nbc_fit, nbc_predict, nbc_kernels
from .tree import DtModel, dt_fit, dt_predict, entropy
from .svm import SvmModel, svm_fit, svm_predict
from .regression import LrModel, lr_fit, lr_predict, LR_CUTOFF


def _nbc_from_config(config):
    kernel = config.get('nbc-kernel', 'bernoulli')
    smoothing = config.getfloat('nbc-smoothing', 1.0)
    return lambda train: nbc_fit(train, kernel, smoothing)


def _dt_from_config(config):
    min_obs = config.getint('dt-min-obs-per-node', 17)
    return lambda train: dt_fit(train, min_obs)


def _svm_from_config(config):
    box = config.getfloat('svm-box-constraint', 1.0)
    max_iter = config.getint('svm-max-iter', 10000)
    tolerance = config.getfloat('svm-tolerance', 1e-3)
    return lambda train: svm_fit(train, box, max_iter, tolerance)


def _lr_from_config(config):
    max_predictors = config.getint('lr-max-predictors', 15)
    tolerance = config.getfloat('lr-tolerance', 1e-4)
    return lambda train: lr_fit(train, max_predictors, tolerance)


supervised_classifiers = {
    'nbc': _nbc_from_config,
    'dt': _dt_from_config,
    'svm': _svm_from_config,
    'lr': _lr_from_config,
}


def get_classifier(name, config):
    """
    Returns fit(train: Dataset) -> model for a supervised classifier, with
    the hyperparameters taken from the config. Fitted models expose
    predict(features).
    """
    try:
        return supervised_classifiers[name](config)
    except KeyError:
        raise ConfigError(f'Unknown supervised classifier {name!r}; choose ' +
                         f'from {", ".join(supervised_classifiers)}.') \
            from None
