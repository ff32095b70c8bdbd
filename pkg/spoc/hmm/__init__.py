from .data import HmmModel, ObservationSequence, StateSequence, default_hmm
from .algorithms import discretize_observations, forward, viterbi, \
                        path_log_probability
from .estimation import estimate_hmm, sample_hmm
from .classify import hmm_classify, hmm_predict
