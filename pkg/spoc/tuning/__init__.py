from .firefly import SwarmConfig, FfaResult, ffa_step, ffa_optimize, \
                     firefly_rngs
from .svm_ffa import svm_ffa_fit, box_constraint_objective, \
                     tuning_history_frame, tuning_history_columns
