from .runs import consecutive_free, longest_free_runs
from .rules import LabelingCriteria, PuLabelVector, label_pu, \
                   label_conditions, select_b, save_criteria, load_criteria
from .calibration import CalibrationReport, GammaRecord, SplitRecord, \
                         calibrate, split_sweep
