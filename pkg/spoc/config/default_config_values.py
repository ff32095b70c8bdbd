"""Default values for a spoc config"""

default_config_values = {
    # Data source: 'generator' (synthetic band preset) or 'csv'.
    'data-source': 'generator',
    'csv-path': '',

    ## Band preset, see spoc.spectrum.data.band_presets. For 'csv' data
    ## the band must match the number of power columns of the file.
    'band': 'band-880-915',

    ## Generator preset, see spoc.spectrum.generator. An empty value
    ## selects the preset that matches the group and periodicity of the band.
    'generator-preset': '',

    # Experiment layout:

    ## One day is 1440 one-minute slots.
    'days': 30,
    'slots-per-day': 1440,

    ## Training fractions of each day (chronological split).
    'split': [0.15],

    ## Any of 'nbc', 'dt', 'svm', 'lr', 'hmm', 'trained-hmm', 'svm-ffa'.
    'classifiers': ['nbc', 'dt', 'svm', 'lr', 'hmm', 'trained-hmm', 'svm-ffa'],

    # Calibration of the labeling criteria:

    ## Candidate energy detection thresholds in dBm.
    'gammas': [-102, -104, -106, -108],

    ## Occupancy split values M_s.
    'ms-grid': [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],

    ## Smallest fraction of ambiguous slots that must be labeled occupied.
    'target-protection': 0.9,

    # Classifier parameters:
    'nbc-kernel': 'bernoulli', # 'bernoulli' or 'gaussian'
    'nbc-smoothing': 1.0,
    'dt-min-obs-per-node': 17,
    'lr-max-predictors': 15,
    'lr-tolerance': 1e-4,

    ## LR is skipped for bands with more bins than this.
    'lr-max-bins': 64,

    'svm-box-constraint': 1.0,
    'svm-max-iter': 10000,
    'svm-tolerance': 1e-3,

    ## Observation alphabet size and smoothing of the HMM estimation.
    'hmm-symbols': 2,
    'hmm-smoothing': 1.0,

    # Firefly tuning of the SVM box constraint:
    'ffa-swarm-size': 10,
    'ffa-iterations': 20,
    'ffa-alpha': 1.0,
    'ffa-beta0': 2.0,
    'ffa-psi': 1.3,
    'ffa-bounds': [0.01, 100.0],

    ## Tail of the training block held out as the tuning objective.
    'ffa-validation-fraction': 0.2,

    # Secondary user outage:
    'out-su': 5,
    'outage-mode': 'as-written', # 'as-written' or 'complement'
    'outage-inclusive': True,

    # Run settings:
    'seed': 0,

    ## Days are processed by this many worker processes per MPI rank.
    'workers': 1,
    'out-dir': 'results',
    'output-type': 'numbers', # 'numbers', 'pictures' or 'all'

    ## Measured fit/predict times are the only non-reproducible output;
    ## with False they are written as zeros.
    'report-timings': True,

    ## Number of thresholds between the min and max power for the
    ## occupancy vs threshold table.
    'stats-threshold-count': 7,
}
