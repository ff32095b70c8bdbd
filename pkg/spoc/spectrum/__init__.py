from .data import BandConfig, PowerMatrix, GroundTruth, band_presets, get_band
from .generator import GeneratorConfig, PeriodicActivity, AperiodicActivity, \
                       generate_synthetic, generator_presets, \
                       get_generator_config, preset_for_band, \
                       load_generator_config, save_generator_config
from .spectrum_io import load_csv, write_csv
from .statistics import empirical_cdf, cdf_table
