"""Spectrum occupancy toolkit: PU status labeling and classification."""

from .config import Config
from .experiment import run_experiment, emit_reports

__version__ = "0.1.0"
