import json
from pathlib import Path
from typing import Any

from ..errors import ConfigError
from ..spectrum.data import band_presets
from ..spectrum.generator import generator_presets
from .default_config_values import default_config_values

known_classifiers = ('nbc', 'dt', 'svm', 'lr', 'hmm', 'trained-hmm', 'svm-ffa')
_list_options = ('split', 'classifiers', 'gammas', 'ms-grid', 'ffa-bounds')


class Config:
    def __init__(self, new_config_values: dict = None):
        # Explicit values are applied over the defaults.
        self.config_values = {}
        self.update(default_config_values)

        if new_config_values is not None:
            self.update(new_config_values)

    @classmethod
    def from_json(cls, path, overrides: dict = None) -> 'Config':
        try:
            with open(path, 'r', encoding='utf-8') as f:
                values = json.load(f)
        except OSError as exc:
            raise ConfigError(f'Cannot read config {path}: {exc}') from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f'Config {path} is not valid JSON: {exc}') \
                from exc
        if not isinstance(values, dict):
            raise ConfigError(f'Config {path} must be a JSON object.')
        unknown = sorted(set(values) - set(default_config_values))
        if unknown:
            raise ConfigError(f'Unknown options in {path}: {", ".join(unknown)}')
        config = cls(values)
        if overrides:
            config.update(overrides)
        return config

    def get(self, option_name: str, fallback: str = '') -> str:
        if option_name in self.config_values:
            return str(self.config_values.get(option_name))
        else:
            return fallback

    def getbool(self, option_name: str, fallback: bool = False) -> bool:
        str_value = self.get(option_name).lower()
        if str_value == 'true':
            return True
        elif str_value == 'false':
            return False
        else:
            return fallback

    def getint(self, option_name: str, fallback: int = 0) -> int:
        try:
            return int(float(self.get(option_name)))
        except ValueError:
            return fallback

    def getfloat(self, option_name: str, fallback: float = 0.0) -> float:
        try:
            return float(self.get(option_name))
        except ValueError:
            return fallback

    def getlist(self, option_name: str, fallback: list = None) -> list:
        value = self.config_values.get(option_name)
        if value is None:
            return [] if fallback is None else list(fallback)
        return list(value)

    def getfloats(self, option_name: str) -> list:
        try:
            return [float(v) for v in self.getlist(option_name)]
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"'{option_name}' must be a list of numbers.") \
                from exc

    def set(self, option_name: str, option_value: Any):
        self.config_values[option_name] = option_value

        # We intercept the setting of a new configuration value
        # in order to adjust other values:
        self.adjust_config_values_on_set(option_name)

    def update(self, new_config_values: dict = None):
        """
        Works similarly to the update() method of a Python dictionary:
        this method inserts the specified items to the config_values.
        """
        if new_config_values is not None:
            for key in new_config_values:
                self.set(key, new_config_values[key])

    def dump(self, path):
        with open(path, 'w', encoding='utf-8') as f_out:
            json.dump(self.config_values, f_out, indent=4)
            f_out.write('\n')

    def adjust_config_values_on_set(self, option_name: str):
        """
        Adjusts config values when we use config.set(...).
        """
        value = self.config_values[option_name]
        if option_name in _list_options:
            # '--classifiers nbc,dt' and '--split 0.3' come from the command
            # line as strings or scalars.
            if isinstance(value, str):
                items = [v.strip() for v in value.split(',') if v.strip()]
                if option_name != 'classifiers':
                    items = [float(v) for v in items]
                self.config_values[option_name] = items
            elif isinstance(value, (int, float)):
                self.config_values[option_name] = [value]

        if option_name == 'classifiers':
            self.config_values[option_name] = [
                str(name).lower() for name in self.config_values[option_name]]

    def validate(self) -> 'Config':
        """
        Checks the experiment invariants and raises ConfigError naming the
        first offending option.
        """
        unknown = sorted(set(self.config_values) - set(default_config_values))
        if unknown:
            raise ConfigError(f'Unknown options: {", ".join(unknown)}')

        classifiers = self.getlist('classifiers')
        if not classifiers:
            raise ConfigError("'classifiers' must name at least one classifier.")
        wrong = [c for c in classifiers if c not in known_classifiers]
        if wrong:
            raise ConfigError(f"'classifiers' has unknown names {wrong}; " +
                              f"choose from {', '.join(known_classifiers)}.")

        splits = self.getfloats('split')
        if not splits:
            raise ConfigError("'split' must hold at least one ratio.")
        if any(not 0 < s < 1 for s in splits):
            raise ConfigError("'split' ratios must lie in (0, 1).")

        for option in ('days', 'slots-per-day', 'out-su', 'workers',
                       'dt-min-obs-per-node', 'lr-max-predictors',
                       'ffa-swarm-size', 'ffa-iterations', 'hmm-symbols',
                       'stats-threshold-count'):
            if self.getint(option) < 1:
                raise ConfigError(f"'{option}' must be a positive integer.")
        if self.getint('ffa-swarm-size') < 2:
            raise ConfigError("'ffa-swarm-size' must be at least 2.")
        if self.getint('hmm-symbols') < 2:
            raise ConfigError("'hmm-symbols' must be at least 2.")

        if not self.getfloats('gammas'):
            raise ConfigError("'gammas' must hold at least one threshold.")
        ms_grid = self.getfloats('ms-grid')
        if not ms_grid or any(not 0 < m < 1 for m in ms_grid):
            raise ConfigError("'ms-grid' values must lie in (0, 1).")

        bounds = self.getfloats('ffa-bounds')
        if len(bounds) != 2 or not 0 < bounds[0] < bounds[1]:
            raise ConfigError("'ffa-bounds' must be [low, high] with " +
                              "0 < low < high.")
        if not 0 < self.getfloat('ffa-validation-fraction') < 1:
            raise ConfigError("'ffa-validation-fraction' must lie in (0, 1).")
        if self.getfloat('svm-box-constraint') <= 0:
            raise ConfigError("'svm-box-constraint' must be positive.")
        if not 0 <= self.getfloat('target-protection') <= 1:
            raise ConfigError("'target-protection' must lie in [0, 1].")

        if self.get('band') not in band_presets:
            raise ConfigError(f"'band' {self.get('band')!r} is not one of " +
                              f"{', '.join(band_presets)}.")
        preset = self.get('generator-preset')
        if preset and preset not in generator_presets:
            raise ConfigError(f"'generator-preset' {preset!r} is not one of " +
                              f"{', '.join(generator_presets)}.")
        if self.get('data-source') not in ('generator', 'csv'):
            raise ConfigError("'data-source' must be 'generator' or 'csv'.")
        if self.get('data-source') == 'csv' and \
                not Path(self.get('csv-path')).is_file():
            raise ConfigError(f"'csv-path' {self.get('csv-path')!r} " +
                              "does not name a file.")
        if self.get('nbc-kernel') not in ('bernoulli', 'gaussian'):
            raise ConfigError("'nbc-kernel' must be 'bernoulli' or 'gaussian'.")
        if self.get('outage-mode') not in ('as-written', 'complement'):
            raise ConfigError("'outage-mode' must be 'as-written' or " +
                              "'complement'.")
        if self.get('output-type') not in ('numbers', 'pictures', 'all'):
            raise ConfigError("'output-type' must be 'numbers', 'pictures' " +
                              "or 'all'.")
        return self
