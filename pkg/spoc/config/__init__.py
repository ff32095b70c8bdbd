from .config import Config, known_classifiers
