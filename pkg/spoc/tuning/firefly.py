"""Firefly algorithm for maximizing a scalar objective over one parameter."""
import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, TuningError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwarmConfig:
    """
    Positions are searched in log10 coordinates when `log_scale` is set,
    so the bounds must then be positive.
    """
    swarm_size: int = 10
    iterations: int = 20
    alpha: float = 1.0
    beta0: float = 2.0
    psi: float = 1.3
    bounds: tuple = (0.01, 100.0)
    seed: int = 0
    log_scale: bool = True

    def __post_init__(self):
        low, high = (float(b) for b in self.bounds)
        object.__setattr__(self, 'bounds', (low, high))
        if self.swarm_size < 2:
            raise ConfigError('The swarm needs at least two fireflies.')
        if self.iterations < 1:
            raise ConfigError('The swarm needs at least one iteration.')
        if not low < high:
            raise ConfigError('Swarm bounds need low < high.')
        if self.log_scale and low <= 0:
            raise ConfigError('Log-scale swarm bounds must be positive.')

    @classmethod
    def from_config(cls, config, seed=None):
        return cls(swarm_size=config.getint('ffa-swarm-size', 10),
                   iterations=config.getint('ffa-iterations', 20),
                   alpha=config.getfloat('ffa-alpha', 1.0),
                   beta0=config.getfloat('ffa-beta0', 2.0),
                   psi=config.getfloat('ffa-psi', 1.3),
                   bounds=tuple(config.getfloats('ffa-bounds')),
                   seed=config.getint('seed') if seed is None else seed)

    def to_internal(self, positions):
        positions = np.asarray(positions, dtype=np.float64)
        return np.log10(positions) if self.log_scale else positions

    def to_external(self, coordinates):
        coordinates = np.asarray(coordinates, dtype=np.float64)
        return 10.0 ** coordinates if self.log_scale else coordinates

    @property
    def internal_bounds(self):
        return tuple(self.to_internal(self.bounds))


def firefly_rngs(cfg: SwarmConfig):
    """One independent generator per firefly, all derived from cfg.seed."""
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.swarm_size)
    return [np.random.default_rng(child) for child in children]


def ffa_step(positions, brightnesses, cfg: SwarmConfig, rng):
    """
    One synchronous move of the swarm. Every firefly is pulled toward
    every brighter one by beta0 * exp(-psi * d^2) * (a_j - a_i) and takes
    a random step alpha * (u - 0.5); the brightest firefly keeps its place.
    Results are clamped to the bounds.

    `rng` is a single generator or one generator per firefly.
    """
    coords = cfg.to_internal(positions)
    brightnesses = np.asarray(brightnesses, dtype=np.float64)
    if coords.size != cfg.swarm_size or brightnesses.size != cfg.swarm_size:
        raise ConfigError(f'Expected {cfg.swarm_size} positions and ' +
                          'brightnesses.')
    rngs = rng if isinstance(rng, (list, tuple)) else [rng] * coords.size
    best = int(np.argmax(brightnesses))

    moved = coords.copy()
    for i in range(coords.size):
        brighter = brightnesses > brightnesses[i]
        distance = coords[brighter] - coords[i]
        moved[i] += np.sum(cfg.beta0 * np.exp(-cfg.psi * distance ** 2) *
                           distance)
        # Every firefly draws, so the per-firefly streams stay aligned.
        step = cfg.alpha * (rngs[i].random() - 0.5)
        if i != best:
            moved[i] += step
    low, high = cfg.internal_bounds
    return np.clip(cfg.to_external(np.clip(moved, low, high)), *cfg.bounds)


@dataclass
class FfaResult:
    best_position: float
    best_brightness: float
    history: list = field(default_factory=list)
    positions: list = field(default_factory=list)


def _evaluate(objective, positions, iteration):
    values = np.empty(len(positions))
    for i, position in enumerate(positions):
        try:
            values[i] = float(objective(float(position)))
        except Exception as exc:
            raise TuningError(iteration, float(position), exc) from exc
    return values


def ffa_optimize(objective, cfg: SwarmConfig) -> FfaResult:
    """
    Maximizes `objective` over [low, high].

    `history` holds (iteration, best-ever position, best-ever brightness)
    for the initial swarm (iteration 0) and after every move;
    `positions` the swarm of every iteration.
    """
    rngs = firefly_rngs(cfg)
    low, high = cfg.internal_bounds
    positions = cfg.to_external([low + (high - low) * r.random() for r in rngs])
    positions = np.clip(positions, *cfg.bounds)
    brightness = _evaluate(objective, positions, 0)

    best = int(np.argmax(brightness))
    result = FfaResult(float(positions[best]), float(brightness[best]))
    result.history.append((0, result.best_position, result.best_brightness))
    result.positions.append(positions.copy())

    for iteration in range(1, cfg.iterations + 1):
        positions = ffa_step(positions, brightness, cfg, rngs)
        brightness = _evaluate(objective, positions, iteration)
        best = int(np.argmax(brightness))
        if brightness[best] > result.best_brightness:
            result.best_position = float(positions[best])
            result.best_brightness = float(brightness[best])
        result.history.append((iteration, result.best_position,
                               result.best_brightness))
        result.positions.append(positions.copy())
        log.debug(f'ffa iteration {iteration}: best {result.best_position:.4g}' +
                  f' -> {result.best_brightness:.4f}')
    return result
