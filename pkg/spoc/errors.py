"""Exceptions raised by spoc."""


class SpocError(Exception):
    pass


class ConfigError(SpocError, ValueError):
    pass


class ContractError(SpocError, ValueError):
    pass


class EmptyInputError(SpocError):
    pass


class CsvParseError(SpocError):
    def __init__(self, path, line, reason):
        self.path = path
        self.line = line
        super().__init__(f'{path}: line {line}: {reason}')


class SplitError(SpocError):
    pass


class CalibrationError(SpocError):
    pass


class ConvergenceError(SpocError):
    def __init__(self, iterations, gap, objective_delta):
        self.iterations = iterations
        self.gap = gap
        self.objective_delta = objective_delta
        super().__init__(
            f'SVM solver did not converge in {iterations} iterations: ' +
            f'KKT gap = {gap:.3e}, objective delta = {objective_delta:.3e}')


class TuningError(SpocError):
    def __init__(self, iteration, position, reason):
        self.iteration = iteration
        self.position = position
        super().__init__(f'Objective failed at iteration {iteration}, ' +
                         f'position {position}: {reason}')


class ExperimentError(SpocError):
    pass


class ReportError(SpocError):
    def __init__(self, path, reason):
        self.path = path
        super().__init__(f'Cannot write {path}: {reason}')
