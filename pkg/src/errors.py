class EngineError(Exception):
    """Base class for every failure raised by the engine."""


class ScalarDivisionError(EngineError, ZeroDivisionError):
    def __init__(self, value):
        self.value = value
        super().__init__(f'cannot invert zero scalar {value}')


class DiagonalDomainError(EngineError):
    def __init__(self, factor, monomial):
        self.factor = factor
        self.monomial = monomial
        super().__init__(f'{factor} is undefined on monomial {monomial}')


class SectorShiftError(EngineError):
    def __init__(self, message, sectors=None):
        self.sectors = sectors
        super().__init__(message)


class HermiticityError(EngineError):
    def __init__(self, row, col, lhs, rhs):
        self.row = row
        self.col = col
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f'pair is not hermitian at entry ({row}, {col}): {lhs} != {rhs}')


class TruncationError(EngineError):
    def __init__(self, required, margin):
        self.required = required
        self.margin = margin
        super().__init__(f'interior margin {margin} is too small, need at least {required}')


class OracleInconsistencyError(EngineError):
    def __init__(self, weight, multiplicity):
        self.weight = weight
        self.multiplicity = multiplicity
        super().__init__(f'negative multiplicity {multiplicity} at weight {weight} during peel-off')


class FixtureError(EngineError):
    def __init__(self, name, residual):
        self.name = name
        self.residual = residual
        super().__init__(f'fixture {name} failed, residual {residual}')


class TermLookupError(EngineError, LookupError):
    pass
