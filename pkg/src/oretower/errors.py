"""Exception types raised by the engine."""


class OreTowerError(Exception):
    """Base class for all engine errors."""


class DenominatorNotInMonoid(OreTowerError):
    pass


class VariableAboveCut(OreTowerError):
    pass


class LocalizedTowerUnsupported(OreTowerError):
    pass


class NotInvertible(OreTowerError):
    pass


class UnboundName(OreTowerError):
    pass


class ParseError(OreTowerError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class TowerNotWellFormed(OreTowerError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class GJMAConditionFailed(OreTowerError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ImageNotInP(OreTowerError):
    pass


class FactorizationMismatch(OreTowerError):
    pass


class MissingNormalityCertificate(OreTowerError):
    pass


class ResourceLimit(OreTowerError):
    pass
