"""Exception types raised across the package.

Every error carries a short machine-readable ``name`` matching the class
name, which the CLI prints in JSON error payloads.
"""


class BrauerError(Exception):
    @property
    def name(self):
        return type(self).__name__


class EvenArgument(BrauerError):
    pass


class UnitArgument(BrauerError):
    pass


class DivisibilityViolation(BrauerError):
    pass


class NotCoprime(BrauerError):
    pass


class ZeroArgument(BrauerError):
    pass


class UnsupportedDegree(BrauerError):
    pass


class NotInS(BrauerError):
    pass


class NotUnimodular(BrauerError):
    pass


class NotIntegral(BrauerError):
    pass


class RankMismatch(BrauerError):
    pass


class IndexInfinite(BrauerError):
    pass


class DegenerateLine(BrauerError):
    pass


class InconsistentRelations(BrauerError):
    pass


class RamifiedPrime(BrauerError):
    pass


class SamplingExhausted(BrauerError):
    pass


class InconsistentSamples(BrauerError):
    pass


class NotIsometry(BrauerError):
    pass


class ActionNotWellDefined(BrauerError):
    pass


class NotEquivariant(BrauerError):
    pass


class NotExact(BrauerError):
    pass


class AmbientMismatch(BrauerError):
    pass


class BadCharacteristic(BrauerError):
    pass


class HypothesisFailed(BrauerError):
    pass


class FactorizationTooHard(BrauerError):
    pass
