"""Exception hierarchy shared by all superprim modules."""


class SuperprimError(Exception):
    """Base class; carries an optional machine-readable witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class RankOutOfRange(SuperprimError):
    pass


class UnsupportedFamily(SuperprimError):
    pass


class DimensionMismatch(SuperprimError):
    pass


class IsotropicRoot(SuperprimError):
    pass


class NotSimpleRoot(SuperprimError):
    pass


class SearchExhausted(SuperprimError):
    pass


class GroupTooLarge(SuperprimError):
    pass


class NonGenericWeight(SuperprimError):
    pass


class NonIntegralWeight(SuperprimError):
    pass


class AmbiguousAtypicalRoot(SuperprimError):
    pass


class WordDependence(SuperprimError):
    pass


class NoDominantRepresentative(SuperprimError):
    pass


class OrbitNotFree(SuperprimError):
    pass


class NotCircleDominant(SuperprimError):
    pass


class MalformedWeightLiteral(SuperprimError):
    def __init__(self, message, position=None):
        super().__init__(message, witness={"position": position})
        self.position = position
