"""Exception types shared across the package."""


class CobwebError(Exception):
    """Base class for every domain error raised by this package."""


class SequenceError(CobwebError):
    """Malformed sequence spec, or evaluation outside the defined range."""


class AdmissibilityError(CobwebError):
    """Vertex coordinates that no poset over the given sequence contains."""


class NotInPosetError(AdmissibilityError):
    """Vertex outside the finite poset under consideration."""


class PosetMismatchError(CobwebError):
    """Incidence functions over different posets were combined."""


class NonInvertibleError(CobwebError):
    """Inversion attempted on a function with a zero diagonal entry."""
