"""Exception hierarchy. Every error raised by the package derives from WGeomError."""


class WGeomError(ValueError):
    pass


class DimensionTooSmall(WGeomError):
    pass


class NotNormalized(WGeomError):
    pass


class AllZero(WGeomError):
    pass


class DimensionMismatch(WGeomError):
    pass


class DomainError(WGeomError):
    """Argument would make a radicand in the branch functions negative."""


class DegenerateState(WGeomError):
    pass


class BracketFailure(WGeomError):
    """No sign change on the bracket: preconditions of the branch solve are violated."""


class BranchMismatch(WGeomError):
    pass


class InconsistentInputs(WGeomError):
    pass


class NotHighlyEntangled(WGeomError):
    pass


class RegionViolation(WGeomError):
    pass


class TooLarge(WGeomError):
    pass
