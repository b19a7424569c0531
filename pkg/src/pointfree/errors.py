"""Exception types. Validation routines that the harness consumes return
reports with witnesses; these are raised only for violated preconditions."""


class PointfreeError(Exception):
    pass


class InvalidStructure(PointfreeError, ValueError):
    """Input does not satisfy the invariants of the type being built."""


class TooLarge(PointfreeError):
    """A carrier or a search space exceeds the configured guard."""


class NotDistributive(PointfreeError):
    pass


class NotFrameMorphism(PointfreeError):
    pass


class NotBoundedLatticeHom(PointfreeError):
    pass


class NotMTMorphism(PointfreeError):
    pass


class NotContinuous(PointfreeError):
    pass


class NotT0(PointfreeError):
    pass


class NotSlicing(PointfreeError):
    pass


class NotSubalgebra(PointfreeError):
    pass


class NotD(PointfreeError):
    pass


class TargetNotTD(PointfreeError):
    pass


class SourceNotTD(PointfreeError):
    pass


class NotLocallyClosedMap(PointfreeError):
    pass


class SourceTargetMismatch(PointfreeError):
    pass


class Mismatch(PointfreeError):
    pass


class InternalInconsistency(PointfreeError):
    """A property that must hold for every verified input failed."""
