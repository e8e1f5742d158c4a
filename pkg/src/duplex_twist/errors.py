"""Exception hierarchy.

Input problems derive from :class:`InputError`; violated identities derive
from :class:`PropertyViolation`. The CLI maps the two families to exit
codes 1 and 2.
"""


class DuplexTwistError(Exception):
    pass


class InputError(DuplexTwistError):
    pass


class PropertyViolation(DuplexTwistError):
    pass


# region parsing
class EmptyBase(InputError):
    pass


class BadCharacter(InputError):
    pass


class Disconnected(InputError):
    pass


class NotSimplyConnected(InputError):
    pass


# tilings
class MalformedDomino(InputError):
    pass


class CubeOutsideRegion(InputError):
    pass


class OverlappingDominoes(InputError):
    pass


class UncoveredCube(InputError):
    pass


class FlipNotApplicable(InputError):
    pass


# geometry on cycles
class PointOnCycle(InputError):
    pass


class VertexNotOnCycle(InputError):
    pass


class MalformedCycle(InputError):
    pass


# identities
class PretwistMismatch(PropertyViolation):
    pass


class NonIntegralTwist(PropertyViolation):
    pass


class LemmaViolation(PropertyViolation):
    def __init__(self, which: str, where: object, detail: str = ""):
        self.which = which
        self.where = where
        msg = f"lemma {which} fails at {where!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
