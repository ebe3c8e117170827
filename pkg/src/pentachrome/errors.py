"""Exception types shared across the package."""

from __future__ import annotations


class PentachromeError(Exception):
    """Base class for all package errors."""


class GraphError(PentachromeError, ValueError):
    """Malformed graph input (bad endpoint, self-loop, bad vertex set)."""


class CapExceeded(PentachromeError):
    """An exact routine was asked to work above its configured size cap."""


class OutsideClass(PentachromeError):
    """The input graph is not (P5, HVN)-free, or violates a wheel hypothesis.

    ``witness`` is an ordered vertex tuple when a forbidden pattern was found,
    ``pattern`` its tag.
    """

    def __init__(self, message, *, rule=None, vertices=(), pattern=None, witness=None):
        super().__init__(message)
        self.rule = rule
        self.vertices = tuple(vertices)
        self.pattern = pattern
        self.witness = witness


class PartitionViolation(OutsideClass):
    """A vertex has a neighbourhood trace no permitted class accepts."""


class ClaimViolation(OutsideClass):
    """A structural claim used by a coloring procedure failed at run time."""


class NotPawFree(OutsideClass):
    pass


class NotInClass(OutsideClass):
    """Input to the (P5, K3)-free recogniser is neither bipartite nor a 5-ring."""


class PreconditionViolation(PentachromeError, ValueError):
    """Caller-supplied prescribed sets do not meet the stated preconditions."""


class InternalInconsistency(PentachromeError, AssertionError):
    """A guaranteed-to-exist object was not found; indicates a bug."""


class HintInfeasible(PentachromeError):
    """The upper-bound hint given to the exact chromatic search is below chi."""

    def __init__(self, hint):
        super().__init__(f"graph is not {hint}-colorable")
        self.hint = hint
