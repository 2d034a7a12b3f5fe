"""Exception types raised across the toolkit."""


class DomratioError(Exception):
    """Base class for all toolkit errors."""


class MalformedGraph6(DomratioError, ValueError):
    """Input line is not valid graph6 (bad length, bad byte, dirty padding)."""


class TooLarge(DomratioError, ValueError):
    """Graph order exceeds the supported cap of 512 vertices."""


class EmptySet(DomratioError, ValueError):
    """An operation that needs a nonempty vertex set received an empty one."""


class SeedNotIndependent(DomratioError, ValueError):
    """Greedy completion was seeded with a set containing an edge."""


class NotDominating(DomratioError, ValueError):
    """The supplied set does not dominate the graph."""


class NotRegular(DomratioError, ValueError):
    """The graph is not regular (or not of the stated degree)."""


class NotConnected(DomratioError, ValueError):
    """The graph is not connected."""


class DegreeTooSmall(DomratioError, ValueError):
    """Regular degree below 3; the ratio bound machinery needs k >= 3."""


class CaseMismatch(DomratioError, ValueError):
    """Counting certificate requested outside its dense-core case."""


class IsolatedVertex(DomratioError, ValueError):
    """The graph has an isolated vertex where none is allowed."""


class InfeasibleSpec(DomratioError, ValueError):
    """No graph matches the requested order/degree combination."""


class CapExceeded(DomratioError, ValueError):
    """Requested enumeration order exceeds the per-degree safety cap."""


class RetriesExhausted(DomratioError, RuntimeError):
    """Random sampler failed to produce a simple connected graph in budget."""


class SolveTimeout(DomratioError, RuntimeError):
    """An exact solver ran past its cooperative deadline."""
