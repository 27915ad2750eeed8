"""Exception types shared across the toolkit.

Each class corresponds to one failure mode of the exact pipeline, so the
command-line layer can map them to distinct exit codes.
"""


class SpaceFormatError(ValueError):
    """Malformed space/measure/character data (bad JSON, bad rational, unknown field)."""


class ConsistencyError(ValueError):
    """Fixed-point data violates a localization identity (e.g. the GLS sum
    does not vanish above the top fixed point)."""


class NonRegularError(ValueError):
    """An evaluation or cut level coincides with a breakpoint / critical value."""


class NonGenericDirectionError(ValueError):
    """A circle direction pairs to zero with some isotropy weight."""


class InexactDivisionError(ArithmeticError):
    """Laurent division left a remainder; the data cannot come from a
    prequantized compact space."""


class NotQuasiFreeError(ValueError):
    """An isotropy weight has absolute value > 1 where a quasi-free action is required."""
