"""Exception types shared across the engine.

Plain ``ValueError`` is used for precondition violations on user input
(bad letters, out-of-range indices, sites outside the region).  The two
classes here mark conditions with dedicated exit codes in the CLI.
"""


class GuardError(Exception):
    """A resource guard rejected the request (state bits, enumeration cells)."""


class CrossCheckError(Exception):
    """Two internally redundant computations of the same quantity disagree."""
