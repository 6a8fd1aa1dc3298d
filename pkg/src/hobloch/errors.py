"""Package exception types.

Invalid input raises the builtin ``ValueError``; ``NumericsError`` is
reserved for computations whose internal consistency checks fail (it maps
to a distinct CLI exit code).
"""


class NumericsError(RuntimeError):
    """A numeric consistency check failed (non-integer winding, refused
    integrator step size)."""
