"""Shared exception types."""


class InternalInvariantError(RuntimeError):
    """A structural guarantee of the computation failed (ranks, torsion,
    integrality of basis coordinates).  Distinct from input validation
    errors, which are ValueErrors."""
