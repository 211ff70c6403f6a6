"""Exception taxonomy.

Violated preconditions and proven nonexistence are expected outcomes and map
to CLI exit code 2; anything surfacing as AssertionError is a defect in this
package and maps to exit code 3.
"""


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""


class NonexistenceError(PreconditionError):
    """The requested object provably does not exist."""


class SearchExhaustedError(RuntimeError):
    """A completion search ran out of candidates; possible only at sizes
    below the existence guarantees."""
