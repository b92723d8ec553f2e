"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parse/validation failures exit 2,
a state whose terms all cancel exits 3, and a rank-policy/state
mismatch (parametric amplitudes under a non-generic policy) exits 4.
"""


class MultirankError(Exception):
    """Base class for all errors raised by this package."""


class StateSyntaxError(MultirankError):
    """A state document violates the input grammar.

    Carries the 1-based ``line`` and ``column`` of the offending
    statement so the CLI can point at it.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvalidStateError(MultirankError):
    """A structurally valid document describes an inadmissible state.

    Examples: a ket index out of range for its declared dimension, fewer
    than two parties, or two terms on the same ket that cannot be merged
    because one of them is parametric.
    """


class ZeroStateError(MultirankError):
    """Every term cancelled; the zero state has no rank profile."""


class PolicyMismatchError(MultirankError):
    """The requested rank policy cannot handle the given matrix.

    Raised when a matrix with parametric entries is pushed through the
    exact, fast-then-verify, or modular-only policies.
    """


class PrimeClashError(MultirankError):
    """The chosen prime divides a denominator of the matrix.

    Callers holding a prime table should resample; callers that passed
    an explicit prime see this propagated.
    """
