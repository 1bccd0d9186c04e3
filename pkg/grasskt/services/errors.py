# Exception hierarchy shared by the services and the CLI.
# Each error knows the process exit code the CLI maps it to.


class GrassKTError(RuntimeError):
    """Base class for every failure raised by the grasskt services."""

    exit_code = 1


class InvalidParameters(GrassKTError):
    """Bad user input: parameter ranges, unsupported parity, malformed text."""

    exit_code = 3


class ResourceCapExceeded(GrassKTError):
    """A step, time or degree budget ran out before the computation finished."""

    exit_code = 1


class NotFinitelyGenerated(GrassKTError):
    """The quotient has an infinite standard-monomial set."""

    exit_code = 1


class NotExpressible(GrassKTError):
    """The target is provably outside the subring generated by the given elements."""

    exit_code = 2


class NotExpressibleWithinCap(NotExpressible):
    """No expression was found using monomials up to the degree cap."""


class EngineMismatch(GrassKTError):
    """Two independent computations disagree; always an internal bug."""

    exit_code = 1


class VerificationFailed(GrassKTError):
    """A verification suite reported at least one failing case."""

    exit_code = 2
