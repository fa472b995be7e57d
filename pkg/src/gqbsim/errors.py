"""Exception hierarchy shared across the package.

Two branches matter to callers: InputError (bad arguments, bad config,
contract violations on inputs) and NumericalError (the computation itself
went wrong). The CLI maps them to exit codes 1 and 2 respectively.
"""


class GqbError(Exception):
    """Base class for all package errors."""


class InputError(GqbError, ValueError):
    """Invalid argument, parameter set, or configuration."""


class NonHermitianError(InputError):
    """Matrix expected to be Hermitian is not, beyond tolerance."""


class DegenerateGroundLevelError(InputError):
    """Lowest energy level is degenerate; a ground state cannot be singled out."""


class ConfigError(InputError):
    """Config document failed to parse or validate; message names the field."""


class NumericalError(GqbError, RuntimeError):
    """Computation produced non-finite values or violated a numeric contract."""


class ConvergenceError(NumericalError):
    """Iterative routine exhausted its iteration budget."""
