"""Exception hierarchy.

The CLI maps these onto exit codes: InputError -> 2, ScopeError and
ResourceError -> 3, CertificationError -> 1.
"""


class ElimError(Exception):
    """Base class for every error raised by the package."""

    step = None


class InputError(ElimError, ValueError):
    pass


class PolySyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(PolySyntaxError):
    pass


class SetupError(InputError):
    def __init__(self, failures):
        super().__init__("invalid setup: " + "; ".join(failures))
        self.failures = list(failures)


class ClassifyError(InputError):
    pass


class WitnessError(InputError):
    pass


class ScenarioError(InputError):
    pass


class OrderMismatchError(ElimError, ValueError):
    pass


class LocalizationError(ElimError, ValueError):
    """A denominator lies in the prime it is supposed to avoid."""


class ShapeError(ElimError, ValueError):
    pass


class ScopeError(ElimError):
    """Input is well formed but outside what the construction covers."""


class ResourceError(ElimError, RuntimeError):
    pass


class CertificationError(ElimError):
    """A certificate the pipeline relies on did not verify."""
