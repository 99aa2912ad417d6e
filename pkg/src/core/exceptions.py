"""
Exception types shared by the library and the CLI
"""


class HolevoError(Exception):
    """Base class for every error raised on purpose by this package"""


class ValidationError(HolevoError, ValueError):
    """A value object was built with data that breaks one of its invariants"""


class PhysicalityError(ValidationError):
    """Correlation triple outside the Bell tetrahedron"""

    def __init__(self, triple, eigenvalues):
        self.triple = tuple(triple)
        self.eigenvalues = tuple(float(v) for v in eigenvalues)
        self.min_eigenvalue = min(self.eigenvalues)
        super().__init__(
            f"unphysical correlation triple {self.triple}: Bell-basis eigenvalue "
            f"{self.min_eigenvalue:.6g} < 0 (eigenvalues {self.eigenvalues})"
        )


class DomainError(HolevoError, ValueError):
    """Argument outside the mathematical domain of a function"""


class ConfigError(HolevoError):
    """Bad environment configuration"""


class RefinementWarning(UserWarning):
    """Local refinement stopped before meeting its tolerance"""


class ReportInvariantError(RuntimeError):
    """A computed report contradicts an identity between its measures"""
