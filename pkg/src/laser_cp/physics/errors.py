"""Domain exceptions raised by the numerical layer."""


class LaserCpError(Exception):
    """Base class for all numerical-layer errors."""


class PoleError(LaserCpError):
    """Evaluation hit a pole: frequency on an atomic transition, or zero detuning."""


class ModelError(LaserCpError):
    """Operation is undefined for the given surface model variant."""


class DomainError(LaserCpError):
    """Argument lies outside the physical domain of the operation."""


class QuadratureError(LaserCpError):
    """Adaptive quadrature did not converge within the subdivision budget."""

    def __init__(self, message: str, value: float, error: float) -> None:
        """Keep the achieved estimate and its error bound alongside the message."""
        super().__init__(f"{message} (estimate={value:.6e}, error={error:.3e})")
        self.value = value
        self.error = error


class CurvePointError(LaserCpError):
    """A single grid point of a curve failed; carries the operation and the failing z."""

    def __init__(self, operation: str, z: float, cause: Exception) -> None:
        """Wrap the original failure."""
        super().__init__(f"{operation} failed at z={z:.6e} m: {cause}")
        self.operation = operation
        self.z = z
        self.cause = cause
