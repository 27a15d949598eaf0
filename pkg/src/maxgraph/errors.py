"""Exception types shared across the package."""


class MaxGraphError(Exception):
    """Base class for all solver-specific failures."""


class NonSpacelike(MaxGraphError):
    """The induced metric degenerated (slope reached 1) at some point."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class GridTooCoarse(MaxGraphError):
    """Grid spacing too large for the domain (too few points or unfittable stencils)."""


class SolverDiverged(MaxGraphError):
    """Linear solve failed to meet the residual contract."""

    def __init__(self, component, residual):
        super().__init__(
            f"linear solve diverged on component {component}: residual {residual:.3e}"
        )
        self.component = component
        self.residual = residual


class StepRejected(MaxGraphError):
    """Explicit time step violates the stability bound."""


class SpacelikeLost(MaxGraphError):
    """The evolving graph left the spacelike regime."""

    def __init__(self, t, point=None):
        super().__init__(f"spacelike condition lost at t={t:.6g}")
        self.t = t
        self.point = point


class ConfigError(MaxGraphError):
    """Invalid job configuration or expression."""
