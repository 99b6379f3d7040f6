"""Exception types shared across the package."""


class RegimeError(ValueError):
    """Parameter outside the validity window of the requested construction."""


class SolverError(RuntimeError):
    """An iterative solver failed to deliver a trustworthy answer."""


class ConvergenceError(SolverError):
    """Iteration or step budget exhausted before the tolerance was met."""

    def __init__(self, message: str, *, last=None):
        super().__init__(message)
        # last useful iterate, for postmortems; shape depends on the solver
        self.last = last


class OptimalityError(SolverError):
    """A converged stationary point failed the global optimality inequality."""

    def __init__(self, message: str, *, margin: float | None = None, last=None):
        super().__init__(message)
        self.margin = margin
        self.last = last
