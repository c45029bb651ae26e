"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the admissible region of a formula."""


class ConfigError(ValueError):
    """A run configuration is missing, malformed, or inconsistent."""


class InstabilityError(RuntimeError):
    """The explicit scheme produced a non-finite or runaway state."""

    def __init__(self, message: str, step_index: int | None = None):
        super().__init__(message)
        self.step_index = step_index
