"""Error types shared across the package."""


class BudgetError(RuntimeError):
    """An enumeration would exceed its hard desk-scale cap."""


class ConsistencyError(RuntimeError):
    """Two exact computations that must agree did not.

    Raised with a diagnostic payload; this always indicates a bug, never a
    rounding artifact (all arithmetic is exact).
    """

    def __init__(self, message, **details):
        if details:
            message = message + " | " + ", ".join(
                f"{k}={v}" for k, v in sorted(details.items()))
        super().__init__(message)
        self.details = details
