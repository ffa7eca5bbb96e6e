class ParameterError(ValueError):
    """Arguments violate an operation's preconditions."""


class EnumerationCapError(ParameterError):
    """An exhaustive enumeration would exceed its configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: search space {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class NeedsUpperModeError(ParameterError):
    """Exact constant-weight search is out of range; use upper-bound mode."""


class AlphabetTooSmallError(ParameterError):
    def __init__(self, q: int, required: int):
        super().__init__(f"alphabet too small: q={q}, construction needs q >= {required}")
        self.q = q
        self.required = required
