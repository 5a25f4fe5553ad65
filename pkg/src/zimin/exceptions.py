class ResourceCapError(RuntimeError):
    """A search or construction hit its configured length, node or memory cap."""


class BudgetExceeded(ResourceCapError):
    """Materialising a word would exceed the configured memory budget."""
