class DomainError(ValueError):
    """An input outside the mathematical domain of an operation."""
