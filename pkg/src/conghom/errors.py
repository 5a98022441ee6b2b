"""Exception types shared across modules."""


class InvariantError(RuntimeError):
    """A quantity the construction guarantees failed to hold; indicates a bug
    or a genuine counterexample, never bad user input."""


class OracleLimitError(RuntimeError):
    """Brute-force enumeration would exceed the configured element limit."""
