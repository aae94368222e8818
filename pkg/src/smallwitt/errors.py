class InvariantError(RuntimeError):
    """A combinatorial fact that must hold for the order-3 plane did not.

    Seeing this means a bug in the library, never bad user input.
    """


class DesignFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
