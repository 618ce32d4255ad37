class TangleError(Exception):
    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class InvalidStateError(TangleError, ValueError):
    pass


class QubitCountError(InvalidStateError):
    pass


class InvalidOperatorError(TangleError, ValueError):
    pass


class InvalidPermutationError(TangleError, ValueError):
    pass


class UnnormalizedStateError(TangleError, ValueError):
    pass


class UnknownBuiltinStateError(TangleError, LookupError):
    pass


class StateFileError(TangleError):
    pass


class InvalidTrialsError(TangleError, ValueError):
    pass
