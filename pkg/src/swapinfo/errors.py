"""Exception types raised across the package."""


class SwapInfoError(ValueError):
    """Base class for every error raised by swapinfo."""


class NotHermitian(SwapInfoError):
    def __init__(self, message="matrix is not Hermitian", index=None):
        if index is not None:
            message = f"element {index}: {message}"
        super().__init__(message)
        self.index = index


class NotPsd(SwapInfoError):
    def __init__(self, message="matrix is not positive semidefinite", index=None):
        if index is not None:
            message = f"element {index}: {message}"
        super().__init__(message)
        self.index = index


class NotComplete(SwapInfoError):
    def __init__(self, message="POVM elements do not sum to the identity", index=None):
        if index is not None:
            message = f"element {index}: {message}"
        super().__init__(message)
        self.index = index


class BadQubitSet(SwapInfoError):
    pass


class BadIndex(SwapInfoError):
    pass


class BadWeights(SwapInfoError):
    pass


class InvalidState(SwapInfoError):
    pass


class NotOrthonormal(SwapInfoError):
    pass


class BadLambda(SwapInfoError):
    pass


class BadSpec(SwapInfoError):
    pass


class BadSchmidt(SwapInfoError):
    pass


class BadRange(SwapInfoError):
    pass


class ZeroProbability(SwapInfoError):
    pass


class NotBellDiagonal(SwapInfoError):
    pass


class EmptyInput(SwapInfoError):
    pass


class InvalidPovm(SwapInfoError):
    """A POVM failed validation; ``cause`` holds the specific failure."""

    def __init__(self, cause):
        super().__init__(str(cause))
        self.cause = cause


class ValidationFailed(InvalidPovm):
    """A POVM read from a file parsed but failed validation."""


class ParseError(SwapInfoError):
    pass
