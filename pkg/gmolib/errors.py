"""
Exceptions raised by gmolib.
"""


class GmoError(Exception):
    """Base class for all errors raised in gmolib"""
    pass


class DomainError(GmoError, ValueError):
    """Argument lies outside the domain of an operation or a case"""
    pass


class PoleError(DomainError):
    """Argument lies within tolerance of a pole"""
    pass


class ConvergenceError(GmoError, RuntimeError):
    """
    Quadrature budget exhausted before the requested accuracy was met

    Arguments:
    ---------
    message: str
        what went wrong
    result: QuadResult
        partial result at the time of failure
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
