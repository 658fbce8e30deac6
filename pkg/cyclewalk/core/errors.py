"""
Exception types raised by the numerical modules.
"""
from __future__ import annotations


class DomainError(ValueError):
    """Argument outside the domain of an operation (N, n, j, k, alpha, T)."""


class ParityError(DomainError):
    """Odd-N-only operation called with an even number of sites."""

    def __init__(self, operation: str, sites: int):
        super().__init__(
            f"{operation} requires an odd number of sites (got N={sites}); "
            "the closed-form results only hold when all eigenvalues are distinct"
        )
        self.operation = operation
        self.sites = sites


class ConsistencyError(RuntimeError):
    """A computed quantity violates an identity it must satisfy."""


def require_odd(operation: str, sites: int):
    if sites % 2 == 0:
        raise ParityError(operation, sites)
