"""Exception types for contract violations."""
from __future__ import annotations


class NonassocError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(NonassocError):
    pass


class DuplicateEntryError(NonassocError):
    pass


class DependentBasisError(NonassocError):
    pass


class SpanNotClosedError(NonassocError):
    """A proposed subalgebra basis whose span is not closed under the product."""

    def __init__(self, i: int, j: int, residual):
        self.pair = (i, j)
        self.residual = residual
        super().__init__(
            f"span is not closed under the product: product of basis elements "
            f"({i}, {j}) leaves residual {residual} outside the span"
        )


class ImageNotInSpanError(NonassocError):
    """u * (basis element) escapes the subalgebra span."""

    def __init__(self, basis_index: int, residual):
        self.basis_index = basis_index
        self.residual = residual
        super().__init__(
            f"image of basis element {basis_index} is not in the span; "
            f"residual {residual}"
        )


class MalformedPropertyError(NonassocError):
    pass


class GridError(NonassocError):
    pass


class SearchStrategyError(NonassocError):
    pass


class UnknownFixtureError(NonassocError):
    pass


class FileFormatError(NonassocError):
    pass
