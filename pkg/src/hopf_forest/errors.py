"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HopfForestError(Exception):
    """Base class for all errors raised by hopf_forest."""


class ParseError(HopfForestError, ValueError):
    """Text does not match the grammar of the requested object kind."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class HeapOrderError(HopfForestError, ValueError):
    """A labelled tree violates one of the heap-order conditions."""


class UndefinedTermError(HopfForestError, KeyError):
    """A linear map was applied to a basis element it is not defined on."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class AlgebraMismatchError(HopfForestError, ValueError):
    """Two operands live in different algebras."""


class InvalidBasisError(HopfForestError, TypeError):
    """An object is not a basis element of the algebra it was handed to."""


class ReducibleLetterError(HopfForestError, ValueError):
    """A word letter is not \\-irreducible."""


class ResourceLimitError(HopfForestError):
    """A requested degree exceeds the configured enumeration cap."""
