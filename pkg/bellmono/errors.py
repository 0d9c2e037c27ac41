"""Exception hierarchy shared by every module.

Domain errors derive from ``BellError`` and map to CLI exit code 1;
``DocumentError`` covers malformed input and maps to exit code 2.
"""
from typing import Any, Optional, Sequence


class BellError(Exception):
    """Base class for domain errors."""

    def __init__(self, message: str, context: Optional[str] = None):
        super().__init__(message)
        self.context = context

    def __str__(self) -> str:
        message = super().__str__()
        if self.context:
            return f"[{self.context}] {message}"
        return message


class ScenarioError(BellError):
    """Invalid scenario or index outside a scenario."""


class ScenarioMismatchError(BellError):
    """Two objects were built on different scenarios."""


class CapExceededError(BellError):
    """A size cap from the configuration was exceeded."""

    def __init__(self, what: str, count: int, cap: int, context: Optional[str] = None):
        super().__init__(f"{what} count {count} exceeds cap {cap}", context)
        self.count = count
        self.cap = cap


class FunctionalFormError(BellError):
    """A functional has the wrong form for the requested operation."""


class BehaviorError(BellError):
    """A behavior table violates non-negativity or normalization."""

    def __init__(self, message: str, index: Optional[Sequence[int]] = None,
                 context: Optional[str] = None):
        super().__init__(message, context)
        self.index = tuple(index) if index is not None else None


class SignalingError(BellError):
    """An operation needing a non-signaling behavior got a signaling one."""

    def __init__(self, message: str, witness: Any, context: Optional[str] = None):
        super().__init__(message, context)
        self.witness = witness


class LpError(BellError):
    """Malformed linear program or an impossible solver outcome."""


class InvalidValueError(BellError):
    """A numeric argument is outside its allowed range."""


class DocumentError(Exception):
    """Malformed input document, reference, or command-line literal."""

    def __init__(self, message: str, path: Optional[str] = None, field: Optional[str] = None):
        super().__init__(message)
        self.path = path
        self.field = field

    def __str__(self) -> str:
        message = super().__str__()
        location = ":".join(part for part in (self.path, self.field) if part)
        return f"{location}: {message}" if location else message
