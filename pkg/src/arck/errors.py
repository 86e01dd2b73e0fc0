"""Exception types shared across the package."""


class ArckError(Exception):
    """Base class for all package-specific errors."""


class StructureError(ArckError):
    """Operands are structurally incompatible (different ring, order, arity)."""


class ContractError(ArckError):
    """An input violates a documented precondition of the operation."""


class ResourceLimitError(ArckError):
    """A configured resource cap (degree, iterations) was exceeded."""


class InternalError(ArckError):
    """An invariant the engine guarantees was observed to fail (a bug)."""


class BoundUnavailableError(ContractError):
    """No a-priori uniform bound is computable for the given data."""


class SessionError(ArckError):
    """Diagnostic for a session file, carrying source position."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)
