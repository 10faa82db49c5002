class PermtabError(ValueError):
    """Base class for every input or precondition error raised by permtab."""


class InvalidPermutationError(PermtabError):
    pass


class InvalidWordError(PermtabError):
    pass


class InvalidInversionSequenceError(PermtabError):
    pass


class InvalidTableauError(PermtabError):
    """A shape or filling that is not a permutation tableau.

    `reason` is one of "empty column", "restricted-0 violation",
    "shape not weakly decreasing" or "malformed"; `cell` is the 1-based
    (row, column) witness when one exists.
    """

    def __init__(self, reason: str, cell: tuple[int, int] | None = None, detail: str | None = None):
        self.reason = reason
        self.cell = cell
        message = reason
        if cell is not None:
            message += f" at cell {cell}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class DomainError(PermtabError):
    """Input lies outside the domain of a map (e.g. contains 321)."""


class UnknownStatisticError(PermtabError):
    pass


class UnknownMapError(PermtabError):
    pass


class BoundsError(PermtabError):
    """Requested size is outside what an enumerator supports."""


class UnknownSuiteError(PermtabError):
    pass
