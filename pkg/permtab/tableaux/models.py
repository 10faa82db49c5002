from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from permtab.errors import InvalidTableauError


Shape = tuple[int, ...]
Cell = tuple[int, int]


def _check_shape(row_lengths: Sequence[int]) -> None:
    if not row_lengths:
        raise InvalidTableauError("malformed", detail="a tableau needs at least one row")
    for r, length in enumerate(row_lengths, start=1):
        if length < 0:
            raise InvalidTableauError("malformed", detail=f"row {r} has negative length {length}")
        if r > 1 and length > row_lengths[r - 2]:
            raise InvalidTableauError(
                "shape not weakly decreasing",
                detail=f"row {r} has length {length} > {row_lengths[r - 2]}",
            )


def column_height(row_lengths: Sequence[int], c: int) -> int:
    """Number of rows reaching column c (1-based)."""
    return sum(1 for length in row_lengths if length >= c)


@dataclass(frozen=True)
class PermutationTableau:
    """A Ferrers shape (empty rows allowed) with a 0/1 filling.

    Rows run top to bottom and columns left to right; `fill[r][c]` is the
    0-based view of cell (r+1, c+1). Construction checks both filling rules,
    so every instance is a valid tableau.
    """
    row_lengths: Shape
    fill: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        row_lengths = tuple(self.row_lengths)
        fill = tuple(tuple(row) for row in self.fill)
        object.__setattr__(self, "row_lengths", row_lengths)
        object.__setattr__(self, "fill", fill)

        _check_shape(row_lengths)
        if len(fill) != len(row_lengths):
            raise InvalidTableauError(
                "malformed", detail=f"{len(fill)} filled rows for {len(row_lengths)} row lengths"
            )
        for r, (length, row) in enumerate(zip(row_lengths, fill), start=1):
            if len(row) != length:
                raise InvalidTableauError(
                    "malformed", detail=f"row {r} has {len(row)} cells, expected {length}"
                )
            for c, bit in enumerate(row, start=1):
                if bit not in (0, 1):
                    raise InvalidTableauError("malformed", (r, c), f"cell value {bit!r} is not 0/1")

        for c in range(1, self.num_columns + 1):
            if not any(fill[r][c - 1] for r in range(column_height(row_lengths, c))):
                raise InvalidTableauError("empty column", (1, c), f"column {c} has no 1")

        for r, row in enumerate(fill):
            one_left = False
            for c, bit in enumerate(row):
                if bit:
                    one_left = True
                elif one_left and any(fill[above][c] for above in range(r)):
                    raise InvalidTableauError(
                        "restricted-0 violation",
                        (r + 1, c + 1),
                        "0 with a 1 above it and a 1 to its left",
                    )

    @property
    def num_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def num_columns(self) -> int:
        return self.row_lengths[0]

    @property
    def length(self) -> int:
        return self.num_rows + self.num_columns

    def cell(self, r: int, c: int) -> int:
        return self.fill[r - 1][c - 1]

    def has_one_above(self, r: int, c: int) -> bool:
        return any(self.fill[above][c - 1] for above in range(r - 1))


class Mark(Enum):
    UP = "U"
    LEFT = "L"
    EMPTY = "."


@dataclass(frozen=True)
class AltTableau:
    """Arrow form of a tableau: Up at each column's topmost 1, Left at each
    row's rightmost restricted 0."""
    row_lengths: Shape
    marks: tuple[tuple[Mark, ...], ...]

    def __post_init__(self):
        row_lengths = tuple(self.row_lengths)
        marks = tuple(tuple(Mark(m) for m in row) for row in self.marks)
        object.__setattr__(self, "row_lengths", row_lengths)
        object.__setattr__(self, "marks", marks)

        _check_shape(row_lengths)
        if len(marks) != len(row_lengths) or any(
            len(row) != length for row, length in zip(marks, row_lengths)
        ):
            raise InvalidTableauError("malformed", detail="marks do not fit the shape")

        for c in range(1, row_lengths[0] + 1):
            ups = [r for r in range(column_height(row_lengths, c)) if marks[r][c - 1] is Mark.UP]
            if len(ups) != 1:
                raise InvalidTableauError("malformed", (1, c), f"column {c} has {len(ups)} Up marks")
            for r in range(ups[0]):
                if marks[r][c - 1] is Mark.LEFT:
                    raise InvalidTableauError("malformed", (r + 1, c), "Left mark above the Up")
        for r, row in enumerate(marks, start=1):
            if sum(1 for m in row if m is Mark.LEFT) > 1:
                raise InvalidTableauError("malformed", detail=f"row {r} has several Left marks")

    @property
    def num_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def num_columns(self) -> int:
        return self.row_lengths[0]

    def up_row(self, c: int) -> int:
        """1-based row of the Up mark in column c."""
        for r, row in enumerate(self.marks, start=1):
            if len(row) >= c and row[c - 1] is Mark.UP:
                return r
        raise InvalidTableauError("malformed", detail=f"column {c} has no Up mark")

    def left_column(self, r: int) -> int:
        """1-based column of the Left mark in row r, 0 when the row has none."""
        for c, mark in enumerate(self.marks[r - 1], start=1):
            if mark is Mark.LEFT:
                return c
        return 0


@dataclass(frozen=True)
class TableauStats:
    urr: int
    topone: int
    unrestricted_row_labels: frozenset[int]
