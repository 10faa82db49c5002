import logging
from typing import Sequence

from permtab.core.permutation import Permutation
from permtab.tableaux.models import (
    AltTableau,
    Mark,
    PermutationTableau,
    TableauStats,
    column_height,
)

logger = logging.getLogger(__name__)


def validate(row_lengths: Sequence[int], fill: Sequence[Sequence[int]]) -> PermutationTableau:
    """Build a tableau, raising InvalidTableauError naming the broken rule."""
    return PermutationTableau(tuple(row_lengths), tuple(tuple(row) for row in fill))


def border_labels(t: PermutationTableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Labels of the south-east border steps, numbered from the north-east corner.

    Returns (row_labels, column_labels) indexed by row top to bottom and
    column left to right.
    """
    row_labels = [0] * t.num_rows
    col_labels = [0] * t.num_columns
    label = 1
    cur = t.num_columns
    for r, length in enumerate(t.row_lengths):
        while cur > length:
            col_labels[cur - 1] = label
            label += 1
            cur -= 1
        row_labels[r] = label
        label += 1
    while cur > 0:
        col_labels[cur - 1] = label
        label += 1
        cur -= 1
    return tuple(row_labels), tuple(col_labels)


def to_alternative(t: PermutationTableau) -> AltTableau:
    marks = [[Mark.EMPTY] * length for length in t.row_lengths]
    for c in range(1, t.num_columns + 1):
        for r in range(1, column_height(t.row_lengths, c) + 1):
            if t.cell(r, c):
                marks[r - 1][c - 1] = Mark.UP
                break
    for r in range(1, t.num_rows + 1):
        for c in range(t.row_lengths[r - 1], 0, -1):
            if t.cell(r, c) == 0 and t.has_one_above(r, c):
                marks[r - 1][c - 1] = Mark.LEFT
                break
    return AltTableau(t.row_lengths, tuple(tuple(row) for row in marks))


def from_alternative(a: AltTableau) -> PermutationTableau:
    """Rebuild the 0/1 filling from the arrow form.

    Above a column's Up every cell is 0; below it a cell holds 1 exactly when
    it lies right of its row's Left mark (rows without a Left count as 0).
    """
    fill = []
    for r, length in enumerate(a.row_lengths, start=1):
        left = a.left_column(r)
        row = []
        for c in range(1, length + 1):
            up = a.up_row(c)
            if r < up:
                row.append(0)
            elif r == up:
                row.append(1)
            else:
                row.append(1 if c > left else 0)
        fill.append(tuple(row))
    return PermutationTableau(a.row_lengths, tuple(fill))


def phi_zigzag(t: PermutationTableau) -> Permutation:
    """Zigzag bijection: walk east from a row or south from a column, turning at every 1."""
    row_labels, col_labels = border_labels(t)
    n = t.length
    values = [0] * n
    starts = [(r, 1, True) for r in range(1, t.num_rows + 1)]
    starts += [(1, c, False) for c in range(1, t.num_columns + 1)]
    origin_labels = list(row_labels) + list(col_labels)

    for (r, c, east), origin in zip(starts, origin_labels):
        while True:
            if east:
                if c > t.row_lengths[r - 1]:
                    values[origin - 1] = row_labels[r - 1]
                    break
                if t.cell(r, c):
                    east = False
                    r += 1
                else:
                    c += 1
            else:
                if r > t.num_rows or c > t.row_lengths[r - 1]:
                    values[origin - 1] = col_labels[c - 1]
                    break
                if t.cell(r, c):
                    east = True
                    c += 1
                else:
                    r += 1
    return Permutation(tuple(values))


def gamma_cn(t: PermutationTableau) -> Permutation:
    """Insertion bijection driven by the arrow form, column by column."""
    row_labels, col_labels = border_labels(t)
    alt = to_alternative(t)
    unrestricted = sorted(
        row_labels[r - 1] for r in range(1, t.num_rows + 1) if not _has_restricted_zero(t, r)
    )
    word = list(unrestricted)
    for c in range(1, t.num_columns + 1):
        up = alt.up_row(c)
        lefts = [
            row_labels[r - 1]
            for r in range(1, t.num_rows + 1)
            if len(alt.marks[r - 1]) >= c and alt.marks[r - 1][c - 1] is Mark.LEFT
        ]
        block = sorted(lefts + [col_labels[c - 1]])
        at = word.index(row_labels[up - 1])
        word[at:at] = block
    return Permutation(tuple(word))


def _has_restricted_zero(t: PermutationTableau, r: int) -> bool:
    return any(
        t.cell(r, c) == 0 and t.has_one_above(r, c) for c in range(1, t.row_lengths[r - 1] + 1)
    )


def tableau_stats(t: PermutationTableau) -> TableauStats:
    row_labels, _ = border_labels(t)
    unrestricted = frozenset(
        row_labels[r - 1] for r in range(1, t.num_rows + 1) if not _has_restricted_zero(t, r)
    )
    return TableauStats(
        urr=len(unrestricted),
        topone=sum(t.fill[0]),
        unrestricted_row_labels=unrestricted,
    )
