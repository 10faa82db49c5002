import logging
from typing import Iterator

from permtab.config import PT_CEILING
from permtab.errors import BoundsError
from permtab.tableaux.models import PermutationTableau, Shape, column_height

logger = logging.getLogger(__name__)


def _tails(count: int, ceiling: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing sequences of `count` values in 0..ceiling, lexicographically descending."""
    if count == 0:
        yield ()
        return
    for first in range(ceiling, -1, -1):
        for rest in _tails(count - 1, first):
            yield (first,) + rest


def enumerate_shapes(n: int) -> Iterator[Shape]:
    """Shapes of length n: k rows ascending, then row lengths lexicographically descending."""
    for k in range(1, n + 1):
        m = n - k
        for tail in _tails(k - 1, m):
            yield (m,) + tail


def enumerate_fillings(shape: Shape) -> Iterator[PermutationTableau]:
    """Valid fillings of one shape in row-major bit order, 0 before 1."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    heights = [column_height(shape, c + 1) for c in range(shape[0])]
    grid = [[0] * length for length in shape]
    column_has_one = [0] * shape[0]

    def place(index: int) -> Iterator[PermutationTableau]:
        if index == len(cells):
            yield PermutationTableau(shape, tuple(tuple(row) for row in grid))
            return
        r, c = cells[index]
        one_left = any(grid[r][:c])
        for bit in (0, 1):
            if bit == 0:
                if column_has_one[c] and one_left:
                    continue
                if r == heights[c] - 1 and not column_has_one[c]:
                    continue
            grid[r][c] = bit
            column_has_one[c] += bit
            yield from place(index + 1)
            column_has_one[c] -= bit
            grid[r][c] = 0

    yield from place(0)


def enumerate_pt(n: int) -> Iterator[PermutationTableau]:
    """Every permutation tableau of length n exactly once, in a fixed order."""
    if not 1 <= n <= PT_CEILING:
        raise BoundsError(f"n={n} outside 1..{PT_CEILING}")
    for shape in enumerate_shapes(n):
        logger.debug(f"Enumerating fillings of shape {shape}")
        yield from enumerate_fillings(shape)
