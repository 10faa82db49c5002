import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from permtab.core.permutation import Permutation, Word
from permtab.core.statistics import Extremum, boundary_extrema, extrema_positions
from permtab.errors import InvalidWordError

logger = logging.getLogger(__name__)


class BlockClass(Enum):
    """Which global extrema of the host a block contains."""
    T = "T"  # an LR-maximum and an RL-minimum
    A = "A"  # an LR-maximum only
    I = "I"  # an RL-minimum only
    N = "N"  # neither


@dataclass(frozen=True)
class Block:
    word: Word
    kind: BlockClass

    @property
    def first(self) -> int:
        return self.word[0]

    @property
    def last(self) -> int:
        return self.word[-1]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]

    @property
    def word(self) -> Word:
        return tuple(v for block in self.blocks for v in block.word)

    @property
    def classes(self) -> str:
        return "".join(block.kind.value for block in self.blocks)

    def of_class(self, kind: BlockClass) -> list[Block]:
        return [block for block in self.blocks if block.kind is kind]

    def bars(self) -> list[int]:
        """Gap positions 0..n carrying a bar (gaps 0 and n included)."""
        gaps = [0]
        for block in self.blocks:
            gaps.append(gaps[-1] + len(block.word))
        return gaps

    def pretty(self) -> str:
        """Blocks joined by "|" with class letters aligned on a second line."""
        segments = [str(block) for block in self.blocks]
        top = " | ".join(segments)
        bottom = " | ".join(
            block.kind.value.ljust(len(segment)) for block, segment in zip(self.blocks, segments)
        )
        return f"{top}\n{bottom.rstrip()}"


def decompose(p: Permutation) -> BlockDecomposition:
    values = p.values
    n = p.n
    bar = [False] * (n + 1)
    bar[0] = bar[n] = True
    for pos in extrema_positions(values, Extremum.RLMIN):
        bar[pos] = True
    for pos in extrema_positions(values, Extremum.LRMAX):
        bar[pos - 1] = True

    lr_max = boundary_extrema(values, Extremum.LRMAX)
    rl_min = boundary_extrema(values, Extremum.RLMIN)
    blocks = []
    start = 0
    for gap in range(1, n + 1):
        if not bar[gap]:
            continue
        word = values[start:gap]
        has_max = any(v in lr_max for v in word)
        has_min = any(v in rl_min for v in word)
        if has_max and has_min:
            kind = BlockClass.T
        elif has_max:
            kind = BlockClass.A
        elif has_min:
            kind = BlockClass.I
        else:
            kind = BlockClass.N
        blocks.append(Block(word, kind))
        start = gap
    return BlockDecomposition(tuple(blocks))


def rotate_min(word: Sequence[int]) -> Word:
    """Cyclic rotation that puts the minimum last."""
    if not word:
        raise InvalidWordError("empty word")
    word = tuple(word)
    i = word.index(min(word))
    return word[i + 1:] + word[:i + 1]


def rotate_max(word: Sequence[int]) -> Word:
    """Cyclic rotation that puts the maximum first."""
    if not word:
        raise InvalidWordError("empty word")
    word = tuple(word)
    i = word.index(max(word))
    return word[i:] + word[:i]


def varphi(p: Permutation) -> Permutation:
    """Block involution swapping (rlmin, wnm) while keeping rlm, des and u321.

    T blocks stay in order and cut the word into gaps. An N block keeps its
    gap, R(I) blocks join the gap fixed by their maximum among the T maxima,
    L(A) blocks the gap fixed by their minimum among the T minima. Each gap
    reads L(A) blocks by increasing minimum, then N, then R(I) blocks by
    increasing maximum.
    """
    decomposition = decompose(p)
    t_blocks = decomposition.of_class(BlockClass.T)
    t_maxima = [max(block.word) for block in t_blocks]
    t_minima = [min(block.word) for block in t_blocks]

    gap_count = len(t_blocks) + 1
    lefts: list[list[Word]] = [[] for _ in range(gap_count)]
    neutrals: list[list[Word]] = [[] for _ in range(gap_count)]
    rights: list[list[Word]] = [[] for _ in range(gap_count)]

    gap = 0
    for block in decomposition.blocks:
        if block.kind is BlockClass.T:
            gap += 1
        elif block.kind is BlockClass.N:
            neutrals[gap].append(block.word)
        elif block.kind is BlockClass.I:
            rotated = rotate_max(block.word)
            rights[sum(1 for m in t_maxima if m < rotated[0])].append(rotated)
        else:
            rotated = rotate_min(block.word)
            lefts[sum(1 for m in t_minima if m < rotated[-1])].append(rotated)

    out: list[int] = []
    for g in range(gap_count):
        for word in sorted(lefts[g], key=lambda w: w[-1]):
            out.extend(word)
        for word in neutrals[g]:
            out.extend(word)
        for word in sorted(rights[g], key=lambda w: w[0]):
            out.extend(word)
        if g < len(t_blocks):
            out.extend(t_blocks[g].word)
    return Permutation(tuple(out))
