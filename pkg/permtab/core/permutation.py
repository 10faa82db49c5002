import re
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Iterator, Sequence

from permtab.config import S_CEILING
from permtab.errors import BoundsError, InvalidPermutationError, InvalidWordError

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of [n] in one-line notation (1-based values)."""
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise InvalidPermutationError("empty permutation")
        if set(values) != set(range(1, n + 1)):
            raise InvalidPermutationError(
                f"{values} is not a rearrangement of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __str__(self) -> str:
        return format_permutation(self)

    def at(self, i: int) -> int:
        """Value at 1-based position i."""
        return self.values[i - 1]

    def position(self, value: int) -> int:
        """1-based position of value."""
        return self.values.index(value) + 1

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return parse_permutation(text)


@dataclass(frozen=True, slots=True)
class StandardizedWord:
    """A word split into its order pattern and its sorted letter set."""
    pattern: Permutation
    support: tuple[int, ...]

    def __post_init__(self):
        if len(self.support) != self.pattern.n:
            raise InvalidWordError(
                f"support size {len(self.support)} does not match pattern length {self.pattern.n}"
            )
        if list(self.support) != sorted(set(self.support)):
            raise InvalidWordError(f"support {self.support} must be strictly increasing")


class Symmetry(Enum):
    REVERSE = "reverse"
    COMPLEMENT = "complement"
    INVERSE = "inverse"


def pattern_of(word: Sequence[int]) -> tuple[int, ...]:
    """Order pattern of a word of distinct letters, as a tuple over 1..len(word)."""
    ranks = {letter: rank for rank, letter in enumerate(sorted(word), start=1)}
    return tuple(ranks[letter] for letter in word)


def reverse(p: Permutation) -> Permutation:
    return Permutation(p.values[::-1])


def complement(p: Permutation) -> Permutation:
    n = p.n
    return Permutation(tuple(n + 1 - v for v in p.values))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, v in enumerate(p.values, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def reverse_complement(p: Permutation) -> Permutation:
    n = p.n
    return Permutation(tuple(n + 1 - v for v in reversed(p.values)))


_SYMMETRIES = {
    Symmetry.REVERSE: reverse,
    Symmetry.COMPLEMENT: complement,
    Symmetry.INVERSE: inverse,
}


def symmetry(p: Permutation, kind: Symmetry | str) -> Permutation:
    return _SYMMETRIES[Symmetry(kind)](p)


def standardize(word: Sequence[int]) -> StandardizedWord:
    word = tuple(word)
    if not word:
        raise InvalidWordError("empty word")
    if len(set(word)) != len(word):
        raise InvalidWordError(f"letters of {word} are not distinct")
    if min(word) < 0:
        raise InvalidWordError(f"letters of {word} must be non-negative")
    return StandardizedWord(Permutation(pattern_of(word)), tuple(sorted(word)))


def unstandardize(sw: StandardizedWord) -> Word:
    return tuple(sw.support[v - 1] for v in sw.pattern.values)


def relabel(pattern: Sequence[int], support: Sequence[int]) -> Word:
    """Unstandardize without building a StandardizedWord; empty input gives the empty word."""
    ordered = sorted(support)
    return tuple(ordered[v - 1] for v in pattern)


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    if not 1 <= n <= S_CEILING:
        raise BoundsError(f"n={n} outside 1..{S_CEILING}")
    for values in permutations(range(1, n + 1)):
        yield Permutation(values)


def enumerate_sn_with_first(n: int, first: int) -> Iterator[Permutation]:
    """The lexicographic chunk of S_n whose first letter is `first`."""
    if not 1 <= n <= S_CEILING:
        raise BoundsError(f"n={n} outside 1..{S_CEILING}")
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        yield Permutation((first,) + tail)


_SEPARATORS = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse "5 9 3 7 2", "5,9,3,7,2" or the digit shorthand "59372" (n <= 9)."""
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    if not tokens:
        raise InvalidPermutationError("empty permutation")
    if len(tokens) == 1 and len(tokens[0]) > 1:
        token = tokens[0]
        if not token.isdigit() or len(token) > 9:
            raise InvalidPermutationError(
                f"cannot read '{token}': use separators for n > 9"
            )
        tokens = list(token)
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise InvalidPermutationError(f"non-integer letter in '{text}'")
    return Permutation(values)


def format_permutation(p: Permutation | Sequence[int]) -> str:
    return " ".join(str(v) for v in p)
