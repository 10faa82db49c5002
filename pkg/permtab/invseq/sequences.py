import logging
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from permtab.config import I_CEILING
from permtab.errors import BoundsError, InvalidInversionSequenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class InversionSequence:
    """s_1 ... s_n with 0 <= s_i <= i - 1."""
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidInversionSequenceError("empty inversion sequence")
        for i, s in enumerate(entries, start=1):
            if not 0 <= s <= i - 1:
                raise InvalidInversionSequenceError(
                    f"entry s_{i} = {s} outside 0..{i - 1}"
                )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return format_inversion_sequence(self)

    @classmethod
    def of(cls, *entries: int) -> "InversionSequence":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "InversionSequence":
        return parse_inversion_sequence(text)


@dataclass(frozen=True)
class InvSeqStats:
    zero_set: frozenset[int]
    max_set: frozenset[int]
    dist_set: frozenset[int]
    asc_set: frozenset[int]
    rlmin_strict_set: frozenset[int]

    @property
    def zero(self) -> int:
        return len(self.zero_set)

    @property
    def max_stat(self) -> int:
        return len(self.max_set)

    @property
    def dist(self) -> int:
        return len(self.dist_set)

    @property
    def asc(self) -> int:
        return len(self.asc_set)

    @property
    def rlmin_strict(self) -> int:
        return len(self.rlmin_strict_set)

    def as_counts(self) -> dict[str, int]:
        return {
            "zero": self.zero,
            "maxStat": self.max_stat,
            "dist": self.dist,
            "asc": self.asc,
            "rlminStrict": self.rlmin_strict,
        }


def invseq_stats(s: InversionSequence) -> InvSeqStats:
    """Position-set statistics; positions are 1-based and RL-minima are strict."""
    e = s.entries
    n = len(e)
    zero_set = frozenset(i for i in range(1, n + 1) if e[i - 1] == 0)
    max_set = frozenset(i for i in range(1, n + 1) if e[i - 1] == i - 1)
    asc_set = frozenset(i for i in range(1, n) if e[i - 1] < e[i])

    dist_set = set()
    rlmin_strict_set = set()
    seen: set[int] = set()
    suffix_min = None
    for i in range(n, 0, -1):
        v = e[i - 1]
        if i >= 2 and v != 0 and v not in seen:
            dist_set.add(i)
        if suffix_min is None or v < suffix_min:
            rlmin_strict_set.add(i)
            suffix_min = v
        seen.add(v)

    return InvSeqStats(
        zero_set=zero_set,
        max_set=max_set,
        dist_set=frozenset(dist_set),
        asc_set=asc_set,
        rlmin_strict_set=frozenset(rlmin_strict_set),
    )


def gamma_insert(s: InversionSequence) -> InversionSequence:
    """Insertion involution: each s_i is inserted at 1-based position s_i + 1."""
    out: list[int] = []
    for v in s.entries:
        out.insert(v, v)
    return InversionSequence(tuple(out))


def delete_position(s: InversionSequence, j: int) -> InversionSequence:
    """Drop 1-based position j; needs s_i <= i - 2 for every i > j.

    That holds when j is the largest position with s_j = j - 1.
    """
    return InversionSequence(s.entries[:j - 1] + s.entries[j:])


def enumerate_in(n: int) -> Iterator[InversionSequence]:
    """All of I_n in lexicographic order."""
    if not 1 <= n <= I_CEILING:
        raise BoundsError(f"n={n} outside 1..{I_CEILING}")
    for entries in product(*(range(i) for i in range(1, n + 1))):
        yield InversionSequence(entries)


def enumerate_in_with_prefix(n: int, prefix: Sequence[int]) -> Iterator[InversionSequence]:
    """The lexicographic chunk of I_n starting with `prefix`."""
    if not 1 <= n <= I_CEILING:
        raise BoundsError(f"n={n} outside 1..{I_CEILING}")
    prefix = tuple(prefix)
    k = len(prefix)
    for rest in product(*(range(i) for i in range(k + 1, n + 1))):
        yield InversionSequence(prefix + rest)


_SEPARATORS = re.compile(r"[\s,]+")


def parse_inversion_sequence(text: str) -> InversionSequence:
    """Parse "00210" or "0,0,2,1,0"; separators are required past n = 10."""
    text = text.strip()
    if not text:
        raise InvalidInversionSequenceError("empty inversion sequence")
    tokens = [t for t in _SEPARATORS.split(text) if t]
    if len(tokens) == 1:
        token = tokens[0]
        if not token.isdigit():
            raise InvalidInversionSequenceError(f"cannot read '{token}'")
        if len(token) > 10:
            raise InvalidInversionSequenceError(
                f"cannot read '{token}': use separators for n > 10"
            )
        tokens = list(token)
    try:
        entries = tuple(int(t) for t in tokens)
    except ValueError:
        raise InvalidInversionSequenceError(f"non-integer entry in '{text}'")
    return InversionSequence(entries)


def format_inversion_sequence(s: InversionSequence) -> str:
    if s.n <= 10:
        return "".join(str(v) for v in s.entries)
    return ",".join(str(v) for v in s.entries)
