from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from permtab.core.patterns import u312, u321
from permtab.core.permutation import Permutation, inverse


class Extremum(Enum):
    LRMAX = "lrmax"
    RLMAX = "rlmax"
    LRMIN = "lrmin"
    RLMIN = "rlmin"


def extrema_positions(word: Sequence[int], kind: Extremum | str) -> list[int]:
    """1-based positions of the LR/RL maxima/minima of a word of distinct letters."""
    kind = Extremum(kind)
    n = len(word)
    positions = []
    if kind in (Extremum.LRMAX, Extremum.LRMIN):
        best = None
        for i in range(n):
            w = word[i]
            if best is None or (w > best if kind is Extremum.LRMAX else w < best):
                best = w
                positions.append(i + 1)
        return positions
    best = None
    for i in range(n - 1, -1, -1):
        w = word[i]
        if best is None or (w > best if kind is Extremum.RLMAX else w < best):
            best = w
            positions.append(i + 1)
    positions.reverse()
    return positions


def boundary_extrema(word: Sequence[int], kind: Extremum | str) -> frozenset[int]:
    """Value set of the requested extrema; empty word gives the empty set."""
    return frozenset(word[i - 1] for i in extrema_positions(word, kind))


def lrmax(word: Sequence[int]) -> int:
    return len(extrema_positions(word, Extremum.LRMAX))


def rlmax(word: Sequence[int]) -> int:
    return len(extrema_positions(word, Extremum.RLMAX))


def lrmin(word: Sequence[int]) -> int:
    return len(extrema_positions(word, Extremum.LRMIN))


def rlmin(word: Sequence[int]) -> int:
    return len(extrema_positions(word, Extremum.RLMIN))


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def ascent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] < word[i])


def des(word: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(word)) if word[i - 1] > word[i])


def asc(word: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(word)) if word[i - 1] < word[i])


def ides(p: Permutation) -> int:
    return des(inverse(p).values)


def ides_set(p: Permutation) -> frozenset[int]:
    return descent_set(inverse(p).values)


def wnm_set(p: Permutation) -> frozenset[int]:
    """Values at positions that are weak excedances and not mid-points.

    Position i is a mid-point when some larger value precedes it and some
    smaller value follows it.
    """
    values = p.values
    n = len(values)
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(values[i], suffix_min[i + 1])
    found = []
    prefix_max = 0
    for i, v in enumerate(values):
        weak_excedance = v >= i + 1
        mid_point = prefix_max > v and suffix_min[i + 1] < v
        if weak_excedance and not mid_point:
            found.append(v)
        prefix_max = max(prefix_max, v)
    return frozenset(found)


def wnm(p: Permutation) -> int:
    return len(wnm_set(p))


def rlm_set(p: Permutation) -> frozenset[int]:
    """RL-maxima of the prefix strictly before the letter 1."""
    prefix = p.values[: p.values.index(1)]
    return boundary_extrema(prefix, Extremum.RLMAX)


def rlm(p: Permutation) -> int:
    return len(rlm_set(p))


@dataclass(frozen=True)
class StatReport:
    n: int
    lrmax_set: frozenset[int]
    rlmax_set: frozenset[int]
    lrmin_set: frozenset[int]
    rlmin_set: frozenset[int]
    des_set: frozenset[int]
    asc_set: frozenset[int]
    wnm_set: frozenset[int]
    rlm_set: frozenset[int]
    des: int
    asc: int
    ides: int
    wnm: int
    rlm: int
    u321: int
    u312: int

    def as_counts(self) -> dict[str, int]:
        return {
            "wnm": self.wnm,
            "rlm": self.rlm,
            "lrmax": len(self.lrmax_set),
            "rlmax": len(self.rlmax_set),
            "lrmin": len(self.lrmin_set),
            "rlmin": len(self.rlmin_set),
            "des": self.des,
            "asc": self.asc,
            "ides": self.ides,
            "u321": self.u321,
            "u312": self.u312,
        }


def stat_report(p: Permutation) -> StatReport:
    values = p.values
    des_positions = descent_set(values)
    asc_positions = ascent_set(values)
    wnm_values = wnm_set(p)
    rlm_values = rlm_set(p)
    return StatReport(
        n=p.n,
        lrmax_set=boundary_extrema(values, Extremum.LRMAX),
        rlmax_set=boundary_extrema(values, Extremum.RLMAX),
        lrmin_set=boundary_extrema(values, Extremum.LRMIN),
        rlmin_set=boundary_extrema(values, Extremum.RLMIN),
        des_set=des_positions,
        asc_set=asc_positions,
        wnm_set=wnm_values,
        rlm_set=rlm_values,
        des=len(des_positions),
        asc=len(asc_positions),
        ides=ides(p),
        wnm=len(wnm_values),
        rlm=len(rlm_values),
        u321=u321(p),
        u312=u312(p),
    )
