from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from permtab.core.permutation import Permutation, pattern_of
from permtab.errors import InvalidPermutationError


@dataclass(frozen=True)
class VincularPattern:
    """A classical pattern plus adjacency constraints.

    i in `adjacency` means pattern positions i and i+1 must sit at adjacent
    positions of the host.
    """
    pattern: Permutation
    adjacency: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        adjacency = frozenset(self.adjacency)
        object.__setattr__(self, "adjacency", adjacency)
        bad = [i for i in adjacency if not 1 <= i <= self.pattern.n - 1]
        if bad:
            raise InvalidPermutationError(
                f"adjacency {sorted(bad)} outside 1..{self.pattern.n - 1}"
            )

    @property
    def is_consecutive(self) -> bool:
        return len(self.adjacency) == self.pattern.n - 1

    def __str__(self) -> str:
        letters = [str(v) for v in self.pattern.values]
        marks = "".join(
            letter + ("_" if i + 1 in self.adjacency else "")
            for i, letter in enumerate(letters)
        )
        return marks


CLASSICAL_321 = VincularPattern(Permutation((3, 2, 1)))
CONSECUTIVE_321 = VincularPattern(Permutation((3, 2, 1)), frozenset({1, 2}))
VINCULAR_312 = VincularPattern(Permutation((3, 1, 2)), frozenset({1}))


def count_occurrences(word: Sequence[int], pat: VincularPattern) -> int:
    """Occurrences of a vincular pattern in a word of distinct letters."""
    k = pat.pattern.n
    n = len(word)
    if k > n:
        return 0
    target = pat.pattern.values

    if pat.is_consecutive:
        count = 0
        for start in range(n - k + 1):
            window = word[start:start + k]
            if all(
                (window[a] < window[b]) == (target[a] < target[b])
                for a in range(k) for b in range(a + 1, k)
            ):
                count += 1
        return count

    chosen: list[int] = []

    def extend(depth: int, lowest: int) -> int:
        if depth == k:
            return 1
        total = 0
        if depth > 0 and depth in pat.adjacency:
            candidates = range(lowest, min(lowest + 1, n))
        else:
            candidates = range(lowest, n - (k - depth) + 1)
        for idx in candidates:
            value = word[idx]
            if all(
                (word[chosen[j]] < value) == (target[j] < target[depth])
                for j in range(depth)
            ):
                chosen.append(idx)
                total += extend(depth + 1, idx + 1)
                chosen.pop()
        return total

    return extend(0, 0)


def count_vincular(p: Permutation, pat: VincularPattern) -> int:
    return count_occurrences(p.values, pat)


def avoids(p: Permutation, pat: VincularPattern) -> bool:
    return count_vincular(p, pat) == 0


def is_321_avoiding(p: Permutation) -> bool:
    # Equivalent to covering [n] by two increasing subsequences; linear scan.
    values = p.values
    n = len(values)
    suffix_min = n + 1
    mins = [0] * n
    for i in range(n - 1, -1, -1):
        mins[i] = suffix_min
        suffix_min = min(suffix_min, values[i])
    prefix_max = 0
    for i, v in enumerate(values):
        if prefix_max > v and mins[i] < v:
            return False
        prefix_max = max(prefix_max, v)
    return True


def u321(p: Permutation) -> int:
    """Number of consecutive descending triples p(i) > p(i+1) > p(i+2)."""
    return count_vincular(p, CONSECUTIVE_321)


def u312(p: Permutation) -> int:
    return count_vincular(p, VINCULAR_312)


def brute_force_count(word: Sequence[int], pat: VincularPattern) -> int:
    """Reference counter over every index subset; small words only."""
    target = pat.pattern.values
    total = 0
    for idx in combinations(range(len(word)), pat.pattern.n):
        if not all(idx[i] == idx[i - 1] + 1 for i in pat.adjacency):
            continue
        if pattern_of([word[i] for i in idx]) == target:
            total += 1
    return total
