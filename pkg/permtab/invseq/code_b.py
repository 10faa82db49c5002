import logging
from dataclasses import dataclass

from permtab.core.permutation import Permutation
from permtab.errors import InvalidInversionSequenceError
from permtab.invseq.sequences import InversionSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class LabelledInterval:
    lo: int
    hi: int
    label: int

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]^{self.label}"


@dataclass(frozen=True)
class Slice:
    """Remaining values 0..n split into labelled intervals.

    Intervals run from the largest values to the smallest; value 0 is a
    sentinel that always stays in the last interval.
    """
    intervals: tuple[LabelledInterval, ...]

    @classmethod
    def initial(cls, n: int) -> "Slice":
        return cls((LabelledInterval(0, n, 0),))

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(interval.label for interval in self.intervals)

    def index_of_value(self, value: int) -> int:
        for v, interval in enumerate(self.intervals):
            if value in interval:
                return v
        raise KeyError(value)

    def index_of_label(self, label: int) -> int | None:
        for v, interval in enumerate(self.intervals):
            if interval.label == label:
                return v
        return None

    def is_well_formed(self) -> bool:
        """Disjoint, strictly decreasing intervals with strictly increasing labels."""
        for interval in self.intervals:
            if interval.lo > interval.hi:
                return False
        for left, right in zip(self.intervals, self.intervals[1:]):
            if left.lo <= right.hi or left.label >= right.label:
                return False
        return True

    def __str__(self) -> str:
        return " ".join(str(interval) for interval in self.intervals)


def advance(current: Slice, value: int) -> tuple[int, Slice]:
    """Emit the label of the interval holding `value` and split that interval.

    The part above `value` (H) and the part below it (J) replace the interval
    in that order. Labels then follow four cases on which parts survive:
    both keep the old labels plus one new label at the end; only H keeps the
    labels with the last one raised by one; only J drops the hit label and
    appends a new last label; neither drops the hit label and raises the last.
    """
    v = current.index_of_value(value)
    hit = current.intervals[v]
    labels = list(current.labels)

    fragments = []
    if value < hit.hi:
        fragments.append((value + 1, hit.hi))
    if value > hit.lo:
        fragments.append((hit.lo, value - 1))

    has_h = value < hit.hi
    has_j = value > hit.lo
    if has_h and has_j:
        new_labels = labels + [labels[-1] + 1]
    elif has_h:
        new_labels = labels[:-1] + [labels[-1] + 1]
    elif has_j:
        new_labels = labels + [labels[-1] + 1]
        del new_labels[v]
    else:
        new_labels = labels[:v] + labels[v + 1:]
        new_labels[-1] += 1

    bounds = [(iv.lo, iv.hi) for iv in current.intervals]
    bounds[v:v + 1] = fragments
    intervals = tuple(LabelledInterval(lo, hi, label) for (lo, hi), label in zip(bounds, new_labels))
    return hit.label, Slice(intervals)


def slices(p: Permutation) -> list[Slice]:
    """The slices U_0 ... U_{n-1} read at each step of the code."""
    current = Slice.initial(p.n)
    out = []
    for value in p.values:
        out.append(current)
        _, current = advance(current, value)
    return out


def code_b(p: Permutation) -> InversionSequence:
    current = Slice.initial(p.n)
    letters = []
    for value in p.values:
        label, current = advance(current, value)
        letters.append(label)
    return InversionSequence(tuple(letters))


def code_b_inv(s: InversionSequence) -> Permutation:
    """Depth-first search for the unique permutation with code s.

    At step i the candidates are the nonzero values of the interval labelled
    s_i; a branch dies as soon as the next letter names a missing label.
    """
    n = s.n
    target = s.entries
    chosen: list[int] = []

    def search(i: int, current: Slice) -> bool:
        if i == n:
            return True
        v = current.index_of_label(target[i])
        if v is None:
            return False
        interval = current.intervals[v]
        for value in range(interval.hi, interval.lo - 1, -1):
            if value == 0:
                continue
            _, following = advance(current, value)
            if i + 1 < n and following.index_of_label(target[i + 1]) is None:
                continue
            chosen.append(value)
            if search(i + 1, following):
                return True
            chosen.pop()
        return False

    if not search(0, Slice.initial(n)):
        raise InvalidInversionSequenceError(f"no permutation has code {s}")
    return Permutation(tuple(chosen))
