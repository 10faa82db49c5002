from permtab.core.patterns import is_321_avoiding
from permtab.core.permutation import Permutation, pattern_of, relabel
from permtab.errors import DomainError


def fixed_prefix(p: Permutation) -> int:
    """Largest l with p(i) = i for all i <= l."""
    l = 0
    while l < p.n and p.values[l] == l + 1:
        l += 1
    return l


def fixed_suffix_start(p: Permutation) -> int:
    """Smallest r with p(j) = j for all j >= r; n+1 when p(n) != n."""
    r = p.n + 1
    while r > 1 and p.values[r - 2] == r - 1:
        r -= 1
    return r


def flip_middle(p: Permutation) -> Permutation:
    """Replace the part between the fixed prefix and the fixed suffix by the
    reverse-complement of its pattern over the same letters.

    Defined on every permutation; only on 321-avoiders is it the involution
    exchanging rlmin and wnm.
    """
    l = fixed_prefix(p)
    r = fixed_suffix_start(p)
    if l >= r - 1:
        return p
    middle = p.values[l:r - 1]
    pattern = pattern_of(middle)
    k = len(pattern)
    flipped = tuple(k + 1 - v for v in reversed(pattern))
    return Permutation(p.values[:l] + relabel(flipped, range(l + 1, r)) + p.values[r - 1:])


def chi321(p: Permutation) -> Permutation:
    """Involution on 321-avoiders exchanging rlmin and wnm."""
    if not is_321_avoiding(p):
        raise DomainError(f"{p} is not 321-avoiding")
    return flip_middle(p)
