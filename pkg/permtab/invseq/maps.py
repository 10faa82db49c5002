import logging
from typing import Callable

from permtab.core.permutation import (
    Permutation,
    complement,
    inverse,
    relabel,
    reverse_complement,
    standardize,
)
from permtab.invseq.code_b import code_b, code_b_inv
from permtab.invseq.sequences import InversionSequence, gamma_insert

logger = logging.getLogger(__name__)

Stage = tuple[str, Permutation | InversionSequence]

_ALPHA_STAGES: list[tuple[str, Callable]] = [
    ("c", complement),
    ("i", inverse),
    ("b", code_b),
    ("gamma", gamma_insert),
    ("b-inv", code_b_inv),
    ("i", inverse),
    ("c", complement),
]


def alpha_trace(p: Permutation) -> list[Stage]:
    """Every intermediate value of alpha, starting with the input itself."""
    stages: list[Stage] = [("", p)]
    value = p
    for name, fn in _ALPHA_STAGES:
        value = fn(value)
        stages.append((name, value))
    return stages


def alpha(p: Permutation) -> Permutation:
    """Involution keeping (asc, rlmax) and swapping lrmax with rlmin."""
    return alpha_trace(p)[-1][1]


def _flip_support(support: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(sorted(n + 1 - v for v in support))


def beta(p: Permutation) -> Permutation:
    """Bijection sending (rlm, wnm, asc) to (rlmax - 1, rlmin, asc).

    With p = x 1 y the result is y' n x', where x' is alpha of the pattern of x
    and y' the reverse-complement of the pattern of y, each written over the
    letters n + 1 - X and n + 1 - Y.
    """
    n = p.n
    k = p.values.index(1)
    x, y = p.values[:k], p.values[k + 1:]
    x_out: tuple[int, ...] = ()
    y_out: tuple[int, ...] = ()
    if x:
        sw = standardize(x)
        x_out = relabel(alpha(sw.pattern).values, _flip_support(sw.support, n))
    if y:
        sw = standardize(y)
        y_out = relabel(reverse_complement(sw.pattern).values, _flip_support(sw.support, n))
    return Permutation(y_out + (n,) + x_out)


def beta_inv(sigma: Permutation) -> Permutation:
    """Inverse of beta: sigma = w n v maps to v' 1 w'."""
    n = sigma.n
    k = sigma.values.index(n)
    w, v = sigma.values[:k], sigma.values[k + 1:]
    v_out: tuple[int, ...] = ()
    w_out: tuple[int, ...] = ()
    if v:
        sw = standardize(v)
        v_out = relabel(alpha(sw.pattern).values, _flip_support(sw.support, n))
    if w:
        sw = standardize(w)
        w_out = relabel(reverse_complement(sw.pattern).values, _flip_support(sw.support, n))
    return Permutation(v_out + (1,) + w_out)
