import logging

from permtab.core.permutation import Permutation, relabel, standardize
from permtab.errors import DomainError

logger = logging.getLogger(__name__)


def rho(p: Permutation) -> Permutation:
    """Bijection from permutations ending in n to permutations ending in 1.

    Writes p = a b 1 c d n where b starts at the maximum of the part before 1
    and d starts at the first letter after 1 exceeding that maximum, and
    returns b^r c n d^r a^r 1.
    """
    n = p.n
    if n < 2 or p.values[-1] != n:
        raise DomainError(f"rho needs p(n) = n with n >= 2, got {p}")
    k = p.values.index(1)
    w = p.values[:k]
    u = p.values[k + 1:n - 1]

    if w:
        top = max(w)
        i = w.index(top)
        a, b = w[:i], w[i:]
    else:
        top = 0
        a = b = ()
    j = next((idx for idx, v in enumerate(u) if v > top), len(u))
    c, d = u[:j], u[j:]
    return Permutation(b[::-1] + c + (n,) + d[::-1] + a[::-1] + (1,))


def rho_inv(t: Permutation) -> Permutation:
    """Inverse of rho: t = e f n g h 1 maps to h^r e^r 1 f g^r n."""
    n = t.n
    if n < 2 or t.values[-1] != 1:
        raise DomainError(f"rho_inv needs t(n) = 1 with n >= 2, got {t}")
    at_n = t.values.index(n)
    prefix = t.values[:at_n]
    q = t.values[at_n + 1:n - 1]

    if prefix:
        top = max(prefix)
        l = prefix.index(top) + 1
    else:
        top = 0
        l = 0
    e, f = prefix[:l], prefix[l:]
    s = max((idx for idx, v in enumerate(q) if v > top), default=-1)
    g, h = q[:s + 1], q[s + 1:]
    return Permutation(h[::-1] + e[::-1] + (1,) + f + g[::-1] + (n,))


def phi_swap(p: Permutation) -> Permutation:
    """Involution exchanging rlm and lrmax - 1.

    When 1 precedes n, rho is applied to the standardized prefix ending at n;
    otherwise rho_inv is applied to the standardized prefix ending at 1. The
    remaining suffix is left in place.
    """
    n = p.n
    if n < 2:
        raise DomainError("phi_swap is undefined for n = 1")
    at_one = p.values.index(1)
    at_n = p.values.index(n)
    if at_one < at_n:
        head, tail, apply = p.values[:at_n + 1], p.values[at_n + 1:], rho
    else:
        head, tail, apply = p.values[:at_one + 1], p.values[at_one + 1:], rho_inv
    sw = standardize(head)
    return Permutation(relabel(apply(sw.pattern).values, sw.support) + tail)
