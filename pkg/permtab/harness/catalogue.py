import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Callable

from permtab.core import statistics as perm_stats
from permtab.core.patterns import u312, u321
from permtab.core.permutation import Permutation
from permtab.errors import UnknownStatisticError
from permtab.invseq.sequences import InversionSequence, invseq_stats
from permtab.tableaux.maps import tableau_stats
from permtab.tableaux.models import PermutationTableau

logger = logging.getLogger(__name__)


class Domain(str, Enum):
    S = "S"
    I = "I"
    PT = "PT"


@dataclass(frozen=True)
class Statistic:
    name: str
    domain: Domain
    fn: Callable[[Any], int]
    description: str = ""


_REGISTRY: dict[tuple[Domain, str], Statistic] = {}


def register(name: str, domain: Domain, description: str = ""):
    def decorator(fn: Callable[[Any], int]) -> Callable[[Any], int]:
        _REGISTRY[(domain, name)] = Statistic(name, domain, fn, description)
        return fn
    return decorator


@register("rlm", Domain.S, "RL-maxima left of the letter 1")
def _rlm(p: Permutation) -> int:
    return perm_stats.rlm(p)


@register("wnm", Domain.S, "weak excedances that are not mid-points")
def _wnm(p: Permutation) -> int:
    return perm_stats.wnm(p)


@register("rlmin", Domain.S)
def _rlmin(p: Permutation) -> int:
    return perm_stats.rlmin(p.values)


@register("rlmax", Domain.S)
def _rlmax(p: Permutation) -> int:
    return perm_stats.rlmax(p.values)


@register("lrmax", Domain.S)
def _lrmax(p: Permutation) -> int:
    return perm_stats.lrmax(p.values)


@register("lrmin", Domain.S)
def _lrmin(p: Permutation) -> int:
    return perm_stats.lrmin(p.values)


@register("des", Domain.S)
def _des(p: Permutation) -> int:
    return perm_stats.des(p.values)


@register("asc", Domain.S)
def _asc(p: Permutation) -> int:
    return perm_stats.asc(p.values)


@register("ides", Domain.S, "descents of the inverse")
def _ides(p: Permutation) -> int:
    return perm_stats.ides(p)


@register("u321", Domain.S, "consecutive 321 occurrences")
def _u321(p: Permutation) -> int:
    return u321(p)


@register("u312", Domain.S, "occurrences of 312 with the first two letters adjacent")
def _u312(p: Permutation) -> int:
    return u312(p)


@register("zero", Domain.I, "positions holding 0")
def _zero(s: InversionSequence) -> int:
    return invseq_stats(s).zero


@register("maxStat", Domain.I, "positions with s_i = i - 1")
def _max_stat(s: InversionSequence) -> int:
    return invseq_stats(s).max_stat


@register("dist", Domain.I, "last occurrences of nonzero values")
def _dist(s: InversionSequence) -> int:
    return invseq_stats(s).dist


@register("rlminStrict", Domain.I, "strict RL-minima")
def _rlmin_strict(s: InversionSequence) -> int:
    return invseq_stats(s).rlmin_strict


@register("asc", Domain.I)
def _asc_seq(s: InversionSequence) -> int:
    return invseq_stats(s).asc


@register("urr", Domain.PT, "unrestricted rows")
def _urr(t: PermutationTableau) -> int:
    return tableau_stats(t).urr


@register("topone", Domain.PT, "1s in the first row")
def _topone(t: PermutationTableau) -> int:
    return tableau_stats(t).topone


def statistic_names(domain: Domain | str | None = None) -> list[str]:
    if domain is None:
        return sorted({name for _, name in _REGISTRY})
    domain = Domain(domain)
    return [name for d, name in _REGISTRY if d is domain]


def get_statistic(domain: Domain | str, name: str) -> Statistic:
    domain = Domain(domain)
    stat = _REGISTRY.get((domain, name))
    if stat is not None:
        return stat
    if name in statistic_names():
        raise UnknownStatisticError(f"statistic '{name}' is not defined on domain {domain.value}")
    raise UnknownStatisticError(f"unknown statistic '{name}'")


_OFFSET = re.compile(r"^(?P<name>[A-Za-z0-9]+)\s*(?P<sign>[-+−])\s*(?P<k>\d+)$")


@dataclass(frozen=True)
class StatTerm:
    """A statistic shifted by a constant, such as "rlmax-1"."""
    name: str
    offset: int = 0

    def __str__(self) -> str:
        if self.offset == 0:
            return self.name
        sign = "+" if self.offset > 0 else "-"
        return f"{self.name}{sign}{abs(self.offset)}"


@lru_cache(maxsize=None)
def parse_term(text: str) -> StatTerm:
    text = text.strip()
    match = _OFFSET.match(text)
    if match is None:
        return StatTerm(text)
    k = int(match["k"])
    return StatTerm(match["name"], -k if match["sign"] in "-−" else k)


def resolve(domain: Domain | str, term: StatTerm | str) -> tuple[Callable[[Any], int], int]:
    """Statistic function and offset for a term; raises UnknownStatisticError."""
    if isinstance(term, str):
        term = parse_term(term)
    return get_statistic(domain, term.name).fn, term.offset


def evaluate_term(domain: Domain | str, term: StatTerm | str, obj: Any) -> int:
    fn, offset = resolve(domain, term)
    return fn(obj) + offset


def evaluate(domain: Domain | str, terms: list[str], obj: Any) -> tuple[int, ...]:
    return tuple(evaluate_term(domain, term, obj) for term in terms)
