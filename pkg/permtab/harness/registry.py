import logging
from dataclasses import dataclass
from typing import Any, Callable

from permtab.blocks.chi import chi321
from permtab.blocks.decomposition import varphi
from permtab.core.patterns import is_321_avoiding
from permtab.core.permutation import Permutation
from permtab.errors import UnknownMapError
from permtab.harness.catalogue import Domain
from permtab.involutions.one_n import phi_swap, rho, rho_inv
from permtab.invseq.code_b import code_b, code_b_inv
from permtab.invseq.maps import alpha, beta, beta_inv
from permtab.invseq.sequences import gamma_insert
from permtab.tableaux.maps import gamma_cn, phi_zigzag

logger = logging.getLogger(__name__)

Predicate = Callable[[Any], bool]


def _ends_in_n(p: Permutation) -> bool:
    return p.n >= 2 and p.values[-1] == p.n


def _ends_in_one(p: Permutation) -> bool:
    return p.n >= 2 and p.values[-1] == 1


def _at_least_two(p: Permutation) -> bool:
    return p.n >= 2


@dataclass(frozen=True)
class MapSpec:
    """A registered map with its source and target domains.

    `accepts` and `lands_in` restrict the domains when the map is only
    defined on part of one (e.g. permutations ending in n).
    """
    name: str
    fn: Callable[[Any], Any]
    source: Domain
    target: Domain
    alias: str
    accepts: Predicate | None = None
    lands_in: Predicate | None = None
    requirement: str = ""

    def admits(self, obj: Any) -> bool:
        return self.accepts is None or self.accepts(obj)


MAPS: dict[str, MapSpec] = {
    spec.name: spec
    for spec in [
        MapSpec("varphi", varphi, Domain.S, Domain.S, "varphi"),
        MapSpec(
            "chi321", chi321, Domain.S, Domain.S, "chi321",
            accepts=is_321_avoiding, lands_in=is_321_avoiding, requirement="321-avoiding",
        ),
        MapSpec(
            "phi_swap", phi_swap, Domain.S, Domain.S, "phi_swap",
            accepts=_at_least_two, lands_in=_at_least_two, requirement="n >= 2",
        ),
        MapSpec(
            "rho", rho, Domain.S, Domain.S, "rho",
            accepts=_ends_in_n, lands_in=_ends_in_one, requirement="p(n) = n, n >= 2",
        ),
        MapSpec(
            "rho_inv", rho_inv, Domain.S, Domain.S, "rho-inv",
            accepts=_ends_in_one, lands_in=_ends_in_n, requirement="p(n) = 1, n >= 2",
        ),
        MapSpec("gamma_insert", gamma_insert, Domain.I, Domain.I, "gamma"),
        MapSpec("alpha", alpha, Domain.S, Domain.S, "alpha"),
        MapSpec("beta", beta, Domain.S, Domain.S, "beta"),
        MapSpec("beta_inv", beta_inv, Domain.S, Domain.S, "beta-inv"),
        MapSpec("code_b", code_b, Domain.S, Domain.I, "b"),
        MapSpec("code_b_inv", code_b_inv, Domain.I, Domain.S, "b-inv"),
        MapSpec("phi_zigzag", phi_zigzag, Domain.PT, Domain.S, "Phi"),
        MapSpec("gamma_cn", gamma_cn, Domain.PT, Domain.S, "Gamma"),
    ]
}

_BY_ALIAS = {spec.alias: spec for spec in MAPS.values()}


def map_names() -> list[str]:
    return list(MAPS)


def cli_names() -> list[str]:
    return list(_BY_ALIAS)


def get_map(name: str) -> MapSpec:
    """Look a map up by registered name or CLI alias."""
    spec = MAPS.get(name) or _BY_ALIAS.get(name)
    if spec is None:
        raise UnknownMapError(f"unknown map '{name}'; choose from {', '.join(_BY_ALIAS)}")
    return spec
