import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product, repeat
from typing import Any, Callable, Hashable, Iterator

from permtab.config import I_CEILING, PT_CEILING, S_CEILING
from permtab.core.patterns import is_321_avoiding
from permtab.core.permutation import Permutation, enumerate_sn_with_first, format_permutation
from permtab.errors import BoundsError
from permtab.harness.catalogue import Domain
from permtab.invseq.sequences import enumerate_in_with_prefix, format_inversion_sequence
from permtab.tableaux.enumeration import enumerate_fillings, enumerate_shapes
from permtab.tableaux.text import format_tableau

logger = logging.getLogger(__name__)

CEILINGS = {Domain.S: S_CEILING, Domain.I: I_CEILING, Domain.PT: PT_CEILING}

# Inversion-sequence chunks are keyed by this many leading entries.
_I_PREFIX = 4


def check_bounds(domain: Domain | str, n: int) -> None:
    domain = Domain(domain)
    ceiling = CEILINGS[domain]
    if not 1 <= n <= ceiling:
        raise BoundsError(f"n={n} outside 1..{ceiling} for domain {domain.value}")


def chunk_keys(domain: Domain | str, n: int) -> list[Hashable]:
    """Independent lexicographic chunks covering the domain, in enumeration order."""
    domain = Domain(domain)
    check_bounds(domain, n)
    if domain is Domain.S:
        return list(range(1, n + 1))
    if domain is Domain.I:
        k = min(n, _I_PREFIX)
        return list(product(*(range(i) for i in range(1, k + 1))))
    return list(enumerate_shapes(n))


def iter_chunk(domain: Domain | str, n: int, key: Hashable) -> Iterator[Any]:
    domain = Domain(domain)
    if domain is Domain.S:
        return enumerate_sn_with_first(n, key)
    if domain is Domain.I:
        return enumerate_in_with_prefix(n, key)
    return enumerate_fillings(key)


def run_chunks(fn: Callable[..., Any], domain: Domain | str, n: int, *args: Any, workers: int = 1) -> Iterator[Any]:
    """Yield fn(domain, n, key, *args) for every chunk, in chunk order.

    With more than one worker the chunks run in a process pool, so `fn` and
    `args` must be picklable. Results are always yielded in chunk order.
    """
    domain = Domain(domain)
    keys = chunk_keys(domain, n)
    if workers > 1 and len(keys) > 1:
        logger.debug(f"Dispatching {len(keys)} chunks of {domain.value}_{n} to {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            try:
                yield from pool.map(fn, repeat(domain), repeat(n), keys, *(repeat(arg) for arg in args))
            finally:
                pool.shutdown(cancel_futures=True)
        return
    for key in keys:
        yield fn(domain, n, key, *args)


def iter_domain(domain: Domain | str, n: int) -> Iterator[Any]:
    for key in chunk_keys(domain, n):
        yield from iter_chunk(domain, n, key)


def domain_size(domain: Domain | str, n: int, accepts: Callable[[Any], bool] | None = None) -> int:
    if accepts is None:
        check_bounds(domain, n)
        size = 1
        for i in range(2, n + 1):
            size *= i
        return size
    return sum(1 for obj in iter_domain(domain, n) if accepts(obj))


def format_element(domain: Domain | str, obj: Any) -> str:
    domain = Domain(domain)
    if domain is Domain.S:
        return format_permutation(obj)
    if domain is Domain.I:
        return format_inversion_sequence(obj)
    return format_tableau(obj).rstrip("\n")


AVOIDANCE_FILTERS: dict[str, Callable[[Permutation], bool]] = {
    "321": is_321_avoiding,
}


def element_size(obj: Any) -> int:
    """n of a permutation or inversion sequence, length of a tableau."""
    size = getattr(obj, "n", None)
    return size if size is not None else obj.length
