import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Callable, Hashable, Iterable

from permtab.core.statistics import rlm, rlmin, wnm
from permtab.errors import BoundsError, PermtabError
from permtab.harness.catalogue import Domain, evaluate, parse_term, resolve
from permtab.harness.distribution import DistributionTable, joint_distribution
from permtab.harness.domains import (
    AVOIDANCE_FILTERS,
    chunk_keys,
    domain_size,
    element_size,
    format_element,
    iter_chunk,
    iter_domain,
    run_chunks,
)
from permtab.harness.polynomial import BivariatePolynomial, rising_factorial
from permtab.harness.registry import MapSpec, get_map
from permtab.harness.report import CheckResult, Status
from permtab.tableaux.enumeration import enumerate_pt
from permtab.tableaux.maps import gamma_cn, phi_zigzag, tableau_stats
from permtab.tableaux.text import format_tableau

logger = logging.getLogger(__name__)

CONJECTURE_LEFT = ["rlm", "rlmin", "lrmax", "des", "ides", "u321"]
CONJECTURE_RIGHT = ["rlm", "lrmax", "rlmin", "des", "ides", "u321"]


def _pass(name: str, n: int, detail: str | None = None, table: DistributionTable | None = None) -> CheckResult:
    return CheckResult(
        name=name,
        n=n,
        status=Status.PASS,
        detail=detail,
        table=table.to_document() if table is not None else None,
    )


def _fail(name: str, n: int, witness: str, detail: str | None = None) -> CheckResult:
    logger.warning(f"{name} failed at n={n}: {witness} {detail or ''}".rstrip())
    return CheckResult(name=name, n=n, status=Status.FAIL, witness=witness, detail=detail)


def _project(table: DistributionTable, names: list[str]) -> DistributionTable:
    index = [table.stat_names.index(name) for name in names]
    counts: Counter = Counter()
    for key, count in table.counts.items():
        counts[tuple(key[i] for i in index)] += count
    return DistributionTable(n=table.n, domain=table.domain, stat_names=names, counts=dict(counts), avoid=table.avoid)


def _first_with_key(
    domain: Domain, n: int, stats: list[str], key: tuple[int, ...], avoid: str | None
) -> Any:
    accepts = AVOIDANCE_FILTERS[avoid] if avoid else None
    for obj in iter_domain(domain, n):
        if accepts is not None and not accepts(obj):
            continue
        if evaluate(domain, stats, obj) == key:
            return obj
    return None


def check_equidistribution(
    n: int,
    domain: Domain | str,
    stats_a: list[str],
    stats_b: list[str],
    avoid: str | None = None,
    domain_b: Domain | str | None = None,
    workers: int = 1,
    name: str | None = None,
    include_table: bool = False,
) -> CheckResult:
    """PASS iff both statistic tuples have the same joint distribution.

    `domain_b` compares against a second domain of the same size (e.g. S_n
    against I_n). The FAIL witness is the first element, in enumeration
    order, carrying the smallest differing key on the side where that key is
    more frequent.
    """
    if len(stats_a) != len(stats_b):
        raise PermtabError(f"tuples of different arity: {stats_a} vs {stats_b}")
    name = name or f"({','.join(stats_a)}) ~ ({','.join(stats_b)})"
    domain = Domain(domain)
    domain_b = Domain(domain_b) if domain_b is not None else domain

    if domain_b is domain:
        union = list(dict.fromkeys(stats_a + stats_b))
        full = joint_distribution(n, domain, union, avoid=avoid, workers=workers)
        table_a, table_b = _project(full, stats_a), _project(full, stats_b)
    else:
        table_a = joint_distribution(n, domain, stats_a, avoid=avoid, workers=workers)
        table_b = joint_distribution(n, domain_b, stats_b, workers=workers)

    difference = table_a.first_difference(table_b)
    if difference is None:
        return _pass(name, n, table=table_a if include_table else None)
    key, count_a, count_b = difference
    if count_a > count_b:
        side, stats, side_avoid = domain, stats_a, avoid
    else:
        side, stats, side_avoid = domain_b, stats_b, avoid if domain_b is domain else None
    element = _first_with_key(side, n, stats, key, side_avoid)
    return _fail(
        name, n, witness=format_element(side, element),
        detail=f"({','.join(stats)})={key}: count {count_a} vs {count_b}",
    )


@dataclass
class _ChunkOutcome:
    """First local failure of a chunk plus the images checked before it.

    `failed_at` indexes the admitted elements of the chunk; `images` holds the
    images of the elements before it, filled only for bijection checks.
    """
    images: list = field(default_factory=list)
    failed_at: int | None = None
    witness: str | None = None
    detail: str | None = None


def _map_chunk(
    domain: Domain, n: int, key: Hashable, map_name: str, mode: str | None, transfer: list[tuple[str, str]]
) -> _ChunkOutcome:
    spec = get_map(map_name)
    terms = [
        (parse_term(a), parse_term(b), resolve(spec.source, a), resolve(spec.target, b))
        for a, b in transfer
    ]
    outcome = _ChunkOutcome()
    index = 0
    for x in iter_chunk(domain, n, key):
        if not spec.admits(x):
            continue
        y, problem = _map_problem(spec, n, x, mode, terms)
        if problem is not None:
            outcome.failed_at, outcome.witness, outcome.detail = index, format_element(spec.source, x), problem
            return outcome
        if mode == "bijection":
            outcome.images.append(y)
        index += 1
    return outcome


def _map_problem(spec: MapSpec, n: int, x: Any, mode: str | None, terms: list) -> tuple[Any, str | None]:
    """Image of x and the first local defect found on it, if any."""
    try:
        y = spec.fn(x)
    except PermtabError as exc:
        return None, f"raised: {exc}"
    if element_size(y) != n or (spec.lands_in is not None and not spec.lands_in(y)):
        return y, f"image {format_element(spec.target, y)} outside the codomain"
    for term_a, term_b, (fa, oa), (fb, ob) in terms:
        left, right = fa(x) + oa, fb(y) + ob
        if left != right:
            return y, f"{term_a}={left} but {term_b}={right} on image {format_element(spec.target, y)}"
    if mode == "involution":
        back = spec.fn(y)
        if back != x:
            return y, f"applied twice gives {format_element(spec.source, back)}"
    return y, None


def _admitted_element(spec: MapSpec, n: int, key: Hashable, index: int) -> Any:
    admitted = (x for x in iter_chunk(spec.source, n, key) if spec.admits(x))
    return next(islice(admitted, index, None))


def check_map(
    n: int,
    map_name: str,
    mode: str | None = None,
    transfer: Iterable[tuple[str, str]] = (),
    name: str | None = None,
    workers: int = 1,
) -> CheckResult:
    """Element-wise check of a registered map over its whole source domain.

    Verifies that every image lies in the codomain, that `mode` holds
    ("involution": f(f(x)) = x, "bijection": injective and onto) and that each
    (a, b) in `transfer` satisfies a(x) = b(f(x)). The witness is the first
    failing source element in enumeration order, whatever `workers` is.
    """
    spec = get_map(map_name)
    if mode not in (None, "involution", "bijection"):
        raise PermtabError(f"unknown mode '{mode}'")
    if mode == "involution" and spec.source is not spec.target:
        raise PermtabError(f"{spec.name} maps {spec.source.value} to {spec.target.value}; it cannot be an involution")

    transfer = list(transfer)
    for a, b in transfer:
        resolve(spec.source, a)
        resolve(spec.target, b)
    name = name or f"{spec.name} {mode or 'map'}"
    keys = chunk_keys(spec.source, n)
    seen: set = set()

    outcomes = run_chunks(_map_chunk, spec.source, n, spec.name, mode, transfer, workers=workers)
    for key, outcome in zip(keys, outcomes):
        for index, y in enumerate(outcome.images):
            if y in seen:
                shown = format_element(spec.source, _admitted_element(spec, n, key, index))
                return _fail(name, n, shown, f"image {format_element(spec.target, y)} is hit twice")
            seen.add(y)
        if outcome.failed_at is not None:
            return _fail(name, n, outcome.witness, outcome.detail)

    if mode == "bijection":
        size = domain_size(spec.target, n, spec.lands_in)
        if len(seen) != size:
            missing = next(
                obj for obj in iter_domain(spec.target, n)
                if obj not in seen and (spec.lands_in is None or spec.lands_in(obj))
            )
            return _fail(name, n, format_element(spec.target, missing), "not in the image")
    return _pass(name, n)


def _property_chunk(
    domain: Domain, n: int, key: Hashable, predicate: Callable[[Any], bool], accepts: Callable[[Any], bool] | None
) -> str | None:
    for obj in iter_chunk(domain, n, key):
        if accepts is not None and not accepts(obj):
            continue
        if not predicate(obj):
            return format_element(domain, obj)
    return None


def check_property(
    name: str,
    n: int,
    domain: Domain | str,
    predicate: Callable[[Any], bool],
    accepts: Callable[[Any], bool] | None = None,
    workers: int = 1,
) -> CheckResult:
    """PASS iff `predicate` holds on every (accepted) element of the domain.

    With `workers` > 1 the predicate and filter must be module-level functions.
    """
    for witness in run_chunks(_property_chunk, domain, n, predicate, accepts, workers=workers):
        if witness is not None:
            return _fail(name, n, witness)
    return _pass(name, n)


def check_gf(n: int, include_tableaux: bool = True, workers: int = 1) -> CheckResult:
    """Compare sum x^(wnm-1) y^rlm over S_n, and sum x^(urr-1) y^topone over
    PT(n), with the rising factorial (x+y)_(n-1)."""
    name = "generating function"
    expected = rising_factorial(n)
    s_poly = BivariatePolynomial.from_distribution(joint_distribution(n, Domain.S, ["wnm-1", "rlm"], workers=workers))
    if s_poly != expected:
        return _fail(name, n, f"S: {s_poly}", f"expected {expected}")
    detail = f"S: {s_poly}"
    if include_tableaux:
        pt_poly = BivariatePolynomial.from_distribution(
            joint_distribution(n, Domain.PT, ["urr-1", "topone"], workers=workers)
        )
        if pt_poly != expected:
            return _fail(name, n, f"PT: {pt_poly}", f"expected {expected}")
        detail += f"; PT: {pt_poly}"
    return _pass(name, n, detail=detail)


def check_rlmin_lrmax_conjecture(n: int, workers: int = 1) -> CheckResult:
    """Empirical check that (rlm, rlmin, lrmax, des, ides, u321) and
    (rlm, lrmax, rlmin, des, ides, u321) are equidistributed over S_n."""
    if n > 9:
        raise BoundsError(f"conjecture check is capped at n = 9, got {n}")
    return check_equidistribution(
        n, Domain.S, CONJECTURE_LEFT, CONJECTURE_RIGHT, workers=workers, name="rlmin/lrmax 6-tuple conjecture"
    )


def check_tableaux(n: int) -> CheckResult:
    """urr and topone of every T in PT(n) against rlmin, rlm of Gamma(T) and
    wnm of Phi(T); Phi and Gamma must both be bijections onto S_n."""
    name = "tableau statistics"
    gamma_images: set = set()
    phi_images: set = set()
    count = 0
    for t in enumerate_pt(n):
        count += 1
        stats = tableau_stats(t)
        g = gamma_cn(t)
        f = phi_zigzag(t)
        if stats.urr != rlmin(g.values):
            return _fail(name, n, format_tableau(t), f"urr={stats.urr} but rlmin(Gamma)={rlmin(g.values)}")
        if stats.topone != rlm(g):
            return _fail(name, n, format_tableau(t), f"topone={stats.topone} but rlm(Gamma)={rlm(g)}")
        if stats.urr != wnm(f):
            return _fail(name, n, format_tableau(t), f"urr={stats.urr} but wnm(Phi)={wnm(f)}")
        gamma_images.add(g)
        phi_images.add(f)

    expected = domain_size(Domain.S, n)
    if count != expected:
        return _fail(name, n, str(count), f"|PT({n})| = {count}, expected {expected}")
    if len(gamma_images) != expected or len(phi_images) != expected:
        return _fail(
            name, n, str(count),
            f"Gamma hits {len(gamma_images)} and Phi hits {len(phi_images)} of {expected} permutations",
        )
    return _pass(name, n)
