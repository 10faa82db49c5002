import logging
from dataclasses import dataclass
from typing import Callable

from permtab.blocks.chi import flip_middle
from permtab.blocks.decomposition import varphi
from permtab.config import Settings, get_settings
from permtab.core.patterns import is_321_avoiding
from permtab.core.permutation import Permutation, format_permutation
from permtab.core.statistics import ides_set
from permtab.errors import BoundsError, PermtabError, UnknownSuiteError
from permtab.harness import properties as props
from permtab.harness.catalogue import Domain
from permtab.harness.checks import (
    check_rlmin_lrmax_conjecture,
    check_equidistribution,
    check_gf,
    check_map,
    check_property,
    check_tableaux,
)
from permtab.harness.report import CheckResult, Status, SuiteReport
from permtab.involutions.one_n import phi_swap, rho
from permtab.invseq.code_b import code_b, code_b_inv
from permtab.invseq.maps import alpha_trace, beta
from permtab.invseq.sequences import InversionSequence, gamma_insert, invseq_stats
from permtab.tableaux.maps import gamma_cn, phi_zigzag, tableau_stats, to_alternative, validate
from permtab.tableaux.text import format_alternative

logger = logging.getLogger(__name__)

# Tableau drawn in the worked example: shape 6,6,5,3,1 of length 11.
WORKED_SHAPE = (6, 6, 5, 3, 1)
WORKED_FILL = (
    (0, 1, 1, 0, 0, 1),
    (0, 0, 0, 1, 1, 1),
    (0, 0, 0, 0, 1),
    (0, 1, 1),
    (1,),
)

CONJECTURE_EXTENDED_N = 9
VINCULAR_BRUTE_FORCE_N = 6
ALTERNATIVE_ROUND_TRIP_N = 6


@dataclass
class SuiteContext:
    """Per-domain caps and worker count for one verification run."""
    max_n: int
    max_n_s: int
    max_n_i: int
    max_n_pt: int
    workers: int = 1

    @classmethod
    def build(cls, max_n: int, workers: int | None = None, extended: bool = False,
              settings: Settings | None = None) -> "SuiteContext":
        if max_n < 1:
            raise BoundsError(f"--max-n must be at least 1, got {max_n}")
        settings = settings or get_settings()
        cap_s = max(settings.max_n_s, CONJECTURE_EXTENDED_N) if extended else settings.max_n_s
        return cls(
            max_n=max_n,
            max_n_s=cap_s,
            max_n_i=settings.max_n_i,
            max_n_pt=settings.max_n_pt,
            workers=workers or settings.workers,
        )

    def range_for(self, domain: Domain, limit: int | None = None) -> range:
        cap = {Domain.S: self.max_n_s, Domain.I: self.max_n_i, Domain.PT: self.max_n_pt}[domain]
        if limit is not None:
            cap = min(cap, limit)
        if self.max_n > cap:
            logger.info(f"Clamping {domain.value} checks to n <= {cap} (requested {self.max_n})")
        return range(1, min(self.max_n, cap) + 1)

    def check_property(
        self, name: str, n: int, domain: Domain, predicate: Callable, accepts: Callable | None = None
    ) -> CheckResult:
        return check_property(name, n, domain, predicate, accepts=accepts, workers=self.workers)

    def check_map(self, n: int, map_name: str, mode: str | None = None, transfer=()) -> CheckResult:
        return check_map(n, map_name, mode, transfer, workers=self.workers)


@dataclass(frozen=True)
class GoldenVector:
    name: str
    n: int
    compute: Callable[[], str]
    expected: str


def _perm(text: str) -> Permutation:
    return Permutation(tuple(int(ch) for ch in text.split()))


def _worked_tableau():
    return validate(WORKED_SHAPE, WORKED_FILL)


def _worked_stats() -> str:
    stats = tableau_stats(_worked_tableau())
    return f"urr={stats.urr} topone={stats.topone}"


GOLDEN_VECTORS: list[GoldenVector] = [
    GoldenVector(
        "Phi on the worked tableau", 11,
        lambda: format_permutation(phi_zigzag(_worked_tableau())), "8 6 1 5 3 4 9 2 7 11 10",
    ),
    GoldenVector(
        "Gamma on the worked tableau", 11,
        lambda: format_permutation(gamma_cn(_worked_tableau())), "9 4 6 5 2 8 3 1 7 11 10",
    ),
    GoldenVector("tableau statistics of the worked tableau", 11, _worked_stats, "urr=3 topone=3"),
    GoldenVector(
        "arrow form of the worked tableau", 11,
        lambda: format_alternative(to_alternative(_worked_tableau())).replace("\n", "/"),
        "11 5/6,6,5,3,1/.UU..U/..LUU./...L./.../U/",
    ),
    # The input contains 321 (8 7 5); chi321 itself refuses it.
    GoldenVector(
        "chi321 middle flip", 9,
        lambda: format_permutation(flip_middle(_perm("1 2 3 4 6 8 7 5 9"))), "1 2 3 4 8 6 5 7 9",
    ),
    GoldenVector(
        "varphi", 13,
        lambda: format_permutation(varphi(_perm("10 2 6 11 1 8 13 3 5 9 4 12 7"))),
        "9 4 5 11 1 6 10 2 8 12 7 13 3",
    ),
    GoldenVector("rho", 9, lambda: format_permutation(rho(_perm("3 7 2 5 1 4 8 6 9"))), "5 2 7 4 9 6 8 3 1"),
    GoldenVector(
        "phi_swap", 10,
        lambda: format_permutation(phi_swap(_perm("3 8 2 5 1 4 9 6 10 7"))), "5 2 8 4 10 6 9 3 1 7",
    ),
    GoldenVector("gamma 00113213", 8, lambda: str(gamma_insert(InversionSequence.parse("00113213"))), "01132130"),
    GoldenVector("gamma 00210", 5, lambda: str(gamma_insert(InversionSequence.parse("00210"))), "00102"),
    GoldenVector("b 24135", 5, lambda: str(code_b(_perm("2 4 1 3 5"))), "00210"),
    GoldenVector("b 14352", 5, lambda: str(code_b(_perm("1 4 3 5 2"))), "00102"),
    GoldenVector(
        "b-inv 00102", 5,
        lambda: format_permutation(code_b_inv(InversionSequence.parse("00102"))), "1 4 3 5 2",
    ),
    GoldenVector(
        "alpha chain", 5,
        lambda: " -> ".join(str(value) for _, value in alpha_trace(_perm("3 5 2 4 1"))),
        "3 5 2 4 1 -> 3 1 4 2 5 -> 2 4 1 3 5 -> 00210 -> 00102 -> 1 4 3 5 2 -> 1 5 3 2 4 -> 5 1 3 4 2",
    ),
    GoldenVector("beta", 9, lambda: format_permutation(beta(_perm("5 9 3 7 2 1 6 8 4"))), "6 2 4 9 8 1 5 7 3"),
]


def check_golden(vector: GoldenVector) -> CheckResult:
    try:
        actual = vector.compute()
    except PermtabError as exc:
        logger.warning(f"Golden vector {vector.name} raised: {exc}")
        return CheckResult(
            name=vector.name, n=vector.n, status=Status.FAIL, witness=str(exc), detail=f"expected {vector.expected}"
        )
    if actual == vector.expected:
        return CheckResult(name=vector.name, n=vector.n, status=Status.PASS, detail=actual)
    logger.warning(f"Golden vector {vector.name} gave {actual}, expected {vector.expected}")
    return CheckResult(
        name=vector.name, n=vector.n, status=Status.FAIL, witness=actual, detail=f"expected {vector.expected}"
    )


def golden_suite(ctx: SuiteContext) -> list[CheckResult]:
    return [check_golden(vector) for vector in GOLDEN_VECTORS]


def gf_suite(ctx: SuiteContext) -> list[CheckResult]:
    return [
        check_gf(n, include_tableaux=n <= ctx.max_n_pt, workers=ctx.workers)
        for n in ctx.range_for(Domain.S)
    ]


def relations_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.S):
        checks += [
            ctx.check_property("wnm set equals LR-maxima", n, Domain.S, props.wnm_is_lrmax),
            ctx.check_property("symmetries are involutions", n, Domain.S, props.symmetries_are_involutions),
            ctx.check_property("des equals asc of complement", n, Domain.S, props.des_is_complement_asc),
            ctx.check_property(
                "321-avoiders are LR-maxima and RL-minima", n, Domain.S, props.avoider_values_are_extremal
            ),
            ctx.check_property(
                "rlm of a 321-avoider", n, Domain.S, props.avoider_rlm_is_indicator, accepts=is_321_avoiding
            ),
            ctx.check_property(
                "reverse-complement on 321-avoiders", n, Domain.S,
                props.reverse_complement_swaps_extrema, accepts=props.is_proper_avoider,
            ),
            ctx.check_property("inverse swaps lrmax and rlmin", n, Domain.S, props.inverse_swaps_lrmax_rlmin),
            ctx.check_property("complement swaps extrema", n, Domain.S, props.complement_swaps_extrema),
        ]
    for n in ctx.range_for(Domain.S, VINCULAR_BRUTE_FORCE_N):
        checks.append(ctx.check_property("vincular counts", n, Domain.S, props.vincular_matches_brute_force))
    return checks


CHI_TRANSFER = [("rlm", "rlm"), ("rlmin", "wnm"), ("wnm", "rlmin"), ("des", "des"), ("ides", "ides")]
VARPHI_TRANSFER = [("rlmin", "wnm"), ("wnm", "rlmin"), ("rlm", "rlm"), ("des", "des"), ("u321", "u321")]
RLM_LRMAX_TRANSFER = [("rlm", "lrmax-1"), ("lrmax-1", "rlm")]
BETA_TRANSFER = [("rlm", "rlmax-1"), ("wnm", "rlmin"), ("asc", "asc")]
ALPHA_TRANSFER = [("asc", "asc"), ("rlmax", "rlmax"), ("lrmax", "rlmin"), ("rlmin", "lrmax")]
GAMMA_TRANSFER = [("dist", "dist"), ("zero", "zero"), ("maxStat", "rlminStrict"), ("rlminStrict", "maxStat")]


def avoider_swap_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.S):
        checks.append(check_equidistribution(
            n, Domain.S, ["rlm", "rlmin", "wnm", "des", "ides"], ["rlm", "wnm", "rlmin", "des", "ides"],
            avoid="321", workers=ctx.workers, name="rlmin/wnm swap over 321-avoiders",
        ))
        checks.append(ctx.check_map(n, "chi321", "involution", CHI_TRANSFER))
    return checks


def block_swap_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.S):
        checks.append(check_equidistribution(
            n, Domain.S, ["rlm", "rlmin", "wnm", "des", "u321"], ["rlm", "wnm", "rlmin", "des", "u321"],
            workers=ctx.workers, name="rlmin/wnm swap with u321",
        ))
        checks.append(ctx.check_map(n, "varphi", "involution", VARPHI_TRANSFER))
    return checks


def one_n_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.S):
        checks += [
            ctx.check_map(n, "phi_swap", "involution", RLM_LRMAX_TRANSFER),
            ctx.check_map(n, "rho", "bijection", RLM_LRMAX_TRANSFER),
            ctx.check_map(n, "rho_inv", "bijection", RLM_LRMAX_TRANSFER),
            check_equidistribution(
                n, Domain.S, ["rlm", "wnm-1"], ["wnm-1", "rlm"], workers=ctx.workers, name="(rlm, wnm-1) symmetry",
            ),
        ]
    return checks


def code_chain_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.S):
        checks += [
            ctx.check_map(n, "alpha", "involution", ALPHA_TRANSFER),
            ctx.check_map(n, "beta", "bijection", BETA_TRANSFER),
            ctx.check_property("beta_inv undoes beta", n, Domain.S, props.beta_round_trip),
            check_equidistribution(
                n, Domain.S, ["rlm", "wnm", "asc"], ["rlmax-1", "rlmin", "asc"],
                workers=ctx.workers, name="(rlm, wnm, asc) ~ (rlmax-1, rlmin, asc)",
            ),
        ]
    return checks


def blocks_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.S):
        checks += [
            ctx.check_property(
                "blocks cover the permutation with a T block", n, Domain.S, props.blocks_are_well_formed
            ),
            ctx.check_property("N blocks sit inside gaps", n, Domain.S, props.neutral_blocks_sit_inside_gaps),
            ctx.check_property("block extrema increase", n, Domain.S, props.block_extrema_increase),
            ctx.check_property("L and R invert each other", n, Domain.S, props.rotations_invert_each_other),
            ctx.check_property("L and R keep consecutive 321", n, Domain.S, props.rotations_keep_consecutive_321),
            ctx.check_property("varphi reclassifies blocks", n, Domain.S, props.varphi_reclassifies_blocks),
            ctx.check_property("descents stay inside blocks", n, Domain.S, props.descents_stay_inside_blocks),
        ]
    return checks


def gamma_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.I):
        checks += [
            ctx.check_map(n, "gamma_insert", "involution", GAMMA_TRANSFER),
            ctx.check_property("last entry marks the top MAX position", n, Domain.I, props.gamma_last_entry_is_top_max),
            ctx.check_property("gamma splits at the last MAX position", n, Domain.I, props.gamma_splits_at_last_max),
            check_equidistribution(
                n, Domain.I, ["dist", "zero", "maxStat", "rlminStrict"], ["dist", "zero", "rlminStrict", "maxStat"],
                workers=ctx.workers, name="(maxStat, rlminStrict) symmetry",
            ),
        ]
    return checks


def _pinned_ides_dist() -> CheckResult:
    """Set-level IDES = DIST must fail on 24135, whose code is 00210."""
    p = _perm("2 4 1 3 5")
    ides = sorted(ides_set(p))
    dist = sorted(invseq_stats(code_b(p)).dist_set)
    detail = f"IDES={ides} DIST={dist}"
    if props.ides_matches_dist_setwise(p):
        return CheckResult(
            name="IDES and DIST differ as sets", n=5, status=Status.FAIL, witness="2 4 1 3 5", detail=detail
        )
    return CheckResult(name="IDES and DIST differ as sets", n=5, status=Status.PASS, witness="2 4 1 3 5", detail=detail)


def position_set_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.I):
        checks += [
            ctx.check_map(n, "code_b", "bijection"),
            ctx.check_map(n, "code_b_inv", "bijection"),
            ctx.check_property("b-inv undoes b", n, Domain.S, props.code_b_round_trip),
            ctx.check_property("b undoes b-inv", n, Domain.I, props.code_b_inverse_round_trip),
            ctx.check_property("slices stay well formed", n, Domain.S, props.slices_stay_well_formed),
            ctx.check_property("position sets under b", n, Domain.S, props.code_b_position_sets),
            check_equidistribution(
                n, Domain.S, ["des", "ides"], ["asc", "dist"], domain_b=Domain.I,
                workers=ctx.workers, name="(des, ides) ~ (asc, dist)",
            ),
        ]
    if ctx.max_n >= 5:
        checks.append(_pinned_ides_dist())
    return checks


def tableaux_suite(ctx: SuiteContext) -> list[CheckResult]:
    checks = []
    for n in ctx.range_for(Domain.PT):
        checks.append(check_tableaux(n))
    for n in ctx.range_for(Domain.PT, ALTERNATIVE_ROUND_TRIP_N):
        checks.append(ctx.check_property("arrow form round trip", n, Domain.PT, props.alternative_round_trip))
    return checks


def conjecture_suite(ctx: SuiteContext) -> list[CheckResult]:
    return [check_rlmin_lrmax_conjecture(n, workers=ctx.workers) for n in ctx.range_for(Domain.S, CONJECTURE_EXTENDED_N)]


SUITES: dict[str, Callable[[SuiteContext], list[CheckResult]]] = {
    "golden": golden_suite,
    "gf": gf_suite,
    "relations": relations_suite,
    "thm11": avoider_swap_suite,
    "thm12": block_swap_suite,
    "thm13": one_n_suite,
    "thm14": code_chain_suite,
    "blocks": blocks_suite,
    "gamma": gamma_suite,
    "baril": position_set_suite,
    "tableaux": tableaux_suite,
    "conjecture": conjecture_suite,
}


def suite_names() -> list[str]:
    return ["all"] + list(SUITES)


def _run_guarded(name: str, suite: Callable[[SuiteContext], list[CheckResult]], ctx: SuiteContext) -> list[CheckResult]:
    try:
        return suite(ctx)
    except PermtabError as exc:
        logger.error(f"Suite {name} aborted: {exc}")
        return [CheckResult(name="suite aborted", n=ctx.max_n, status=Status.FAIL, witness=str(exc))]


def run_suite(name: str, ctx: SuiteContext) -> SuiteReport:
    if name == "all":
        checks: list[CheckResult] = []
        for suite_name, suite in SUITES.items():
            logger.info(f"Running suite {suite_name}")
            checks += [
                check.model_copy(update={"name": f"{suite_name}: {check.name}"})
                for check in _run_guarded(suite_name, suite, ctx)
            ]
        return SuiteReport.from_checks("all", ctx.max_n, checks)
    suite = SUITES.get(name)
    if suite is None:
        raise UnknownSuiteError(f"unknown suite '{name}'; choose from {', '.join(suite_names())}")
    logger.info(f"Running suite {name} up to n={ctx.max_n}")
    report = SuiteReport.from_checks(name, ctx.max_n, _run_guarded(name, suite, ctx))
    logger.info(f"Suite {name}: {report.status.value} ({len(report.checks)} checks)")
    return report
