from permtab.harness.catalogue import Domain, StatTerm, get_statistic, parse_term, statistic_names
from permtab.harness.checks import (
    check_rlmin_lrmax_conjecture,
    check_equidistribution,
    check_gf,
    check_map,
    check_property,
    check_tableaux,
)
from permtab.harness.distribution import DistributionTable, joint_distribution
from permtab.harness.polynomial import BivariatePolynomial, rising_factorial
from permtab.harness.registry import MapSpec, get_map
from permtab.harness.report import CheckResult, Status, SuiteReport
from permtab.harness.suites import SuiteContext, run_suite, suite_names

__all__ = [
    "Domain",
    "StatTerm",
    "get_statistic",
    "parse_term",
    "statistic_names",
    "check_rlmin_lrmax_conjecture",
    "check_equidistribution",
    "check_gf",
    "check_map",
    "check_property",
    "check_tableaux",
    "DistributionTable",
    "joint_distribution",
    "BivariatePolynomial",
    "rising_factorial",
    "MapSpec",
    "get_map",
    "CheckResult",
    "Status",
    "SuiteReport",
    "SuiteContext",
    "run_suite",
    "suite_names",
]
