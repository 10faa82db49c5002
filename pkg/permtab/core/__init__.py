from permtab.core.permutation import (
    Permutation,
    StandardizedWord,
    Symmetry,
    Word,
    complement,
    enumerate_sn,
    enumerate_sn_with_first,
    format_permutation,
    inverse,
    parse_permutation,
    pattern_of,
    relabel,
    reverse,
    reverse_complement,
    standardize,
    symmetry,
    unstandardize,
)
from permtab.core.patterns import (
    CLASSICAL_321,
    CONSECUTIVE_321,
    VINCULAR_312,
    VincularPattern,
    avoids,
    brute_force_count,
    count_occurrences,
    count_vincular,
    is_321_avoiding,
    u312,
    u321,
)
from permtab.core.statistics import (
    Extremum,
    StatReport,
    boundary_extrema,
    extrema_positions,
    stat_report,
)

__all__ = [
    "Permutation",
    "StandardizedWord",
    "Symmetry",
    "Word",
    "complement",
    "enumerate_sn",
    "enumerate_sn_with_first",
    "format_permutation",
    "inverse",
    "parse_permutation",
    "pattern_of",
    "relabel",
    "reverse",
    "reverse_complement",
    "standardize",
    "symmetry",
    "unstandardize",
    "CLASSICAL_321",
    "CONSECUTIVE_321",
    "VINCULAR_312",
    "VincularPattern",
    "avoids",
    "brute_force_count",
    "count_occurrences",
    "count_vincular",
    "is_321_avoiding",
    "u312",
    "u321",
    "Extremum",
    "StatReport",
    "boundary_extrema",
    "extrema_positions",
    "stat_report",
]
