from permtab.tableaux.enumeration import enumerate_fillings, enumerate_pt, enumerate_shapes
from permtab.tableaux.maps import (
    border_labels,
    from_alternative,
    gamma_cn,
    phi_zigzag,
    tableau_stats,
    to_alternative,
    validate,
)
from permtab.tableaux.models import AltTableau, Mark, PermutationTableau, TableauStats
from permtab.tableaux.text import format_alternative, format_tableau, parse_tableau, read_tableau

__all__ = [
    "enumerate_fillings",
    "enumerate_pt",
    "enumerate_shapes",
    "border_labels",
    "from_alternative",
    "gamma_cn",
    "phi_zigzag",
    "tableau_stats",
    "to_alternative",
    "validate",
    "AltTableau",
    "Mark",
    "PermutationTableau",
    "TableauStats",
    "format_alternative",
    "format_tableau",
    "parse_tableau",
    "read_tableau",
]
