from permtab.invseq.code_b import LabelledInterval, Slice, advance, code_b, code_b_inv, slices
from permtab.invseq.maps import alpha, alpha_trace, beta, beta_inv
from permtab.invseq.sequences import (
    InversionSequence,
    InvSeqStats,
    delete_position,
    enumerate_in,
    enumerate_in_with_prefix,
    format_inversion_sequence,
    gamma_insert,
    invseq_stats,
    parse_inversion_sequence,
)

__all__ = [
    "LabelledInterval",
    "Slice",
    "advance",
    "code_b",
    "code_b_inv",
    "slices",
    "alpha",
    "alpha_trace",
    "beta",
    "beta_inv",
    "InversionSequence",
    "InvSeqStats",
    "delete_position",
    "enumerate_in",
    "enumerate_in_with_prefix",
    "format_inversion_sequence",
    "gamma_insert",
    "invseq_stats",
    "parse_inversion_sequence",
]
