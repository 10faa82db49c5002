"""Element-wise predicates behind the structural suites.

Each predicate takes one domain element and returns True when the property
holds for it.
"""
import re

from permtab.blocks.decomposition import BlockClass, decompose, rotate_max, rotate_min, varphi
from permtab.core import statistics as st
from permtab.core.patterns import (
    CLASSICAL_321,
    CONSECUTIVE_321,
    VINCULAR_312,
    avoids,
    brute_force_count,
    count_occurrences,
    count_vincular,
    is_321_avoiding,
)
from permtab.core.permutation import (
    Permutation,
    Symmetry,
    complement,
    inverse,
    reverse_complement,
    symmetry,
)
from permtab.core.statistics import Extremum, boundary_extrema, extrema_positions
from permtab.invseq.code_b import code_b, code_b_inv, slices
from permtab.invseq.maps import beta, beta_inv
from permtab.invseq.sequences import InversionSequence, delete_position, gamma_insert, invseq_stats
from permtab.tableaux.maps import from_alternative, to_alternative
from permtab.tableaux.models import PermutationTableau


# -- permutations ------------------------------------------------------------

def wnm_is_lrmax(p: Permutation) -> bool:
    return st.wnm_set(p) == boundary_extrema(p.values, Extremum.LRMAX)


def symmetries_are_involutions(p: Permutation) -> bool:
    return all(symmetry(symmetry(p, kind), kind) == p for kind in Symmetry)


def des_is_complement_asc(p: Permutation) -> bool:
    return st.des(p.values) == st.asc(complement(p).values)


def avoider_values_are_extremal(p: Permutation) -> bool:
    """321-avoiding iff every value is an LR-maximum or an RL-minimum."""
    covered = boundary_extrema(p.values, Extremum.LRMAX) | boundary_extrema(p.values, Extremum.RLMIN)
    extremal = covered == frozenset(p.values)
    return is_321_avoiding(p) == extremal == avoids(p, CLASSICAL_321)


def avoider_rlm_is_indicator(p: Permutation) -> bool:
    return st.rlm(p) == (0 if p.values[0] == 1 else 1)


def is_proper_avoider(p: Permutation) -> bool:
    return is_321_avoiding(p) and p.values[0] != 1 and p.values[-1] != p.n


def reverse_complement_swaps_extrema(p: Permutation) -> bool:
    sigma = reverse_complement(p)
    if not st.rlm(p) == st.rlm(sigma) == 1:
        return False
    left = (st.rlmin(p.values), st.lrmax(p.values), st.des(p.values), st.ides(p))
    right = (st.lrmax(sigma.values), st.rlmin(sigma.values), st.des(sigma.values), st.ides(sigma))
    return left == right


def _extrema(p: Permutation) -> tuple[int, int, int, int]:
    v = p.values
    return st.rlmax(v), st.lrmin(v), st.lrmax(v), st.rlmin(v)


def inverse_swaps_lrmax_rlmin(p: Permutation) -> bool:
    rlmax, lrmin, lrmax, rlmin = _extrema(p)
    return _extrema(inverse(p)) == (rlmax, lrmin, rlmin, lrmax)


def complement_swaps_extrema(p: Permutation) -> bool:
    rlmax, lrmin, lrmax, rlmin = _extrema(p)
    return _extrema(complement(p)) == (rlmin, lrmax, lrmin, rlmax)


def vincular_matches_brute_force(p: Permutation) -> bool:
    return all(
        count_vincular(p, pat) == brute_force_count(p.values, pat)
        for pat in (CLASSICAL_321, CONSECUTIVE_321, VINCULAR_312)
    )


# -- blocks ------------------------------------------------------------------

_GAP_WITH_NEUTRAL = re.compile(r"^I*NA*$")


def blocks_are_well_formed(p: Permutation) -> bool:
    decomposition = decompose(p)
    return (
        decomposition.word == p.values
        and all(block.word for block in decomposition.blocks)
        and bool(decomposition.of_class(BlockClass.T))
    )


def neutral_blocks_sit_inside_gaps(p: Permutation) -> bool:
    """An N block lies strictly between two T blocks, preceded in its gap by
    I blocks only and followed by A blocks only."""
    gaps = decompose(p).classes.split("T")
    for g, gap in enumerate(gaps):
        if "N" not in gap:
            continue
        if g == 0 or g == len(gaps) - 1 or not _GAP_WITH_NEUTRAL.match(gap):
            return False
    return True


def block_extrema_increase(p: Permutation) -> bool:
    decomposition = decompose(p)
    maxima = [max(b.word) for b in decomposition.blocks if b.kind in (BlockClass.T, BlockClass.A)]
    minima = [min(b.word) for b in decomposition.blocks if b.kind in (BlockClass.T, BlockClass.I)]
    return maxima == sorted(maxima) and minima == sorted(minima)


def rotations_invert_each_other(p: Permutation) -> bool:
    for block in decompose(p).blocks:
        w = block.word
        if (rotate_max(rotate_min(w)) == w) != (w[0] == max(w)):
            return False
        if (rotate_min(rotate_max(w)) == w) != (w[-1] == min(w)):
            return False
    return True


def rotations_keep_consecutive_321(p: Permutation) -> bool:
    for block in decompose(p).blocks:
        w = block.word
        before = count_occurrences(w, CONSECUTIVE_321)
        if w[0] == max(w) and count_occurrences(rotate_min(w), CONSECUTIVE_321) != before:
            return False
        if w[-1] == min(w) and count_occurrences(rotate_max(w), CONSECUTIVE_321) != before:
            return False
    return True


def varphi_reclassifies_blocks(p: Permutation) -> bool:
    """Blocks of varphi(p) are the T and N blocks, R(I) as A and L(A) as I."""
    source = decompose(p)
    expected = []
    for block in source.blocks:
        if block.kind is BlockClass.I:
            expected.append((rotate_max(block.word), BlockClass.A))
        elif block.kind is BlockClass.A:
            expected.append((rotate_min(block.word), BlockClass.I))
        else:
            expected.append((block.word, block.kind))
    image = decompose(varphi(p))
    actual = [(block.word, block.kind) for block in image.blocks]
    return sorted(expected, key=_block_key) == sorted(actual, key=_block_key)


def _block_key(entry: tuple[tuple[int, ...], BlockClass]) -> tuple:
    return entry[1].value, entry[0]


def descents_stay_inside_blocks(p: Permutation) -> bool:
    bars = set(decompose(p).bars())
    return not (st.descent_set(p.values) & bars)


# -- inversion sequences and the code b --------------------------------------

def gamma_last_entry_is_top_max(s: InversionSequence) -> bool:
    return s.entries[-1] + 1 == max(invseq_stats(gamma_insert(s)).max_set)


def gamma_splits_at_last_max(s: InversionSequence) -> bool:
    j = max(invseq_stats(s).max_set)
    if s.n == 1:
        return gamma_insert(s) == s
    head = gamma_insert(delete_position(s, j))
    return gamma_insert(s).entries == head.entries + (s.entries[j - 1],)


def slices_stay_well_formed(p: Permutation) -> bool:
    return all(
        u.is_well_formed() and u.labels[-1] == i and 0 in u.intervals[-1]
        for i, u in enumerate(slices(p))
    )


def code_b_round_trip(p: Permutation) -> bool:
    return code_b_inv(code_b(p)) == p


def code_b_inverse_round_trip(s: InversionSequence) -> bool:
    return code_b(code_b_inv(s)) == s


def _positions(p: Permutation, kind: Extremum) -> frozenset[int]:
    return frozenset(extrema_positions(p.values, kind))


def code_b_position_sets(p: Permutation) -> bool:
    """DES = ASC, LRMAX = ZERO, LRMIN = MAX and RLMAX = strict RLMIN under b."""
    stats = invseq_stats(code_b(p))
    return (
        st.descent_set(p.values) == stats.asc_set
        and _positions(p, Extremum.LRMAX) == stats.zero_set
        and _positions(p, Extremum.LRMIN) == stats.max_set
        and _positions(p, Extremum.RLMAX) == stats.rlmin_strict_set
    )


def ides_matches_dist_setwise(p: Permutation) -> bool:
    return st.ides_set(p) == invseq_stats(code_b(p)).dist_set


def beta_round_trip(p: Permutation) -> bool:
    return beta_inv(beta(p)) == p


# -- tableaux ----------------------------------------------------------------

def alternative_round_trip(t: PermutationTableau) -> bool:
    return from_alternative(to_alternative(t)) == t
