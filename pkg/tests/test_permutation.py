import pytest
from hypothesis import given
from hypothesis.strategies import integers, permutations

from permtab.core.permutation import (
    Permutation,
    StandardizedWord,
    Symmetry,
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
from permtab.errors import BoundsError, InvalidPermutationError, InvalidWordError


class TestPermutation:
    def test_accepts_rearrangement(self):
        p = Permutation.of(3, 1, 2)

        assert p.n == 3
        assert p.at(1) == 3
        assert p.position(2) == 3

    def test_rejects_repeated_letter(self):
        with pytest.raises(InvalidPermutationError):
            Permutation((1, 1, 2))

    def test_rejects_gap(self):
        with pytest.raises(InvalidPermutationError):
            Permutation((1, 3))

    def test_rejects_empty(self):
        with pytest.raises(InvalidPermutationError, match="empty"):
            Permutation(())

    def test_identity(self):
        assert Permutation.identity(4).values == (1, 2, 3, 4)

    def test_hashable(self):
        assert len({Permutation.of(1, 2), Permutation.of(1, 2), Permutation.of(2, 1)}) == 2


class TestParsing:
    def test_space_separated(self):
        assert parse_permutation("5 9 3 7 2 1 6 8 4").values == (5, 9, 3, 7, 2, 1, 6, 8, 4)

    def test_comma_separated(self):
        assert parse_permutation("10,2,6,11,1,8,13,3,5,9,4,12,7").n == 13

    def test_digit_shorthand(self):
        assert parse_permutation("372514869") == Permutation.of(3, 7, 2, 5, 1, 4, 8, 6, 9)

    def test_shorthand_refused_past_nine(self):
        with pytest.raises(InvalidPermutationError, match="separators"):
            parse_permutation("12345678910")

    def test_non_integer(self):
        with pytest.raises(InvalidPermutationError):
            parse_permutation("1 b 2")

    def test_format(self):
        assert format_permutation(Permutation.of(2, 10, 1, 3, 4, 5, 6, 7, 8, 9)) == "2 10 1 3 4 5 6 7 8 9"
        assert str(Permutation.of(2, 1)) == "2 1"


class TestSymmetries:
    def test_reverse_complement_inverse(self):
        p = Permutation.of(2, 4, 1, 3)

        assert reverse(p).values == (3, 1, 4, 2)
        assert complement(p).values == (3, 1, 4, 2)
        assert inverse(p).values == (3, 1, 4, 2)

    def test_reverse_complement(self):
        assert reverse_complement(Permutation.of(1, 3, 2)).values == (2, 1, 3)

    def test_symmetry_by_name(self):
        p = Permutation.of(3, 1, 2)
        assert symmetry(p, "inverse") == inverse(p)
        assert symmetry(p, Symmetry.REVERSE) == reverse(p)

    @given(permutations(list(range(1, 9))))
    def test_symmetries_are_involutions(self, values):
        p = Permutation(tuple(values))
        for kind in Symmetry:
            assert symmetry(symmetry(p, kind), kind) == p


class TestStandardize:
    def test_pattern_of(self):
        assert pattern_of([10, 2, 6]) == (3, 1, 2)

    def test_standardize_and_back(self):
        sw = standardize([7, 3, 9])

        assert sw.pattern.values == (2, 1, 3)
        assert sw.support == (3, 7, 9)
        assert unstandardize(sw) == (7, 3, 9)

    def test_worked_word(self):
        sw = standardize([3, 1, 5, 7, 4])

        assert sw.pattern == Permutation.of(2, 1, 4, 5, 3)
        assert sw.support == (1, 3, 4, 5, 7)
        assert unstandardize(sw) == (3, 1, 5, 7, 4)

    def test_relabel(self):
        assert relabel((2, 1, 3), [9, 3, 7]) == (7, 3, 9)
        assert relabel((), []) == ()

    def test_rejects_repeats(self):
        with pytest.raises(InvalidWordError):
            standardize([1, 1])

    def test_rejects_empty(self):
        with pytest.raises(InvalidWordError):
            standardize([])

    def test_support_must_match_pattern(self):
        with pytest.raises(InvalidWordError):
            StandardizedWord(Permutation.of(1, 2), (4,))


class TestEnumeration:
    def test_sizes(self):
        assert [sum(1 for _ in enumerate_sn(n)) for n in range(1, 6)] == [1, 2, 6, 24, 120]

    def test_lexicographic(self):
        assert [p.values for p in enumerate_sn(3)] == [
            (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)
        ]

    @given(integers(min_value=1, max_value=5))
    def test_chunks_cover_sn(self, n):
        chunked = [p for first in range(1, n + 1) for p in enumerate_sn_with_first(n, first)]
        assert chunked == list(enumerate_sn(n))

    def test_bounds(self):
        with pytest.raises(BoundsError):
            list(enumerate_sn(0))
        with pytest.raises(BoundsError):
            list(enumerate_sn(11))
