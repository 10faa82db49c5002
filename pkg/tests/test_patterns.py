import pytest
from hypothesis import given
from hypothesis.strategies import permutations

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
from permtab.core.permutation import Permutation, enumerate_sn
from permtab.errors import InvalidPermutationError


class TestVincularPattern:
    def test_str_marks_adjacency(self):
        assert str(CONSECUTIVE_321) == "3_2_1"
        assert str(VINCULAR_312) == "3_12"
        assert str(CLASSICAL_321) == "321"

    def test_adjacency_out_of_range(self):
        with pytest.raises(InvalidPermutationError):
            VincularPattern(Permutation.of(2, 1), frozenset({2}))

    def test_consecutive_flag(self):
        assert CONSECUTIVE_321.is_consecutive
        assert not VINCULAR_312.is_consecutive


class TestCounting:
    def test_classical(self):
        assert count_occurrences((4, 3, 2, 1), CLASSICAL_321) == 4

    def test_consecutive(self):
        assert u321(Permutation.of(4, 3, 2, 1)) == 2
        assert u321(Permutation.of(5, 9, 3, 7, 2, 1, 6, 8, 4)) == 1

    def test_vincular_312(self):
        assert u312(Permutation.of(3, 1, 2)) == 1
        assert u312(Permutation.of(4, 1, 3, 2)) == 2
        assert u312(Permutation.of(5, 9, 3, 7, 2, 1, 6, 8, 4)) == 6

    def test_vincular_3142(self):
        host = Permutation.of(4, 1, 2, 5, 3)

        assert count_vincular(host, VincularPattern(Permutation.of(3, 1, 4, 2))) == 2
        assert count_vincular(host, VincularPattern(Permutation.of(3, 1, 4, 2), frozenset({1}))) == 1

    def test_pattern_longer_than_word(self):
        assert count_occurrences((1, 2), CLASSICAL_321) == 0

    @given(permutations(list(range(1, 8))))
    def test_matches_brute_force(self, values):
        for pat in (CLASSICAL_321, CONSECUTIVE_321, VINCULAR_312):
            assert count_occurrences(values, pat) == brute_force_count(values, pat)


class TestAvoidance:
    def test_examples(self):
        assert is_321_avoiding(Permutation.of(2, 4, 1, 3))
        assert is_321_avoiding(Permutation.of(3, 1, 4, 2))
        assert not is_321_avoiding(Permutation.of(3, 2, 1))
        assert not is_321_avoiding(Permutation.of(4, 1, 3, 2))

    @pytest.mark.parametrize("n, catalan", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
    def test_catalan_counts(self, n, catalan):
        assert sum(1 for p in enumerate_sn(n) if is_321_avoiding(p)) == catalan

    @given(permutations(list(range(1, 8))))
    def test_linear_scan_agrees_with_counting(self, values):
        p = Permutation(tuple(values))
        assert is_321_avoiding(p) == avoids(p, CLASSICAL_321)
