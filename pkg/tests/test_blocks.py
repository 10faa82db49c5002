import pytest
from hypothesis import assume, given
from hypothesis.strategies import integers, permutations

from permtab.blocks.chi import chi321, fixed_prefix, fixed_suffix_start, flip_middle
from permtab.blocks.decomposition import (
    BlockClass,
    decompose,
    rotate_max,
    rotate_min,
    varphi,
)
from permtab.core.patterns import is_321_avoiding, u321
from permtab.core.permutation import Permutation, parse_permutation
from permtab.core.statistics import des, rlm, rlmin, wnm
from permtab.errors import DomainError, InvalidWordError
from permtab.harness import properties as props


class TestDecompose:
    def test_two_t_blocks(self):
        d = decompose(Permutation.of(2, 1, 3))

        assert [block.word for block in d.blocks] == [(2, 1), (3,)]
        assert d.classes == "TT"

    def test_trailing_i_block(self):
        d = decompose(Permutation.of(3, 1, 2))

        assert d.classes == "TI"
        assert d.bars() == [0, 2, 3]
        assert d.of_class(BlockClass.I)[0].word == (2,)

    def test_pretty(self):
        assert decompose(Permutation.of(3, 1, 2)).pretty() == "3 1 | 2\nT   | I"

    def test_word_is_preserved(self):
        p = parse_permutation("10 2 6 11 1 8 13 3 5 9 4 12 7")
        assert decompose(p).word == p.values

    def test_worked_example_classes(self):
        d = decompose(parse_permutation("10 2 6 11 1 8 13 3 5 9 4 12 7"))

        assert [block.word for block in d.blocks] == [(10, 2, 6), (11, 1), (8,), (13, 3), (5, 9, 4), (12, 7)]
        assert d.classes == "ATNTII"

    @given(permutations(list(range(1, 10))))
    def test_structure(self, values):
        p = Permutation(tuple(values))

        assert props.blocks_are_well_formed(p)
        assert props.neutral_blocks_sit_inside_gaps(p)
        assert props.block_extrema_increase(p)
        assert props.descents_stay_inside_blocks(p)


class TestRotations:
    def test_rotate_min(self):
        assert rotate_min((3, 1, 2)) == (2, 3, 1)

    def test_rotate_max(self):
        assert rotate_max((1, 3, 2)) == (3, 2, 1)

    def test_empty_word(self):
        with pytest.raises(InvalidWordError):
            rotate_min(())
        with pytest.raises(InvalidWordError):
            rotate_max([])

    @given(permutations(list(range(1, 10))))
    def test_inverse_pairs_on_blocks(self, values):
        p = Permutation(tuple(values))

        assert props.rotations_invert_each_other(p)
        assert props.rotations_keep_consecutive_321(p)


class TestVarphi:
    def test_worked_example(self):
        p = parse_permutation("10 2 6 11 1 8 13 3 5 9 4 12 7")
        assert varphi(p) == parse_permutation("9 4 5 11 1 6 10 2 8 12 7 13 3")

    def test_small(self):
        assert varphi(Permutation.of(3, 1, 2)) == Permutation.of(2, 3, 1)

    @given(permutations(list(range(1, 11))))
    def test_involution_and_transfer(self, values):
        p = Permutation(tuple(values))
        q = varphi(p)

        assert varphi(q) == p
        assert (rlmin(p.values), wnm(p)) == (wnm(q), rlmin(q.values))
        assert rlm(p) == rlm(q)
        assert des(p.values) == des(q.values)
        assert u321(p) == u321(q)

    @given(permutations(list(range(1, 9))))
    def test_reclassifies_blocks(self, values):
        assert props.varphi_reclassifies_blocks(Permutation(tuple(values)))


class TestChi321:
    def test_worked_example(self):
        assert flip_middle(parse_permutation("123468759")) == parse_permutation("123486579")

    def test_worked_example_is_not_an_avoider(self):
        with pytest.raises(DomainError, match="321-avoiding"):
            chi321(parse_permutation("123468759"))

    def test_small_avoider(self):
        assert chi321(Permutation.of(2, 3, 1)) == Permutation.of(3, 1, 2)

    def test_fixed_parts(self):
        p = parse_permutation("123468759")

        assert fixed_prefix(p) == 4
        assert fixed_suffix_start(p) == 9
        assert fixed_suffix_start(Permutation.of(2, 1)) == 3

    def test_identity_is_fixed(self):
        assert chi321(Permutation.identity(5)) == Permutation.identity(5)

    def test_rejects_321(self):
        with pytest.raises(DomainError, match="321"):
            chi321(Permutation.of(3, 2, 1))

    @given(integers(min_value=1, max_value=10).flatmap(lambda n: permutations(list(range(1, n + 1)))))
    def test_involution_on_avoiders(self, values):
        p = Permutation(tuple(values))
        assume(is_321_avoiding(p))
        q = chi321(p)

        assert is_321_avoiding(q)
        assert chi321(q) == p
        assert (rlmin(p.values), wnm(p)) == (wnm(q), rlmin(q.values))
