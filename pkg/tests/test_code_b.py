import pytest
from hypothesis import given
from hypothesis.strategies import integers, permutations

from permtab.core.permutation import Permutation, enumerate_sn, parse_permutation
from permtab.harness import properties as props
from permtab.invseq.code_b import LabelledInterval, Slice, advance, code_b, code_b_inv, slices
from permtab.invseq.sequences import InversionSequence, enumerate_in


class TestSlice:
    def test_initial(self):
        u = Slice.initial(5)

        assert str(u) == "[0,5]^0"
        assert u.labels == (0,)
        assert u.is_well_formed()

    def test_interval_membership(self):
        interval = LabelledInterval(2, 4, 1)

        assert 3 in interval
        assert 5 not in interval
        assert str(interval) == "[2,4]^1"

    def test_split_in_the_middle(self):
        label, u = advance(Slice.initial(5), 2)

        assert label == 0
        assert str(u) == "[3,5]^0 [0,1]^1"

    def test_split_at_the_top(self):
        label, u = advance(Slice.initial(3), 3)

        assert label == 0
        assert str(u) == "[0,2]^1"

    def test_slices_of_sample(self):
        trace = slices(parse_permutation("24135"))

        assert len(trace) == 5
        assert all(u.is_well_formed() for u in trace)
        assert [u.labels[-1] for u in trace] == [0, 1, 2, 3, 4]

    def test_ill_formed(self):
        u = Slice((LabelledInterval(0, 2, 1), LabelledInterval(3, 4, 2)))
        assert not u.is_well_formed()


class TestCode:
    def test_examples(self):
        assert str(code_b(parse_permutation("24135"))) == "00210"
        assert str(code_b(parse_permutation("14352"))) == "00102"

    def test_inverse_examples(self):
        assert code_b_inv(InversionSequence.parse("00210")) == parse_permutation("24135")
        assert code_b_inv(InversionSequence.parse("00102")) == parse_permutation("14352")

    def test_identity_codes(self):
        assert str(code_b(Permutation.identity(4))) == "0000"

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_bijection(self, n):
        codes = {code_b(p) for p in enumerate_sn(n)}

        assert codes == set(enumerate_in(n))

    @given(integers(min_value=1, max_value=9).flatmap(lambda n: permutations(list(range(1, n + 1)))))
    def test_round_trip_and_position_sets(self, values):
        p = Permutation(tuple(values))

        assert props.code_b_round_trip(p)
        assert props.slices_stay_well_formed(p)
        assert props.code_b_position_sets(p)

    def test_ides_and_dist_differ_as_sets(self):
        assert not props.ides_matches_dist_setwise(parse_permutation("24135"))
