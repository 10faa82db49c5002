import pytest
from hypothesis import given
from hypothesis.strategies import permutations

from permtab.core.permutation import Permutation, complement, enumerate_sn
from permtab.core.statistics import (
    Extremum,
    asc,
    boundary_extrema,
    des,
    descent_set,
    extrema_positions,
    ides,
    ides_set,
    rlm,
    rlm_set,
    stat_report,
    wnm,
    wnm_set,
)


@pytest.fixture
def sample():
    return Permutation.of(5, 9, 3, 7, 2, 1, 6, 8, 4)


class TestExtrema:
    def test_value_sets(self, sample):
        values = sample.values

        assert boundary_extrema(values, Extremum.LRMAX) == {5, 9}
        assert boundary_extrema(values, Extremum.RLMAX) == {4, 8, 9}
        assert boundary_extrema(values, Extremum.LRMIN) == {5, 3, 2, 1}
        assert boundary_extrema(values, "rlmin") == {1, 4}

    def test_positions_are_one_based(self, sample):
        assert extrema_positions(sample.values, Extremum.LRMAX) == [1, 2]
        assert extrema_positions(sample.values, Extremum.RLMIN) == [6, 9]

    def test_empty_word(self):
        for kind in Extremum:
            assert boundary_extrema((), kind) == frozenset()


class TestDescents:
    def test_sets_and_counts(self, sample):
        assert descent_set(sample.values) == {2, 4, 5, 8}
        assert des(sample.values) == 4
        assert asc(sample.values) == 4

    def test_inverse_descents(self, sample):
        assert ides_set(sample) == {1, 2, 4, 6, 8}
        assert ides(sample) == 5

    @given(permutations(list(range(1, 9))))
    def test_des_plus_asc(self, values):
        assert des(values) + asc(values) == len(values) - 1
        assert des(values) == asc(complement(Permutation(tuple(values))).values)


class TestWnmAndRlm:
    def test_sample(self, sample):
        assert wnm_set(sample) == {5, 9}
        assert rlm_set(sample) == {2, 7, 9}
        assert rlm(sample) == 3

    def test_identity(self):
        p = Permutation.identity(5)
        assert wnm(p) == 5
        assert rlm(p) == 0

    def test_one_first_has_no_rlm(self):
        assert rlm(Permutation.of(1, 3, 2)) == 0

    def test_distribution_over_s3(self):
        pairs = sorted((wnm(p), rlm(p)) for p in enumerate_sn(3))
        assert pairs == [(1, 1), (1, 2), (2, 0), (2, 1), (2, 1), (3, 0)]

    @given(permutations(list(range(1, 10))))
    def test_wnm_values_are_lr_maxima(self, values):
        p = Permutation(tuple(values))
        assert wnm_set(p) == boundary_extrema(p.values, Extremum.LRMAX)


class TestStatReport:
    def test_counts(self, sample):
        counts = stat_report(sample).as_counts()

        assert counts == {
            "wnm": 2,
            "rlm": 3,
            "lrmax": 2,
            "rlmax": 3,
            "lrmin": 4,
            "rlmin": 2,
            "des": 4,
            "asc": 4,
            "ides": 5,
            "u321": 1,
            "u312": 6,
        }

    def test_single_letter(self):
        counts = stat_report(Permutation.of(1)).as_counts()

        assert counts["wnm"] == 1
        assert counts["rlm"] == 0
        assert counts["des"] == counts["asc"] == counts["ides"] == 0
        assert counts["lrmax"] == counts["rlmin"] == 1

    def test_worked_permutation(self):
        report = stat_report(Permutation.of(6, 5, 1, 10, 4, 3, 8, 9, 2, 11, 7, 12))

        assert (report.wnm, report.rlm) == (4, 2)
        assert report.rlm_set == {5, 6}
        assert report.wnm_set == report.lrmax_set == {6, 10, 11, 12}
