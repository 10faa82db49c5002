import math

import pytest

from permtab.core.statistics import rlm, rlmin, wnm
from permtab.errors import BoundsError, InvalidTableauError
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
from permtab.tableaux.models import AltTableau, Mark, PermutationTableau
from permtab.tableaux.text import format_alternative, format_tableau, parse_tableau, read_tableau

WORKED_TEXT = "11 5\n6,6,5,3,1\n011001\n000111\n00001\n011\n1\n"
WORKED_ARROWS = "11 5\n6,6,5,3,1\n.UU..U\n..LUU.\n...L.\n...\nU\n"


@pytest.fixture
def worked():
    return parse_tableau(WORKED_TEXT)


class TestValidation:
    def test_worked_tableau_is_valid(self, worked):
        assert worked.length == 11
        assert worked.num_rows == 5
        assert worked.num_columns == 6

    def test_empty_column(self):
        with pytest.raises(InvalidTableauError) as exc_info:
            validate((2, 1), ((1, 0), (0,)))

        assert exc_info.value.reason == "empty column"
        assert exc_info.value.cell == (1, 2)

    def test_restricted_zero_violation(self):
        with pytest.raises(InvalidTableauError) as exc_info:
            validate((2, 2), ((1, 1), (1, 0)))

        assert exc_info.value.reason == "restricted-0 violation"
        assert exc_info.value.cell == (2, 2)

    def test_shape_not_weakly_decreasing(self):
        with pytest.raises(InvalidTableauError) as exc_info:
            validate((1, 2), ((1,), (1, 1)))

        assert exc_info.value.reason == "shape not weakly decreasing"

    def test_bad_cell_value(self):
        with pytest.raises(InvalidTableauError) as exc_info:
            validate((1,), ((2,),))

        assert exc_info.value.reason == "malformed"

    def test_zero_with_one_above_but_none_left_is_fine(self):
        t = validate((1, 1), ((1,), (0,)))
        assert t.cell(2, 1) == 0


class TestBorderLabels:
    def test_worked_labels(self, worked):
        rows, columns = border_labels(worked)

        assert rows == (1, 2, 4, 7, 10)
        assert columns == (11, 9, 8, 6, 5, 3)

    def test_labels_are_a_permutation(self):
        for t in enumerate_pt(5):
            rows, columns = border_labels(t)
            assert sorted(rows + columns) == list(range(1, 6))


class TestBijections:
    def test_phi_on_worked(self, worked):
        assert phi_zigzag(worked).values == (8, 6, 1, 5, 3, 4, 9, 2, 7, 11, 10)

    def test_gamma_on_worked(self, worked):
        assert gamma_cn(worked).values == (9, 4, 6, 5, 2, 8, 3, 1, 7, 11, 10)

    def test_empty_rows_give_identity(self):
        t = validate((0, 0, 0), ((), (), ()))

        assert phi_zigzag(t).values == (1, 2, 3)
        assert gamma_cn(t).values == (1, 2, 3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_both_maps_are_bijections(self, n):
        tableaux = list(enumerate_pt(n))

        assert len(tableaux) == math.factorial(n)
        assert len({phi_zigzag(t) for t in tableaux}) == math.factorial(n)
        assert len({gamma_cn(t) for t in tableaux}) == math.factorial(n)


class TestStatistics:
    def test_worked(self, worked):
        stats = tableau_stats(worked)

        assert stats.urr == 3
        assert stats.topone == 3
        assert stats.unrestricted_row_labels == {1, 7, 10}

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_statistics_transfer(self, n):
        for t in enumerate_pt(n):
            stats = tableau_stats(t)
            g = gamma_cn(t)
            assert stats.urr == rlmin(g.values)
            assert stats.topone == rlm(g)
            assert stats.urr == wnm(phi_zigzag(t))


class TestAlternativeForm:
    def test_worked_arrows(self, worked):
        assert format_alternative(to_alternative(worked)) == WORKED_ARROWS

    def test_round_trip(self):
        for t in enumerate_pt(5):
            assert from_alternative(to_alternative(t)) == t

    def test_two_ups_in_a_column(self):
        with pytest.raises(InvalidTableauError):
            AltTableau((1, 1), ((Mark.UP,), (Mark.UP,)))

    def test_left_above_up(self):
        with pytest.raises(InvalidTableauError):
            AltTableau((1, 1), ((Mark.LEFT,), (Mark.UP,)))


class TestEnumeration:
    def test_shapes_of_three(self):
        assert list(enumerate_shapes(3)) == [(2,), (1, 1), (1, 0), (0, 0, 0)]

    def test_fillings_of_a_column(self):
        fills = [t.fill for t in enumerate_fillings((1, 1))]
        assert fills == [((0,), (1,)), ((1,), (0,)), ((1,), (1,))]

    def test_pt3(self):
        assert len(list(enumerate_pt(3))) == 6

    def test_every_tableau_is_distinct(self):
        tableaux = list(enumerate_pt(5))
        assert len(set(tableaux)) == len(tableaux)

    def test_bounds(self):
        with pytest.raises(BoundsError):
            list(enumerate_pt(0))
        with pytest.raises(BoundsError):
            list(enumerate_pt(9))


class TestTextFormat:
    def test_round_trip(self, worked):
        assert format_tableau(worked) == WORKED_TEXT

    def test_trailing_empty_rows_may_be_stripped(self):
        t = parse_tableau("3 3\n0,0,0\n")
        assert t == PermutationTableau((0, 0, 0), ((), (), ()))

    def test_length_mismatch(self):
        with pytest.raises(InvalidTableauError, match="header length"):
            parse_tableau("4 1\n2\n11\n")

    def test_lines_after_the_rows(self):
        with pytest.raises(InvalidTableauError, match="after the 1 rows"):
            parse_tableau("3 1\n2\n11\n01\n")

    def test_trailing_blank_lines(self):
        assert parse_tableau("3 1\n2\n11\n\n\n") == PermutationTableau((2,), ((1, 1),))

    def test_bad_header(self):
        with pytest.raises(InvalidTableauError):
            parse_tableau("eleven\n1\n1\n")

    def test_read_from_file(self, tmp_path, worked):
        path = tmp_path / "worked.txt"
        path.write_text(WORKED_TEXT)

        assert read_tableau(path) == worked
