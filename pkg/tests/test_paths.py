import pytest

from errors import InvalidInputError
from lattice.paths import (
    Labelling,
    PathWord,
    ballot_number,
    ballot_to_mdyck,
    contacts,
    enumerate_labellings,
    enumerate_paths,
    from_parking_function,
    initial_rise,
    is_parking_function,
    is_valid_ballot,
    labelled_paths,
    labellings_count,
    mdyck_to_ballot,
    parse_labelled,
    to_parking_function,
)


class TestBallotPaths:
    def test_valid_words(self):
        assert is_valid_ballot("NENE", 1)
        assert is_valid_ballot("NEENEE", 2)
        assert is_valid_ballot("", 3)

    def test_invalid_words(self):
        assert not is_valid_ballot("ENNE", 1)
        assert not is_valid_ballot("NEEE", 1)
        assert not is_valid_ballot("NXE", 1)
        with pytest.raises(InvalidInputError):
            PathWord.ballot("NEEENE", 2)

    def test_mdyck_round_trip(self):
        path = PathWord.ballot("NNEEEE", 2)
        dyck = ballot_to_mdyck(path)
        assert dyck.word == "uuuudddd"
        assert dyck.n == 2
        assert mdyck_to_ballot(dyck) == path

    def test_dyck_blocks_must_align(self):
        with pytest.raises(InvalidInputError):
            PathWord.dyck("uuudddud", 2)

    def test_parse_picks_the_alphabet(self):
        assert PathWord.parse("NENE", 1).form == "ballot"
        assert PathWord.parse("udud", 1).form == "dyck"
        with pytest.raises(InvalidInputError):
            PathWord.parse("NdNE", 1)

    def test_record_round_trip(self):
        path = PathWord.ballot("NENEEE", 2)
        assert PathWord.from_dict(path.to_dict()) == path


class TestStatistics:
    def test_contacts(self):
        assert contacts(PathWord.ballot("NENENE", 1)) == 4
        assert contacts(PathWord.ballot("NNNEEE", 1)) == 2
        assert contacts(PathWord.ballot("NEENEE", 2)) == 3

    def test_empty_path_has_one_contact(self):
        assert contacts(PathWord.ballot("", 1)) == 1

    def test_contacts_agree_on_both_forms(self):
        for path in enumerate_paths(2, 3):
            assert contacts(ballot_to_mdyck(path)) == contacts(path)
            assert initial_rise(ballot_to_mdyck(path)) == initial_rise(path)

    def test_initial_rise(self):
        assert initial_rise(PathWord.ballot("NNENEE", 1)) == 2
        assert initial_rise(PathWord.ballot("NEENEE", 2)) == 1


class TestEnumeration:
    @pytest.mark.parametrize("m,n,expected", [(1, 3, 5), (1, 4, 14), (2, 3, 12), (3, 2, 4), (1, 0, 1)])
    def test_counts(self, m, n, expected):
        assert ballot_number(m, n) == expected
        assert len(enumerate_paths(m, n)) == expected

    def test_lexicographic_order(self):
        words = [p.word for p in enumerate_paths(1, 3)]
        assert words == sorted(words)

    def test_labellings(self):
        path = PathWord.ballot("NNENEE", 1)
        labellings = enumerate_labellings(path)
        assert len(labellings) == labellings_count(path) == 3
        assert all(a < b for lab in labellings for a, b in [lab.labels[:2]])

    @pytest.mark.parametrize("m,n,expected", [(1, 3, 16), (2, 2, 5), (1, 2, 3)])
    def test_labelled_totals(self, m, n, expected):
        assert sum(1 for _ in labelled_paths(m, n)) == expected


class TestParkingFunctions:
    def test_labelled_path_to_parking(self):
        assert to_parking_function(parse_labelled("N₁EN₂E", 1)).values == (1, 2)

    def test_parking_to_labelled_path(self):
        assert from_parking_function((1, 1), 1).pretty() == "N₁N₂EE"

    def test_value_out_of_range(self):
        assert not is_parking_function((3,), 1)
        with pytest.raises(InvalidInputError):
            from_parking_function((3,), 1)

    def test_plain_digits_parse(self):
        assert parse_labelled("N2EN1E", 1).labels == (2, 1)
        with pytest.raises(InvalidInputError):
            parse_labelled("N1XN2E", 1)

    def test_round_trip_on_all_labellings(self):
        for labelling in labelled_paths(1, 3):
            parking = to_parking_function(labelling)
            back = from_parking_function(parking.values, 1)
            assert (back.path, back.labels) == (labelling.path, labelling.labels)

    def test_labels_must_increase_along_ascents(self):
        with pytest.raises(InvalidInputError):
            Labelling(path=PathWord.ballot("NNEE", 1), labels=(2, 1))

    def test_labelling_record_round_trip(self):
        labelling = parse_labelled("N₂EN₁E", 1)
        assert Labelling.from_dict(labelling.to_dict()) == labelling
