"""Tests for report rendering."""

import csv
import io
import json
from fractions import Fraction

from lie_growth.core.models import GrowthTable
from lie_growth.utils.display import emit


def _table() -> GrowthTable:
    return GrowthTable.from_dimensions([2, 1, 2])


class TestCsv:
    def test_growth_table(self):
        assert emit(_table(), "csv") == "n,d,g\n1,2,2\n2,1,3\n3,2,5"

    def test_empty_table_keeps_header(self):
        assert emit(GrowthTable.from_dimensions([]), "csv") == "n,d,g"

    def test_prime_stamp(self):
        lines = emit(_table(), "csv", prime=7).splitlines()
        assert lines[0] == "# field=prime p=7"
        assert lines[1] == "n,d,g"

    def test_lists_and_booleans(self):
        text = emit([{"n": 3, "added": ["[x,y]", "x"], "ok": True}], "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert rows == [["n", "added", "ok"], ["3", "[x,y] x", "true"]]


class TestJson:
    def test_one_object_per_row(self):
        lines = emit(_table(), "json").splitlines()
        assert [json.loads(line) for line in lines] == [
            {"n": 1, "d": 2, "g": 2},
            {"n": 2, "d": 1, "g": 3},
            {"n": 3, "d": 2, "g": 5},
        ]

    def test_single_record(self):
        record = json.loads(emit({"lo": Fraction(3, 2), "hi": Fraction(2), "z0": 1.75}, "json"))
        assert record == {"lo": "3/2", "hi": 2, "z0": 1.75}

    def test_prime_stamp(self):
        first = json.loads(emit(_table(), "json", prime=7).splitlines()[0])
        assert first == {"field": "prime", "prime": 7}

    def test_none_and_unicode(self):
        record = json.loads(emit({"word": "ζ", "exponent": None}, "json"))
        assert record == {"word": "ζ", "exponent": None}


class TestTable:
    def test_contains_values(self):
        text = emit(_table(), "table")
        header = next(line for line in text.splitlines() if line.strip())
        assert header.split() == ["n", "d", "g"]
        for value in ("1", "2", "3", "5"):
            assert value in text

    def test_title_and_caption(self):
        text = emit(_table(), "table", prime=7, title="Witt dimensions")
        assert "Witt dimensions" in text
        assert "field: prime p=7" in text

    def test_markup_is_not_interpreted(self):
        text = emit([{"commutator": "[x,[x,y]]"}], "table")
        assert "[x,[x,y]]" in text

    def test_no_trailing_whitespace(self):
        text = emit(_table(), "table")
        assert all(line == line.rstrip() for line in text.splitlines())
