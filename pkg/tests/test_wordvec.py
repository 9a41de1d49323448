"""Word-vector table loading and similarity lookup."""

import math

import pytest

from gesticon.errors import EmptyTable, InconsistentDimension, MalformedLine, OutOfVocabulary
from gesticon.wordvec import load_table, loads_table, word_similarity


class TestLoad:
    def test_two_line_file(self):
        table = loads_table("alpha 1 0 0\nbeta 0 1 0\n")
        assert len(table) == 2
        assert table.dimension == 3

    def test_tokens_lowercased(self):
        table = loads_table("Alpha 1 0\n")
        assert "alpha" in table
        assert table.vector("ALPHA") == (1.0, 0.0)

    def test_later_duplicates_overwrite(self):
        table = loads_table("alpha 1 0\nalpha 0 1\n")
        assert table.vector("alpha") == (0.0, 1.0)

    def test_mixed_dimensions(self):
        with pytest.raises(InconsistentDimension):
            loads_table("alpha 1 0 0\nbeta 0 1\n")

    def test_empty_file(self):
        with pytest.raises(EmptyTable):
            loads_table("")

    def test_token_without_values(self):
        with pytest.raises(MalformedLine):
            loads_table("alpha\n")

    def test_non_numeric_value(self):
        with pytest.raises(MalformedLine):
            loads_table("alpha one two\n")

    def test_scientific_notation(self):
        table = loads_table("alpha 1e-3 -2.5E2\n")
        assert table.vector("alpha") == (0.001, -250.0)

    def test_blank_lines_skipped(self):
        table = loads_table("alpha 1 0\n\nbeta 0 1\n")
        assert len(table) == 2

    def test_load_from_path(self, tmp_path):
        path = tmp_path / "vecs.txt"
        path.write_text("alpha 1 2\ngamma 2 3\n", encoding="utf-8")
        assert len(load_table(path)) == 2


class TestSimilarity:
    def test_self_similarity(self):
        table = loads_table("alpha 1 2 3\n")
        assert word_similarity(table, "alpha", "alpha") == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_fixture(self):
        table = loads_table("alpha 1 0\nbeta 0 1\n")
        assert word_similarity(table, "alpha", "beta") == 0.0

    def test_hand_computed_value(self):
        table = loads_table("alpha 1 2\ngamma 2 3\n")
        expected = 8.0 / math.sqrt(65.0)
        assert word_similarity(table, "alpha", "gamma") == pytest.approx(expected, abs=1e-15)
        assert word_similarity(table, "alpha", "gamma") == pytest.approx(0.99228, abs=1e-5)

    def test_out_of_vocabulary_names_the_word(self):
        table = loads_table("alpha 1 0\n")
        with pytest.raises(OutOfVocabulary) as err:
            word_similarity(table, "alpha", "missing")
        assert err.value.word == "missing"

    def test_case_insensitive_queries(self):
        table = loads_table("alpha 1 2\ngamma 2 3\n")
        assert word_similarity(table, "Alpha", "GAMMA") == word_similarity(table, "alpha", "gamma")

    def test_symmetric(self):
        table = loads_table("alpha 1 2\ngamma 2 3\n")
        assert word_similarity(table, "alpha", "gamma") == word_similarity(table, "gamma", "alpha")
