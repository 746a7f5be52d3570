import os

import pytest

from boolean_network import BooleanNetwork, Digraph, Word
from network_io import (
    parse_network,
    emit_network,
    parse_digraph,
    emit_digraph,
    parse_word,
    format_word,
    read_network,
    read_digraph,
    sanitize_filename,
    save_to_file,
    export_dot,
)
from fixing_core import ParseError


def _parse_error(text, parser=parse_network):
    with pytest.raises(ParseError) as info:
        parser(text)
    return info.value


class TestNetworkForms:
    def test_samples_agree(self, example3, sample_path):
        assert read_network(sample_path("example3.bn")) == example3
        assert read_network(sample_path("example3_table.bn")) == example3

    def test_unicode_operators(self, example3):
        text = "f1 = x1 ∧ x2 ∧ x3\nf2 = x1 ∧ ¬x3\nf3 = x2 ∧ ¬x1\n"
        assert parse_network(text) == example3

    def test_or_and_constants(self):
        f = parse_network("f1 = x1 | !(x2)\nf2 = 0\n")
        assert f.table(1).tolist() == [1, 0, 1, 1]
        assert f.table(2).tolist() == [0, 0, 0, 0]
        assert parse_network("f1 = 1") == BooleanNetwork.constant(1, "1")

    @pytest.mark.parametrize("form", ["table", "formula"])
    def test_emit_then_parse(self, example3, form):
        assert parse_network(emit_network(example3, form)) == example3
        constant = BooleanNetwork.constant(2, "10")
        assert parse_network(emit_network(constant, form)) == constant

    def test_formula_emits_minterms(self, negation):
        assert emit_network(negation, "formula") == "f1 = (!x1)\n"

    def test_unknown_form(self, example3):
        with pytest.raises(ValueError):
            emit_network(example3, "json")


class TestNetworkErrors:
    def test_dangling_operator(self):
        error = _parse_error("f1 = x1 &")
        assert (error.line, error.column) == (1, 10)
        assert "end of formula" in error.message

    def test_unexpected_character(self):
        error = _parse_error("f1 = x1 $ x1")
        assert (error.line, error.column) == (1, 9)

    def test_variable_out_of_range(self):
        error = _parse_error("# header comment\nf1 = x4")
        assert (error.line, error.column) == (2, 6)

    def test_missing_parenthesis(self):
        assert "')'" in _parse_error("f1 = (x1 & 1").message

    def test_defined_twice(self):
        error = _parse_error("f1 = x1\nf1 = 0")
        assert error.line == 2
        assert "twice" in error.message

    def test_undefined_component(self):
        assert "undefined component f1" in _parse_error("f2 = x1").message

    def test_table_row_order(self):
        error = _parse_error("n 1\n1 0\n0 1\n")
        assert error.line == 2
        assert "expected the row for 0" in error.message

    def test_table_missing_row(self):
        assert "missing state row 10" in _parse_error("n 2\n00 00\n01 01\n").message

    def test_table_bad_state(self):
        error = _parse_error("n 2\n00 0x\n")
        assert (error.line, error.column) == (2, 4)

    def test_bad_header(self):
        assert _parse_error("n two\n").line == 1

    def test_empty(self):
        assert "empty" in _parse_error("# nothing here\n").message


class TestDigraphs:
    def test_samples(self, sample_path, path3, triangle):
        assert read_digraph(sample_path("path3.dg")) == path3
        assert read_digraph(sample_path("triangle.dg")) == triangle

    def test_emit_then_parse(self, triangle):
        assert parse_digraph(emit_digraph(triangle)) == triangle
        assert parse_digraph(emit_digraph(Digraph(2))) == Digraph(2)

    def test_vertex_out_of_range(self):
        error = _parse_error("n 2\n1 3\n", parse_digraph)
        assert (error.line, error.column) == (2, 3)
        assert "out of range [1, 2]" in error.message

    def test_duplicate_arc(self):
        error = _parse_error("n 2\n1 2\n1 2\n", parse_digraph)
        assert error.line == 3
        assert "duplicate arc" in error.message

    def test_malformed_arc(self):
        assert _parse_error("n 2\n1\n", parse_digraph).line == 2


class TestWords:
    @pytest.mark.parametrize("text, expected", [
        ("1 2 3 1", (1, 2, 3, 1)),
        ("1,2,3", (1, 2, 3)),
        ("1231", (1, 2, 3, 1)),
        ("ε", ()),
        ("10 2", (10, 2)),
    ])
    def test_parse(self, text, expected):
        assert parse_word(text) == Word(expected)

    def test_parse_error(self):
        with pytest.raises(ParseError):
            parse_word("1 x")

    def test_format(self):
        assert format_word(Word.parse("1231")) == "1 2 3 1"
        assert format_word(Word.parse("1231"), compact=True) == "1231"
        assert format_word(Word(), compact=True) == "ε"
        assert format_word(Word.of(12, 1), compact=True) == "12 1"


class TestSaving:
    def test_sanitize(self):
        assert sanitize_filename('my net?:"v1"') == "my_netv1"

    def test_save(self, tmp_path, example3):
        path = save_to_file("example three", "bn", emit_network(example3), directory=str(tmp_path))
        assert os.path.basename(path) == "example_three.bn"
        assert read_network(path) == example3


class TestDot:
    @staticmethod
    def _counts(text):
        lines = text.splitlines()
        nodes = [line for line in lines if "[shape=" in line]
        arcs = [line for line in lines if "->" in line]
        return len(nodes), len(arcs)

    def test_async(self, example3):
        text = export_dot(example3, "async")
        assert text.startswith('digraph "async" {')
        assert self._counts(text) == (8, 11)
        assert text.count("doublecircle") == 1
        assert '"010" -> "011" [label="3"];' in text

    def test_interaction(self, example3):
        assert self._counts(export_dot(example3, "interaction")) == (3, 7)

    def test_digraph(self):
        assert self._counts(export_dot(Digraph(1))) == (1, 0)

    def test_unknown_kind(self, example3):
        with pytest.raises(ValueError):
            export_dot(example3, "sync")
