import pytest

from piextract.errors import InputError
from piextract.example_index import ExampleIndex
from piextract.tokens import inside_quotes, quoted_spans, simple_tokenize


def test_build_and_reopen(tmp_path):
    src = tmp_path / "sentences.txt"
    src.write_text("the cat sat on the mat\na dog ran\nthe cat ran fast\n")
    built = ExampleIndex.build(src, tmp_path / "idx")
    reopened = ExampleIndex.open(tmp_path / "idx")
    for index in (built, reopened):
        assert [i for i, _ in index.find_occurrences(["the", "cat"])] == [1, 3]
        assert index.find_occurrences(["dog", "ran"]) == [(2, 1)]
        assert index.find_occurrences(["cat", "dog"]) == []
        assert index.find_occurrences(["zebra"]) == []


def test_occurrence_positions(tmp_path):
    src = tmp_path / "s.txt"
    src.write_text("at sea and at sea again\n")
    index = ExampleIndex.build(src, tmp_path / "idx")
    assert index.find_occurrences(["at", "sea"]) == [(1, 0), (1, 3)]


def test_case_insensitive_lookup(tmp_path):
    src = tmp_path / "s.txt"
    src.write_text("Jump Ship now\n")
    index = ExampleIndex.build(src, tmp_path / "idx")
    assert index.find_occurrences(["jump", "ship"]) == [(1, 0)]


def test_open_missing_dir(tmp_path):
    with pytest.raises(InputError):
        ExampleIndex.open(tmp_path / "missing")


def test_fixture_index(fixtures_dir):
    index = ExampleIndex.open(fixtures_dir / "examples_idx")
    hits = index.find_occurrences(["jump", "ship"])
    assert [i for i, _ in hits] == [1, 2, 5]


def test_quote_detection():
    toks = simple_tokenize('"jump ship" indeed.')
    assert quoted_spans(toks) == [(0, 3)]
    assert inside_quotes(toks, 1, 2)
    assert not inside_quotes(toks, 4, 4)


def test_typographic_quotes():
    toks = ["“", "spill", "the", "beans", "”", "is", "an", "idiom"]
    assert inside_quotes(toks, 1, 3)
    assert not inside_quotes(toks, 5, 7)


def test_unmatched_quote_ignored():
    toks = ["he", "said", '"', "jump", "ship"]
    assert not inside_quotes(toks, 3, 4)
