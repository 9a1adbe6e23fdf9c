import pytest

from piextract.errors import LexiconError
from piextract.lexicon import (Lexicon, expand_parentheticals,
                               expand_placeholders, intersect, load_lexicon,
                               make_entry, save_lexicon)

CANONICAL_NUT_VARIANTS = {
    "a tough nut",
    "a tough nut to crack",
    "a hard nut",
    "a hard nut to crack",
}


def write_lexicon(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_expand_parentheticals_canonical_example():
    got = expand_parentheticals("a tough (or hard) nut (to crack)")
    assert set(got) == CANONICAL_NUT_VARIANTS
    assert len(got) == 4


def test_expand_parentheticals_no_parens():
    assert expand_parentheticals("spill the beans") == ["spill the beans"]


def test_expand_parentheticals_optional_order():
    # inclusion-first, left-to-right
    assert expand_parentheticals("in (the) running") == ["in the running", "in running"]


def test_expand_parentheticals_combinatorics():
    # 2 optional groups x one 2-way alternation = 2^2 * 2 variants
    got = expand_parentheticals("(right) on (or off) the mark (today)")
    assert len(got) == 8


def test_expand_parentheticals_unbalanced():
    with pytest.raises(LexiconError):
        expand_parentheticals("a tough (or hard nut")
    with pytest.raises(LexiconError):
        expand_parentheticals("a tough or hard) nut")


def test_expand_parentheticals_exceptions_table():
    exceptions = {"odd (form": ["odd form", "very odd form"]}
    assert expand_parentheticals("odd (form", exceptions) == ["odd form", "very odd form"]


def test_load_collapses_duplicates(tmp_path):
    path = write_lexicon(tmp_path, "a.txt", ["spill the beans", "Spill the beans"])
    lex = load_lexicon(path, "t")
    assert len(lex) == 1


def test_load_drops_single_word(tmp_path):
    path = write_lexicon(tmp_path, "a.txt", ["nonplussed"])
    assert len(load_lexicon(path, "t")) == 0


def test_load_three_distinct(tmp_path):
    path = write_lexicon(tmp_path, "a.txt", ["spill the beans", "at sea", "jump ship"])
    lex = load_lexicon(path, "t")
    assert len(lex) == 3
    assert {e.id for e in lex} == {"spill_the_beans", "at_sea", "jump_ship"}


def test_load_empty_file(tmp_path):
    path = write_lexicon(tmp_path, "a.txt", [""])
    assert len(load_lexicon(path, "t")) == 0


def test_load_malformed_names_line(tmp_path):
    path = write_lexicon(tmp_path, "a.txt", ["ok entry", "a\tb\tc\td\te\tf"])
    with pytest.raises(LexiconError) as err:
        load_lexicon(path, "t")
    assert "line 2" in str(err.value)


def test_load_expands_parentheticals_into_entries(tmp_path):
    path = write_lexicon(tmp_path, "a.txt", ["a tough (or hard) nut (to crack)"])
    lex = load_lexicon(path, "t")
    assert {e.surface for e in lex} == CANONICAL_NUT_VARIANTS


def test_roundtrip_save_load(tmp_path, lexicon):
    out = tmp_path / "saved.tsv"
    save_lexicon(lexicon, out)
    again = load_lexicon(out, lexicon.name)
    assert again == lexicon
    # idempotence: one more cycle is byte-identical
    out2 = tmp_path / "saved2.tsv"
    save_lexicon(again, out2)
    assert out.read_text() == out2.read_text()


def test_placeholders_possessive_someone():
    entry = make_entry("x", "a thorn in someone's side", "t")
    variants = [v.surface for v in expand_placeholders(entry)]
    for pron in ("my", "your", "his", "her", "its", "our", "their"):
        assert "a thorn in %s side" % pron in variants
    assert "a thorn in —'s side" in variants
    assert len(variants) == 8
    assert all(v.parent_id == "x" for v in expand_placeholders(entry))


def test_placeholders_possessive_one_no_wildcard():
    entry = make_entry("x", "lose one's head", "t")
    variants = [v.surface for v in expand_placeholders(entry)]
    assert len(variants) == 7
    assert not any("—" in v for v in variants)


def test_placeholders_object_someone():
    entry = make_entry("x", "take someone to task", "t")
    variants = [v.surface for v in expand_placeholders(entry)]
    assert "take him to task" in variants
    assert "take — to task" in variants
    assert len(variants) == 8


def test_placeholders_any_word_passthrough():
    entry = make_entry("x", "the mother of all —", "t")
    variants = expand_placeholders(entry)
    assert len(variants) == 1
    assert variants[0].surface == entry.surface
    kinds = dict(entry.placeholders)
    assert kinds[4] == "ANY_WORD"


def test_placeholders_none():
    entry = make_entry("x", "spill the beans", "t")
    assert expand_placeholders(entry) == [entry]


def test_placeholders_bare_one_is_not_special():
    entry = make_entry("x", "one for the road", "t")
    assert entry.placeholders == ()


def test_placeholder_expansion_keeps_other_tokens():
    entry = make_entry("x", "a thorn in someone's side", "t")
    for v in expand_placeholders(entry):
        assert len(v.words) == len(entry.words)


def test_intersect_basic():
    a = Lexicon("A", [make_entry("1", "spill the beans", "A"),
                      make_entry("2", "at sea", "A")])
    b = Lexicon("B", [make_entry("3", "At Sea", "B"),
                      make_entry("4", "jump ship", "B")])
    got = intersect([a, b])
    assert [e.surface for e in got] == ["at sea"]
    assert got.size() == 1
    # order-insensitive
    rev = intersect([b, a])
    assert {e.norm_surface for e in rev} == {e.norm_surface for e in got}


def test_intersect_three_way():
    lexes = [
        Lexicon(n, [make_entry("%s%d" % (n, i), s, n) for i, s in enumerate(surfs)])
        for n, surfs in (
            ("A", ["x y", "shared one", "shared two"]),
            ("B", ["shared one", "shared two", "z w"]),
            ("C", ["shared two", "shared one", "q r"]),
        )
    ]
    got = intersect(lexes)
    assert {e.norm_surface for e in got} == {"shared one", "shared two"}
    assert all("|" in e.source or e.source for e in got)


def test_intersect_requires_two():
    with pytest.raises(LexiconError):
        intersect([Lexicon("A", [])])


def test_intersect_subset_property(lexicon):
    sub = Lexicon("sub", list(lexicon)[:5])
    got = intersect([lexicon, sub])
    surfaces = {e.norm_surface for e in lexicon}
    assert all(e.norm_surface in surfaces for e in got)
    assert len(got) == 5


def test_tagged_column_roundtrip(tmp_path):
    path = write_lexicon(
        tmp_path, "a.tsv",
        ["e1\tspill the beans\tsrc\tspill/VERB the/DET beans/NOUN"],
    )
    lex = load_lexicon(path, "t")
    entry = lex.get("e1")
    assert entry.is_tagged
    assert [w.pos for w in entry.words] == ["VERB", "DET", "NOUN"]


def test_tagged_column_mismatch_is_error(tmp_path):
    path = write_lexicon(tmp_path, "a.tsv", ["e1\tspill the beans\tsrc\tspill/VERB"])
    with pytest.raises(LexiconError):
        load_lexicon(path, "t")


def test_determiner_and_punct_flags():
    entry = make_entry("x", "day in, day out", "t")
    texts = [w.text for w in entry.words]
    assert texts == ["day", "in", ",", "day", "out"]
    assert entry.words[2].is_punct
    entry2 = make_entry("y", "the works", "t")
    assert entry2.words[0].is_determiner


def test_multiple_placeholders_cartesian():
    entry = make_entry("x", "give someone a piece of one's mind", "t")
    variants = expand_placeholders(entry)
    # 8 object fillers (7 pronouns + wildcard) x 7 possessive pronouns
    assert len(variants) == 56
    surfaces = {v.surface for v in variants}
    assert "give him a piece of my mind" in surfaces
    assert "give — a piece of their mind" in surfaces


def test_expand_parentheticals_size_property():
    import random

    rng = random.Random(5)
    for _ in range(100):
        optional = rng.randrange(0, 3)
        alts = rng.randrange(0, 2)
        arity = rng.randrange(2, 4)
        words = ["w%d" % i for i in range(3)]
        pieces = list(words)
        for k in range(optional):
            pieces.append("(opt%d x%d)" % (k, k))
        for k in range(alts):
            pieces.append("base%d" % k)
            pieces.append("(or " + " or ".join("alt%d%d" % (k, j) for j in range(arity - 1)) + ")")
        raw = " ".join(pieces)
        got = expand_parentheticals(raw)
        assert len(got) == (2 ** optional) * (arity ** alts), raw
        assert all("(" not in v and ")" not in v for v in got)
