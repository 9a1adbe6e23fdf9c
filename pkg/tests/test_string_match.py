import pytest

from oracles import oracle_string_matches
from piextract.errors import UntaggedEntryError
from piextract.lexicon import expand_placeholders, make_entry
from piextract.string_match import (EXACT, FUZZY, INFLECT, Extraction,
                                    MatchOptions, TokenSentence, exact_match,
                                    extract_corpus, fuzzy_match, inflect_match,
                                    match_entry)


def sent(tokens, doc="d", sid="1"):
    return TokenSentence(doc, sid, tokens.split() if isinstance(tokens, str) else tokens)


def spans(extractions):
    return [e.span for e in extractions]


def test_match_options_validation():
    with pytest.raises(ValueError):
        MatchOptions(max_intervening=4)
    with pytest.raises(ValueError):
        MatchOptions(mode="BOGUS")


def test_extraction_validation():
    with pytest.raises(ValueError):
        Extraction("d", "1", (3, 2), "e", "m")
    with pytest.raises(ValueError):
        Extraction("d", "1", (1, 2), "e", "")


def test_exact_word_boundaries():
    assert exact_match(sent("I saw that seawater"), ["at sea"], MatchOptions()) == []


def test_exact_hyphen_separators():
    got = exact_match(sent("the nuts-and-bolts approach"), ["nuts and bolts"], MatchOptions())
    assert spans(got) == [(2, 2)]


def test_exact_intervening_false_positive_mode():
    s = sent("you can have a smoke and go")
    assert exact_match(s, ["have a go"], MatchOptions(max_intervening=2)) != []
    assert exact_match(s, ["have a go"], MatchOptions(max_intervening=1)) == []


def test_exact_case_sensitivity():
    s = sent("carrying coals to newcastle")
    cs = MatchOptions(case_sensitive=True)
    ci = MatchOptions()
    assert exact_match(s, ["coals to Newcastle"], cs) == []
    assert spans(exact_match(s, ["coals to Newcastle"], ci)) == [(2, 4)]
    s2 = sent("carrying coals to Newcastle")
    assert spans(exact_match(s2, ["coals to Newcastle"], cs)) == [(2, 4)]


def test_fuzzy_suffix_window():
    assert spans(fuzzy_match(sent("he spilled wine"), ["spill wine"], MatchOptions())) == [(2, 3)]
    assert fuzzy_match(sent("the spillages grew"), ["spill"], MatchOptions()) == []
    assert spans(fuzzy_match(sent("we were at sea"), ["at sea"], MatchOptions())) == [(3, 4)]


def test_fuzzy_determiners_not_suffixed():
    # "the" must not fuzzily match "then"
    assert fuzzy_match(sent("then beans fell"), ["the beans"], MatchOptions()) == []


def test_inflect_matches_inflections(morph):
    entry = make_entry("stb", "spill the beans", "t", tags=["VERB", "DET", "NOUN"])
    assert spans(inflect_match(sent("He spills the beans"), entry, MatchOptions(), morph)) == [(2, 4)]
    assert inflect_match(sent("beans were spilled"), entry, MatchOptions(), morph) == []


def test_inflect_irregular(morph):
    entry = make_entry("rab", "ring a bell", "t", tags=["VERB", "DET", "NOUN"])
    assert spans(inflect_match(sent("it rang a bell"), entry, MatchOptions(), morph)) == [(2, 4)]


def test_inflect_requires_tags(morph):
    entry = make_entry("stb", "spill the beans", "t")
    with pytest.raises(UntaggedEntryError):
        inflect_match(sent("He spills the beans"), entry, MatchOptions(), morph)


def test_inflect_equals_exact_over_variant_forms(morph, lexicon):
    """inflect == union of exact runs over variant_forms."""
    sentences = [
        sent("He spills the beans daily", sid="1"),
        sent("she rang a bell twice", sid="2"),
        sent("they took the plunges", sid="3"),
        sent("the dogs were called off", sid="4"),
    ]
    for opts in (MatchOptions(0, False, INFLECT), MatchOptions(2, False, INFLECT)):
        for entry in lexicon:
            for s in sentences:
                direct = {
                    e.span for e in match_entry(s, entry, opts, morph)
                }
                via_variants = set()
                for variant in expand_placeholders(entry):
                    forms = morph.variant_forms(variant)
                    exact_opts = MatchOptions(opts.max_intervening, opts.case_sensitive, EXACT)
                    via_variants |= {e.span for e in exact_match(s, forms, exact_opts)}
                assert direct == via_variants, (entry.id, s)


def test_possessive_wildcard_both_tokenizations():
    entry = make_entry("th", "a thorn in someone's side", "t")
    joined = sent("a thorn in Google's side")
    split = sent(["a", "thorn", "in", "Google", "'s", "side"])
    assert spans(match_entry(joined, entry, MatchOptions())) == [(1, 5)]
    assert spans(match_entry(split, entry, MatchOptions())) == [(1, 6)]


def test_possessive_pronoun_variants():
    entry = make_entry("th", "a thorn in someone's side", "t")
    assert match_entry(sent("a thorn in their side"), entry, MatchOptions()) != []
    assert match_entry(sent("a thorn in the side"), entry, MatchOptions()) == []


def test_any_wildcard():
    entry = make_entry("mo", "the mother of all —", "t")
    assert spans(match_entry(sent("the mother of all battles"), entry, MatchOptions())) == [(1, 5)]
    assert match_entry(sent("the mother of all"), entry, MatchOptions()) == []


def test_literal_possessive_word():
    entry = make_entry("bk", "the bee's knees", "t")
    assert match_entry(sent("it was the bee's knees"), entry, MatchOptions()) != []
    assert match_entry(sent(["it", "was", "the", "bee", "'s", "knees"]), entry,
                       MatchOptions()) != []


def test_multiple_spans_all_emitted():
    got = exact_match(sent("at sea and at sea again"), ["at sea"], MatchOptions())
    assert spans(got) == [(1, 2), (4, 5)]


def test_deterministic_ordering(corpus, lexicon, morph):
    opts = MatchOptions(1, False, EXACT)
    a = extract_corpus(corpus, lexicon, opts)
    b = extract_corpus(corpus, lexicon, opts)
    assert a == b
    assert a == sorted(a, key=Extraction.sort_key)


# ---------------------------------------------------------------- oracle

def _all_option_combos():
    for mode in (EXACT, FUZZY, INFLECT):
        for gap in range(4):
            for cs in (False, True):
                yield MatchOptions(gap, cs, mode)


def test_oracle_equivalence_fixture_corpus(corpus, lexicon, morph):
    """Every matcher equals brute force on every option combination."""
    for opts in _all_option_combos():
        for entry in lexicon:
            variants = expand_placeholders(entry)
            for s in corpus:
                got = {e.span for e in match_entry(s, entry, opts, morph)}
                expected = set()
                for v in variants:
                    for span in oracle_string_matches(
                        s.surfaces, v.words, opts.mode, opts.case_sensitive,
                        opts.max_intervening, morph,
                    ):
                        expected.add(span)
                assert got == expected, (entry.id, s.sentence_id, opts)


def test_gap_monotonicity(corpus, lexicon, morph):
    for mode in (EXACT, FUZZY, INFLECT):
        previous = None
        for gap in range(4):
            opts = MatchOptions(gap, False, mode)
            found = {e.key() + e.span for e in extract_corpus(corpus, lexicon, opts, morph)}
            if previous is not None:
                assert previous <= found
            previous = found


def test_mode_containment(corpus, lexicon, morph):
    for gap in range(2):
        for cs in (False, True):
            exact = {e.key() + e.span for e in extract_corpus(
                corpus, lexicon, MatchOptions(gap, cs, EXACT))}
            fuzzy = {e.key() + e.span for e in extract_corpus(
                corpus, lexicon, MatchOptions(gap, cs, FUZZY))}
            inflect = {e.key() + e.span for e in extract_corpus(
                corpus, lexicon, MatchOptions(gap, cs, INFLECT), morph)}
            assert exact <= fuzzy
            assert exact <= inflect


def test_case_containment(corpus, lexicon, morph):
    for mode in (EXACT, FUZZY, INFLECT):
        sensitive = {e.key() + e.span for e in extract_corpus(
            corpus, lexicon, MatchOptions(1, True, mode), morph)}
        insensitive = {e.key() + e.span for e in extract_corpus(
            corpus, lexicon, MatchOptions(1, False, mode), morph)}
        assert sensitive <= insensitive
