import pytest

from conftest import get_sentence
from piextract.candidates import extract_candidates, render_annotation_sheet
from piextract.errors import GoldFileError, UntaggedEntryError
from piextract.lexicon import Lexicon, make_entry
from piextract.string_match import TokenSentence


def one_entry_lexicon(entry):
    return Lexicon("t", [entry])


def sent(tokens, doc="d", sid="1"):
    return TokenSentence(doc, sid, tokens.split())


ITR = make_entry("in_the_running", "in the running", "t", tags=["ADP", "DET", "NOUN"])
STB = make_entry("spill_the_beans", "spill the beans", "t", tags=["VERB", "DET", "NOUN"])


def test_example9_accepted(morph):
    s = sent("a change in the everyday running of your life")
    got = extract_candidates([s], one_entry_lexicon(ITR), morph)
    assert len(got) == 1
    cand = got[0]
    assert cand.positions == (3, 4, 6)  # in, the, running
    assert "gap<=3" in cand.restrictions and "ordered" in cand.restrictions


def test_example10_rejected(morph):
    s = sent("he hung around near the goal or in the box for that matter "
             "instead of running all over the show")
    got = extract_candidates([s], one_entry_lexicon(ITR), morph)
    assert got == []


def test_verb_entry_allows_reordering(morph):
    s = sent("the beans were spilled by John")
    got = extract_candidates([s], one_entry_lexicon(STB), morph)
    assert len(got) == 1
    assert got[0].restrictions == ()
    assert got[0].positions == (1, 2, 4)  # the (opportunistic), beans, spilled


def test_no_verb_requires_order(morph):
    entry = make_entry("otm", "on the make", "t", tags=["ADP", "DET", "NOUN"])
    ok = sent("he was on the make again")
    swapped = sent("the make was on again")
    assert len(extract_candidates([ok], one_entry_lexicon(entry), morph)) == 1
    assert extract_candidates([swapped], one_entry_lexicon(entry), morph) == []


def test_inflectional_forms_match(morph):
    s = sent("he spills every bean he hears")
    got = extract_candidates([s], one_entry_lexicon(STB), morph)
    assert len(got) == 1


def test_gap_limit_only_for_prep_det_noun_shape(morph):
    # verb entry: unlimited distance is fine
    s = sent("spill it all right now or forever keep those tasty beans")
    got = extract_candidates([s], one_entry_lexicon(STB), morph)
    assert len(got) == 1


def test_untagged_lexicon_is_error(morph):
    entry = make_entry("x", "spill the beans", "t")
    with pytest.raises(UntaggedEntryError):
        extract_candidates([sent("whatever")], one_entry_lexicon(entry), morph)


def test_one_candidate_per_entry_sentence(morph):
    s = sent("at sea and at sea again")
    entry = make_entry("at_sea", "at sea", "t", tags=["ADP", "NOUN"])
    got = extract_candidates([s], one_entry_lexicon(entry), morph)
    assert len(got) == 1


def test_candidates_cover_matcher_recall(corpus, lexicon, morph):
    """High-recall superset: whatever the string matchers find in order,
    candidates find too (modulo the Restriction-2 gap bound)."""
    from piextract.string_match import MatchOptions, extract_corpus

    cands = {(c.document_id, c.sentence_id, c.entry_id)
             for c in extract_candidates(corpus, lexicon, morph)}
    for opts in (MatchOptions(0, False, "EXACT"), MatchOptions(3, False, "INFLECT")):
        for e in extract_corpus(corpus, lexicon, opts, morph):
            key = e.key()
            entry = lexicon.get(e.entry_id)
            tags = [w.pos for w in entry.words if not w.is_punct]
            gap_limited = ("VERB" not in tags and tags.count("NOUN") == 1
                           and set(t for t in tags if t) <= {"ADP", "DET", "NOUN"})
            if gap_limited and opts.max_intervening > 3:
                continue
            assert key in cands, (key, opts)


def test_candidate_count_nonincreasing_with_restrictions(corpus, lexicon, morph):
    """Restrictions only remove candidates: orderable/verby entries keep all."""
    got = extract_candidates(corpus, lexicon, morph)
    by_entry = {}
    for c in got:
        by_entry.setdefault(c.entry_id, 0)
        by_entry[c.entry_id] += 1
    # every restricted candidate also satisfies the unrestricted contract:
    # all defining words present
    from piextract.tokens import split_hyphenated

    for c in got:
        entry = lexicon.get(c.entry_id)
        sentence = get_sentence(corpus, c.document_id, c.sentence_id)
        toks = [p for t in sentence.surfaces for p in split_hyphenated(t.lower())]
        for w in entry.content_words():
            if w.is_determiner or w.text.lower() in ("someone's", "—"):
                continue
            forms = {w.text.lower()}
            if w.pos in ("NOUN", "VERB") and not w.text.lower().endswith("'s"):
                forms = morph.generate(
                    morph.analyze(w.text.lower(), w.pos), w.pos).forms | forms
            assert any(t in forms for t in toks), (c.entry_id, w.text)


def test_render_sheet(tmp_path, corpus, lexicon, morph):
    cands = extract_candidates(corpus, lexicon, morph)
    out = tmp_path / "sheet.tsv"
    render_annotation_sheet(cands, corpus, out, lexicon)
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("#")
    assert len(lines) == len(cands) + 1
    # marked tokens wrapped, label columns blank
    row = lines[1].split("\t")
    assert row[5] == "" and row[6] == ""
    assert "**" in row[4]


def test_render_sheet_empty(tmp_path):
    out = tmp_path / "sheet.tsv"
    render_annotation_sheet([], [], out)
    assert out.read_text(encoding="utf-8").startswith("#")


def test_render_sheet_dangling_reference(tmp_path, corpus, lexicon, morph):
    cands = extract_candidates(corpus, lexicon, morph)
    with pytest.raises(GoldFileError):
        render_annotation_sheet(cands, corpus[:1], tmp_path / "x.tsv", lexicon)


def test_restrictions_only_remove_candidates(corpus, lexicon, morph):
    """Candidate count is non-increasing as the noise limits switch on."""
    restricted = {(c.document_id, c.sentence_id, c.entry_id)
                  for c in extract_candidates(corpus, lexicon, morph)}
    unrestricted = {(c.document_id, c.sentence_id, c.entry_id)
                    for c in extract_candidates(corpus, lexicon, morph,
                                                apply_restrictions=False)}
    assert restricted <= unrestricted
    assert len(restricted) < len(unrestricted)  # Example-10 style noise exists
