"""Adapter acceptance: everything it emits loads cleanly in the extractor.

The primary package is imported here only to VALIDATE the emitted files;
the production contract between the two packages is files alone.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "adapter" / "src"))

from pieadapter.backends import RuleBackend, get_backend
from pieadapter.cli import main as adapter_main
from pieadapter import jobs

from piextract.conllu import load_conllu
from piextract.lexicon import load_lexicon
from piextract.morphology import Morphology

FIXTURE_LEXICON = ROOT / "tests" / "fixtures" / "lexicon_small.tsv"


@pytest.fixture()
def backend():
    return RuleBackend()


def run(*argv):
    return adapter_main([str(a) for a in argv])


def test_tag_patterns(backend):
    """The two canonical syntactic patterns come out right."""
    assert [u for _, u in backend.tag(["take", "the", "plunge"])] == \
        ["VERB", "DET", "NOUN"]
    assert [u for _, u in backend.tag(["in", "a", "nutshell"])] == \
        ["ADP", "DET", "NOUN"]


def test_parse_simple_sentence(backend):
    rows = backend.parse("you just lose the plot completely".split())
    by_surface = {r[0]: r for r in rows}
    assert by_surface["lose"][4] == "root"
    assert by_surface["plot"][3] == 3  # dobj of lose (token 3)
    assert by_surface["plot"][4] == "dobj"
    assert by_surface["the"][4] == "det"


def test_parse_passive(backend):
    rows = backend.parse("ships were jumped".split())
    assert [r[4] for r in rows] == ["nsubjpass", "auxpass", "root"]
    assert rows[1][1] == "be"


def test_corpus_mode_validates(tmp_path, backend):
    src = tmp_path / "sentences.txt"
    src.write_text(
        "you might just lose the plot completely\n"
        "Did they jump ship at Lima?\n"
        "the commission will be a laughing stock\n")
    out = tmp_path / "corpus.conllu"
    assert run("--mode", "corpus", "--in", src, "--out", out, "--doc-id", "demo") == 0
    sentences = load_conllu(out)
    assert len(sentences) == 3  # count preserved
    assert sentences[0].document_id == "demo"
    assert {t.deprel for t in sentences[0].tokens} >= {"root", "dobj", "det"}


def test_corpus_mode_empty_input(tmp_path):
    src = tmp_path / "empty.txt"
    src.write_text("")
    out = tmp_path / "corpus.conllu"
    assert run("--mode", "corpus", "--in", src, "--out", out) == 0
    assert load_conllu(out) == []
    assert out.read_text().startswith("#")


def test_pies_mode_validates_and_flags_fillers(tmp_path):
    out = tmp_path / "pies.conllu"
    assert run("--mode", "pies", "--in", FIXTURE_LEXICON, "--out", out) == 0
    parses = load_conllu(out)
    fixture = load_lexicon(FIXTURE_LEXICON, "fixture")
    assert len(parses) == len(fixture)
    by_entry = {p.meta["entry_id"]: p for p in parses}
    assert set(by_entry) == {e.id for e in fixture}
    mother = by_entry["the_mother_of_all"]
    assert mother.meta.get("pie_fillers") == "5"
    assert mother.tokens[4].surface == "fine"
    too = by_entry["too_for_words"]
    assert too.meta.get("pie_fillers") == "2"


def test_pies_mode_empty_lexicon(tmp_path):
    src = tmp_path / "lex.tsv"
    src.write_text("# empty\n")
    out = tmp_path / "pies.conllu"
    assert run("--mode", "pies", "--in", src, "--out", out) == 0
    assert load_conllu(out) == []


def test_in_context_mode_keys_by_sentence_id(tmp_path):
    sel = tmp_path / "selected.tsv"
    sel.write_text(
        "# entry_id\tsent_id\tsentence\n"
        "jump_ship\t1\tDid they jump ship at Lima?\n"
        "rub_shoulders\t3\tEach day they rub shoulders with death.\n")
    out = tmp_path / "parses.conllu"
    assert run("--mode", "in-context", "--in", sel, "--out", out) == 0
    parses = load_conllu(out)
    assert [p.sentence_id for p in parses] == ["1", "3"]
    js = parses[0]
    jump = next(t for t in js.tokens if t.surface == "jump")
    ship = next(t for t in js.tokens if t.surface == "ship")
    assert jump.head == 0 and ship.head == jump.index and ship.deprel == "dobj"


def test_tag_mode_roundtrips_through_lexicon_loader(tmp_path):
    raw = tmp_path / "raw.txt"
    raw.write_text("take the plunge\nin a nutshell\nspill the beans\n")
    out = tmp_path / "tagged.tsv"
    assert run("--mode", "tag", "--in", raw, "--out", out) == 0
    lex = load_lexicon(out, "tagged")
    assert len(lex) == 3
    assert all(e.is_tagged for e in lex)
    plunge = lex.get("take_the_plunge")
    assert [w.pos for w in plunge.words] == ["VERB", "DET", "NOUN"]
    nutshell = lex.get("in_a_nutshell")
    assert [w.pos for w in nutshell.words] == ["ADP", "DET", "NOUN"]
    # tagged entries inflect cleanly
    morph = Morphology()
    assert "took the plunge" in morph.variant_forms(plunge)


def test_tag_mode_corrections_win(tmp_path):
    raw = tmp_path / "raw.txt"
    raw.write_text("on the make\n")
    fix = tmp_path / "fix.tsv"
    fix.write_text("on_the_make\ton/ADP the/DET make/NOUN\n")
    out = tmp_path / "tagged.tsv"
    assert run("--mode", "tag", "--in", raw, "--out", out,
               "--corrections", fix) == 0
    lex = load_lexicon(out, "t")
    assert [w.pos for w in lex.get("on_the_make").words] == ["ADP", "DET", "NOUN"]


def test_reproducible_byte_identical(tmp_path):
    outs = []
    for k in (1, 2):
        out = tmp_path / ("pies%d.conllu" % k)
        assert run("--mode", "pies", "--in", FIXTURE_LEXICON, "--out", out) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_whole_fixture_lexicon_parses_validate(tmp_path):
    """Secondary acceptance: zero validation errors across all entries."""
    big = ROOT / "tests" / "fixtures" / "lexicon_591.tsv"
    out = tmp_path / "pies591.conllu"
    assert run("--mode", "pies", "--in", big, "--out", out) == 0
    parses = load_conllu(out)  # raises on any invalid tree
    assert len(parses) == 591


def test_end_to_end_pipeline_through_files(tmp_path):
    """adapter output -> extractor CLI, nothing shared but the files."""
    from piextract.cli import main as piextract_main

    raw_lexicon = tmp_path / "raw_lexicon.txt"
    raw_lexicon.write_text("spill the beans\njump ship\nin a nutshell\n")
    sentences = tmp_path / "sentences.txt"
    sentences.write_text(
        "He spilled the beans yesterday\n"
        "In a nutshell the plan failed\n"
        "Nothing interesting here\n")

    tagged = tmp_path / "tagged.tsv"
    corpus = tmp_path / "corpus.conllu"
    pies = tmp_path / "pies.conllu"
    assert run("--mode", "tag", "--in", raw_lexicon, "--out", tagged) == 0
    assert run("--mode", "corpus", "--in", sentences, "--out", corpus) == 0
    assert run("--mode", "pies", "--in", tagged, "--out", pies) == 0

    for method, extra in (
        ("inflect", ["--intervening", "1"]),
        ("parse", ["--pie-parses", str(pies)]),
    ):
        out = tmp_path / ("%s.tsv" % method)
        assert piextract_main(
            ["extract", "--method", method, "--corpus", str(corpus),
             "--lexicon", str(tagged), "--jobs", "1", "--out", str(out)]
            + extra) == 0
        body = out.read_text()
        assert "spill_the_beans" in body
        assert "in_a_nutshell" in body


def test_unknown_backend(tmp_path):
    src = tmp_path / "x.txt"
    src.write_text("hello world\n")
    assert run("--mode", "corpus", "--in", src, "--out", tmp_path / "o",
               "--backend", "bogus") == 1


def test_backend_selection():
    assert get_backend("rules").name == "rules"
    assert get_backend(None).name == "rules"
