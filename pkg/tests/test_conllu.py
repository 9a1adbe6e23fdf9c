import pytest

from piextract.conllu import load_conllu, write_conllu
from piextract.errors import ConlluError


def write(tmp_path, text, name="t.conllu"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_empty_file(tmp_path):
    assert load_conllu(write(tmp_path, "")) == []


def test_jump_ship_reference_parse(tmp_path):
    text = (
        "# sent_id = js\n"
        "1\tjump\tjump\tVERB\t_\t_\t2\tcompound\t_\t_\n"
        "2\tship\tship\tNOUN\t_\t_\t0\troot\t_\t_\n\n"
    )
    sents = load_conllu(write(tmp_path, text))
    assert len(sents) == 1
    s = sents[0]
    assert s.sentence_id == "js"
    assert [t.head for t in s.tokens] == [2, 0]
    assert s.tokens[0].deprel == "compound"


def test_wrong_column_count_names_line(tmp_path):
    text = (
        "1\ta\ta\tDET\t_\t_\t2\tdet\t_\t_\n"
        "2\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n"
        "3\tbarks\tbark\tVERB\t_\t_\t2\tdep\t_\n"
    )
    with pytest.raises(ConlluError) as err:
        load_conllu(write(tmp_path, text))
    assert ":3" in str(err.value)


def test_cycle_detected(tmp_path):
    text = (
        "# sent_id = bad\n"
        "1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n"
        "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n"
        "3\tc\tc\tX\t_\t_\t0\troot\t_\t_\n\n"
    )
    with pytest.raises(ConlluError) as err:
        load_conllu(write(tmp_path, text))
    assert "bad" in str(err.value)


def test_head_out_of_range(tmp_path):
    text = "1\ta\ta\tX\t_\t_\t5\tdep\t_\t_\n"
    with pytest.raises(ConlluError):
        load_conllu(write(tmp_path, text))


def test_two_roots_rejected(tmp_path):
    text = (
        "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n"
        "2\tb\tb\tX\t_\t_\t0\troot\t_\t_\n"
    )
    with pytest.raises(ConlluError):
        load_conllu(write(tmp_path, text))


def test_multiword_ranges_and_empty_nodes_skipped(tmp_path):
    text = (
        "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "1\tdo\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
        "2\tnot\tnot\tPART\t_\t_\t3\tneg\t_\t_\n"
        "2.1\tghost\tghost\tX\t_\t_\t_\t_\t_\t_\n"
        "3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n"
    )
    sents = load_conllu(write(tmp_path, text))
    assert [t.surface for t in sents[0].tokens] == ["do", "not", "go"]


def test_doc_and_sent_ids_from_metadata(tmp_path):
    text = (
        "# newdoc id = mydoc\n"
        "# sent_id = 42\n"
        "1\thi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n\n"
        "1\tyo\tyo\tINTJ\t_\t_\t0\troot\t_\t_\n\n"
    )
    sents = load_conllu(write(tmp_path, text))
    assert sents[0].document_id == "mydoc"
    assert sents[0].sentence_id == "42"
    assert sents[1].sentence_id == "2"  # sequential fallback


def test_roundtrip(tmp_path, corpus):
    out = tmp_path / "round.conllu"
    write_conllu(corpus, out)
    again = load_conllu(out)
    assert [s.sentence_id for s in again] == [s.sentence_id for s in corpus]
    for a, b in zip(again, corpus):
        assert a.tokens == b.tokens
        assert a.document_id == b.document_id


def test_fixture_corpus_shape(corpus):
    assert len(corpus) >= 50
    assert len({s.document_id for s in corpus}) == 3
