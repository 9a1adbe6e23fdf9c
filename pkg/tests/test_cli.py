import itertools
import json

import pytest

from piextract.cli import main

FIX = None  # set in fixture


@pytest.fixture()
def env(tmp_path, fixtures_dir):
    """Working dir with fixture inputs copied in."""
    paths = {
        "corpus": fixtures_dir / "corpus_small.conllu",
        "lexicon": fixtures_dir / "lexicon_small.tsv",
        "pies": fixtures_dir / "pie_parses.conllu",
        "gold": fixtures_dir / "gold_small.tsv",
        "idx": fixtures_dir / "examples_idx",
        "tmp": tmp_path,
    }
    return paths


def run(*argv):
    return main([str(a) for a in argv])


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


def test_lexicon_build_and_determinism(env, tmp_path):
    raw = tmp_path / "raw.txt"
    raw.write_text("spill the beans\nnonplussed\nin (the) running\n")
    out1, out2 = tmp_path / "a.tsv", tmp_path / "b.tsv"
    assert run("lexicon", "--in", raw, "--source", "demo", "--out", out1) == 0
    assert run("lexicon", "--in", raw, "--source", "demo", "--out", out2) == 0
    assert read(out1) == read(out2)
    body = out1.read_text()
    assert "nonplussed" not in body
    assert "in the running" in body and "in running" in body


def test_lexicon_intersect(env, tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("spill the beans\nat sea\n")
    b.write_text("At Sea\njump ship\n")
    out = tmp_path / "i.tsv"
    assert run("lexicon", "--in", a, "--in", b, "--intersect", "--out", out) == 0
    assert "at sea" in out.read_text()
    assert "beans" not in out.read_text()
    # multiple inputs without --intersect is a usage error
    assert run("lexicon", "--in", a, "--in", b, "--out", out) == 1


def test_lexicon_expand_placeholders(env, tmp_path):
    raw = tmp_path / "raw.txt"
    raw.write_text("a thorn in someone's side\n")
    out = tmp_path / "x.tsv"
    assert run("lexicon", "--in", raw, "--expand-placeholders", "--out", out) == 0
    body = out.read_text()
    assert "a thorn in my side" in body
    assert "—'s side" in body


def test_overlap_outputs(env, tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("spill the beans\nat sea\neasy as ABC\n")
    b.write_text("at sea\nas easy as ABC\njump ship\n")
    out1, out2 = tmp_path / "m1.tsv", tmp_path / "m2.tsv"
    cands = tmp_path / "cands.tsv"
    assert run("overlap", "--in", a, "--in", b, "--candidates-out", cands, "--out", out1) == 0
    assert run("overlap", "--in", a, "--in", b, "--out", out2) == 0
    assert read(out1) == read(out2)
    assert "100.00" in out1.read_text()
    assert "SUBSTRING_GAPPED" in cands.read_text()
    js = tmp_path / "m.json"
    assert run("overlap", "--in", a, "--in", b, "--format", "json", "--out", js) == 0
    payload = json.loads(js.read_text())
    assert payload["a|b"]["exact"] == 1


def test_candidates_cli(env, tmp_path):
    out1, out2 = tmp_path / "c1.tsv", tmp_path / "c2.tsv"
    for out in (out1, out2):
        assert run("candidates", "--corpus", env["corpus"],
                   "--lexicon", env["lexicon"], "--out", out) == 0
    assert read(out1) == read(out2)
    assert b"**" in read(out1)


@pytest.mark.parametrize("method", ["exact", "fuzzy", "inflect"])
def test_extract_string_methods(env, tmp_path, method):
    out1, out2 = tmp_path / "e1.tsv", tmp_path / "e2.tsv"
    for out in (out1, out2):
        assert run("extract", "--method", method, "--corpus", env["corpus"],
                   "--lexicon", env["lexicon"], "--intervening", "1",
                   "--jobs", "1", "--out", out) == 0
    assert read(out1) == read(out2)
    assert len(out1.read_text().splitlines()) > 10


def test_extract_parse_and_in_context(env, tmp_path):
    plain1, plain2 = tmp_path / "p1.tsv", tmp_path / "p2.tsv"
    for out in (plain1, plain2):
        assert run("extract", "--method", "parse", "--corpus", env["corpus"],
                   "--lexicon", env["lexicon"], "--pie-parses", env["pies"],
                   "--jobs", "1", "--out", out) == 0
    assert read(plain1) == read(plain2)
    ctx = tmp_path / "ctx.tsv"
    assert run("extract", "--method", "parse", "--corpus", env["corpus"],
               "--lexicon", env["lexicon"], "--pie-parses", env["pies"],
               "--in-context", env["idx"], "--jobs", "1", "--out", ctx) == 0
    # the corrected jump-ship pattern finds the passive instance
    assert "docA\t6\tjump_ship" in ctx.read_text()
    assert "docA\t6\tjump_ship" not in plain1.read_text()


def test_extract_jobs_byte_identical(env, tmp_path):
    outs = []
    for jobs in ("1", "8"):
        out = tmp_path / ("j%s.tsv" % jobs)
        assert run("extract", "--method", "inflect", "--corpus", env["corpus"],
                   "--lexicon", env["lexicon"], "--intervening", "2",
                   "--jobs", jobs, "--out", out) == 0
        outs.append(read(out))
    assert outs[0] == outs[1]


def test_extract_flag_validation(env, tmp_path):
    out = tmp_path / "x.tsv"
    assert run("extract", "--method", "exact", "--corpus", env["corpus"],
               "--lexicon", env["lexicon"], "--no-labels", "--out", out) == 1
    assert run("extract", "--method", "parse", "--corpus", env["corpus"],
               "--lexicon", env["lexicon"], "--out", out) == 1
    assert run("extract", "--method", "exact", "--corpus", env["corpus"],
               "--lexicon", env["lexicon"], "--intervening", "7", "--out", out) == 1


def test_combine_and_evaluate(env, tmp_path):
    e1 = tmp_path / "exact.tsv"
    e2 = tmp_path / "parse.tsv"
    run("extract", "--method", "exact", "--corpus", env["corpus"],
        "--lexicon", env["lexicon"], "--jobs", "1", "--out", e1)
    run("extract", "--method", "parse", "--corpus", env["corpus"],
        "--lexicon", env["lexicon"], "--pie-parses", env["pies"],
        "--in-context", env["idx"], "--jobs", "1", "--out", e2)
    union1, union2 = tmp_path / "u1.tsv", tmp_path / "u2.tsv"
    assert run("combine", "--in", e1, "--in", e2, "--out", union1) == 0
    assert run("combine", "--in", e2, "--in", e1, "--out", union2) == 0
    u = union1.read_text()
    assert "+" in u  # merged method tags
    rep1, rep2 = tmp_path / "r1.tsv", tmp_path / "r2.tsv"
    assert run("evaluate", "--extractions", union1, "--gold", env["gold"],
               "--per-type", "25", "--out", rep1) == 0
    assert run("evaluate", "--extractions", union1, "--gold", env["gold"],
               "--per-type", "25", "--out", rep2) == 0
    assert read(rep1) == read(rep2)
    body = rep1.read_text()
    assert body.startswith("metric\tvalue")
    js = tmp_path / "r.json"
    assert run("evaluate", "--extractions", union1, "--gold", env["gold"],
               "--format", "json", "--out", js) == 0
    payload = json.loads(js.read_text())
    assert set(payload) >= {"precision", "recall", "f1"}


def test_kappa_cli(env, tmp_path):
    labels = tmp_path / "labels.tsv"
    labels.write_text("y\ty\tn\ny\ty\ty\nn\tn\tn\ny\tn\tn\n")
    out = tmp_path / "k.tsv"
    assert run("kappa", "--labels", labels, "--out", out) == 0
    assert out.read_text().strip() == "fleiss_kappa\t0.333333"


def test_index_build_and_select(env, tmp_path):
    sentences = tmp_path / "s.txt"
    sentences.write_text("Did they jump ship at Lima?\nWe jump ship tomorrow maybe never.\n")
    idx = tmp_path / "idx"
    assert run("index", "build", "--sentences", sentences, "--out", idx) == 0
    sel1, sel2 = tmp_path / "sel1.tsv", tmp_path / "sel2.tsv"
    for sel in (sel1, sel2):
        assert run("index", "select", "--lexicon", env["lexicon"],
                   "--index", idx, "--out", sel) == 0
    assert read(sel1) == read(sel2)
    assert "jump_ship\t1\t" in sel1.read_text()


def test_config_file_defaults_and_flag_priority(env, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("intervening=2\ncase-sensitive=true\n")
    out_cfg = tmp_path / "c.tsv"
    out_flag = tmp_path / "f.tsv"
    assert run("--config", config, "extract", "--method", "exact",
               "--corpus", env["corpus"], "--lexicon", env["lexicon"],
               "--jobs", "1", "--out", out_cfg) == 0
    assert "exact-cs-2w" in out_cfg.read_text()
    # explicit flag beats config
    assert run("--config", config, "extract", "--method", "exact",
               "--corpus", env["corpus"], "--lexicon", env["lexicon"],
               "--intervening", "0", "--jobs", "1", "--out", out_flag) == 0
    assert "exact-cs-0w" in out_flag.read_text()
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense-key=1\n")
    assert run("--config", bad, "extract", "--method", "exact",
               "--corpus", env["corpus"], "--lexicon", env["lexicon"],
               "--out", tmp_path / "n.tsv") == 1


def test_unknown_subcommand_and_missing_file(env, tmp_path):
    assert run("frobnicate") == 1
    assert run("extract", "--method", "exact", "--corpus", tmp_path / "nope.conllu",
               "--lexicon", env["lexicon"], "--out", tmp_path / "o.tsv") == 1


def test_all_reference_configurations_run(env, tmp_path):
    """Every string matcher configuration and every parse configuration."""
    n = 0
    for method, gap in itertools.product(("exact", "fuzzy", "inflect"), range(4)):
        for cs in (False, True):
            out = tmp_path / ("s%d.tsv" % n)
            argv = ["extract", "--method", method, "--corpus", env["corpus"],
                    "--lexicon", env["lexicon"], "--intervening", str(gap),
                    "--jobs", "1", "--out", out]
            if cs:
                argv.insert(3, "--case-sensitive")
            assert run(*argv) == 0
            n += 1
    assert n == 24  # 12 configurations x case flag
    for in_ctx in (False, True):
        for relax in (None, "--no-labels", "--no-direction"):
            out = tmp_path / ("p%d.tsv" % n)
            argv = ["extract", "--method", "parse", "--corpus", env["corpus"],
                    "--lexicon", env["lexicon"], "--pie-parses", env["pies"],
                    "--jobs", "1", "--out", out]
            if in_ctx:
                argv += ["--in-context", env["idx"]]
            if relax:
                argv.append(relax)
            assert run(*argv) == 0
            n += 1
    assert n == 30


def test_overlap_review_roundtrip(env, tmp_path):
    """The emitted candidates file, column 3 edited, is a valid review file."""
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("easy as ABC\nspill the beans\n")
    b.write_text("as easy as ABC\njump ship\n")
    cands = tmp_path / "cands.tsv"
    assert run("overlap", "--in", a, "--in", b, "--candidates-out", cands,
               "--out", tmp_path / "m0.tsv") == 0
    edited = cands.read_text().replace("\treject\t", "\taccept\t", 1)
    review = tmp_path / "review.tsv"
    review.write_text(edited)
    out = tmp_path / "m1.tsv"
    assert run("overlap", "--in", a, "--in", b, "--decisions", review,
               "--out", out) == 0
    body = out.read_text()
    assert "exact+accepted" in body
    assert "50.00" in body  # 0 exact + 1 accepted of 2 entries
