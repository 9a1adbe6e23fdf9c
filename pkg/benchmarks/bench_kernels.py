#!/usr/bin/env python3
"""Compare the compiled matcher kernels against the Python fallback.

Times the two hot paths (gapped-subsequence string matching, subtree
embedding search) over a synthetic corpus built from the fixture
lexicon's vocabulary. Run from the repository root:

    python3 benchmarks/bench_kernels.py [--sentences N]
"""

import argparse
import random
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from piextract._kernels import fallback  # noqa: E402
from piextract import _kernels  # noqa: E402
from piextract.conllu import DepSentence, DepToken  # noqa: E402
from piextract.lexicon import load_lexicon  # noqa: E402
from piextract.morphology import Morphology  # noqa: E402
from piextract.string_match import (MatchOptions, build_view,  # noqa: E402
                                    compile_lexicon)
from piextract.parse_match import build_pattern, subtree_match  # noqa: E402
from piextract.conllu import load_conllu  # noqa: E402

try:
    from piextract._kernels import _native
except ImportError:
    _native = None


def synth_corpus(rng, n_sentences, vocabulary):
    corpus = []
    for i in range(n_sentences):
        n = rng.randrange(8, 26)
        corpus.append([rng.choice(vocabulary) for _ in range(n)])
    return corpus


def bench_string(impl, views, compiled, gap):
    begin = time.perf_counter()
    hits = 0
    for texts, markers in views:
        for _, elems in compiled:
            hits += len(impl.find_token_matches(texts, markers, elems, gap))
    return time.perf_counter() - begin, hits


def bench_tree(impl, arg_sets):
    begin = time.perf_counter()
    hits = 0
    for args in arg_sets:
        hits += len(impl.find_subtree_matches(*args))
    return time.perf_counter() - begin, hits


def synth_dep_corpus(rng, n_sentences, lemmas):
    out = []
    labels = ["nsubj", "dobj", "det", "prep", "pobj", "amod", "advmod"]
    for i in range(n_sentences):
        n = rng.randrange(8, 22)
        toks = []
        for j in range(n):
            lemma = rng.choice(lemmas)
            head = 0 if j == 0 else rng.randrange(0, j) + 1
            toks.append(DepToken(j + 1, lemma, lemma, "NOUN", head,
                                 rng.choice(labels) if head else "root"))
        out.append(DepSentence("bench", str(i), tuple(toks)))
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sentences", type=int, default=400)
    args = parser.parse_args()

    if _native is None:
        print("compiled kernel not built; run pip install -e . first", file=sys.stderr)
        return 1

    rng = random.Random(11)
    lexicon = load_lexicon(ROOT / "tests" / "fixtures" / "lexicon_small.tsv", "fixture")
    morph = Morphology()
    vocabulary = sorted({w.text for e in lexicon for w in e.words}) + [
        "and", "while", "however", "yesterday", "people", "things", "quickly"]

    corpus = synth_corpus(rng, args.sentences, vocabulary)
    opts = MatchOptions(2, False, "INFLECT")
    compiled = compile_lexicon(lexicon, opts, morph)
    views = []
    for toks in corpus:
        view = build_view(toks)
        views.append((view.folded, view.is_marker))

    print("string kernel: %d sentences x %d patterns, gap 2"
          % (len(corpus), len(compiled)))
    t_native, h1 = bench_string(_native, views, compiled, 2)
    t_fallback, h2 = bench_string(fallback, views, compiled, 2)
    assert h1 == h2
    print("  native   %.3fs" % t_native)
    print("  fallback %.3fs" % t_fallback)
    print("  speedup  %.1fx   (%d matches)" % (t_fallback / t_native, h1))

    parses = {p.meta["entry_id"]: p
              for p in load_conllu(ROOT / "tests" / "fixtures" / "pie_parses.conllu")}
    patterns = [build_pattern(e, parses[e.id]) for e in lexicon]
    dep_corpus = synth_dep_corpus(rng, args.sentences,
                                  [w.text.lower() for e in lexicon for w in e.words])
    from piextract.parse_match import kernel_args

    arg_sets = [kernel_args(s, p, "NO_DIRECTION")
                for s in dep_corpus for p in patterns]
    print("subtree kernel: %d sentences x %d patterns, NO_DIRECTION"
          % (len(dep_corpus), len(patterns)))
    t_native, h1 = bench_tree(_native, arg_sets)
    t_fallback, h2 = bench_tree(fallback, arg_sets)
    assert h1 == h2
    print("  native   %.3fs" % t_native)
    print("  fallback %.3fs" % t_fallback)
    print("  speedup  %.1fx   (%d matches)" % (t_fallback / t_native, h1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
