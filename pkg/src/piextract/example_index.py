"""Exact-phrase lookup over a large example-sentence corpus.

Directory layout (the in-context pattern acquisition's only corpus view):

    sentences.txt   one sentence per line; line number (1-based) = id
    tokens.idx      token<TAB>sorted sentence ids, comma-separated

Lookup intersects posting lists, then verifies a consecutive
case-insensitive token match. Sentences are kept in memory: example
corpora are shipped as fixtures here; for very large corpora the same
two-file format can be produced offline.
"""

import os

from .errors import InputError
from .tokens import normalize_apostrophes, simple_tokenize

SENTENCES_FILE = "sentences.txt"
INDEX_FILE = "tokens.idx"


def _fold(tok):
    return normalize_apostrophes(tok).lower()


class ExampleIndex:
    def __init__(self, sentences, postings):
        self._sentences = sentences  # sent_id -> token list
        self._postings = postings    # folded token -> sorted id list

    @classmethod
    def build(cls, sentences_path, out_dir):
        """Index a one-sentence-per-line text file into out_dir."""
        os.makedirs(out_dir, exist_ok=True)
        sentences = {}
        postings = {}
        with open(sentences_path, encoding="utf-8") as fh, open(
            os.path.join(out_dir, SENTENCES_FILE), "w", encoding="utf-8", newline="\n"
        ) as copy:
            for sent_id, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                copy.write(line + "\n")
                toks = simple_tokenize(line)
                sentences[sent_id] = toks
                for tok in set(_fold(t) for t in toks):
                    postings.setdefault(tok, []).append(sent_id)
        with open(
            os.path.join(out_dir, INDEX_FILE), "w", encoding="utf-8", newline="\n"
        ) as fh:
            for tok in sorted(postings):
                fh.write("%s\t%s\n" % (tok, ",".join(map(str, postings[tok]))))
        return cls(sentences, postings)

    @classmethod
    def open(cls, index_dir):
        sent_path = os.path.join(index_dir, SENTENCES_FILE)
        idx_path = os.path.join(index_dir, INDEX_FILE)
        if not os.path.exists(sent_path) or not os.path.exists(idx_path):
            raise InputError(
                "%s is not an example index (expected %s and %s)"
                % (index_dir, SENTENCES_FILE, INDEX_FILE)
            )
        sentences = {}
        with open(sent_path, encoding="utf-8") as fh:
            for sent_id, line in enumerate(fh, 1):
                sentences[sent_id] = simple_tokenize(line.rstrip("\n"))
        postings = {}
        with open(idx_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                tok, _, ids = line.partition("\t")
                postings[tok] = [int(i) for i in ids.split(",") if i]
        return cls(sentences, postings)

    def sentence_tokens(self, sent_id):
        return self._sentences[sent_id]

    def find_occurrences(self, phrase_tokens):
        """(sent_id, first 0-based position) of each exact occurrence."""
        folded = [_fold(t) for t in phrase_tokens]
        if not folded:
            return []
        candidates = None
        for tok in folded:
            ids = self._postings.get(tok)
            if not ids:
                return []
            candidates = set(ids) if candidates is None else candidates & set(ids)
            if not candidates:
                return []
        hits = []
        k = len(folded)
        for sent_id in sorted(candidates):
            toks = [_fold(t) for t in self._sentences[sent_id]]
            for i in range(len(toks) - k + 1):
                if toks[i : i + k] == folded:
                    hits.append((sent_id, i))
        return hits
