"""CoNLL-U reading/writing and the DepSentence tree type.

Only the columns the matchers need are kept: index, surface, lemma,
UPOS, head, deprel. Multiword-token ranges (1-2) and empty nodes (1.1)
are skipped. Sentence and document ids come from the standard metadata
comments (# sent_id, # newdoc id) when present.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ConlluError


class DepToken(NamedTuple):
    index: int  # 1-based
    surface: str
    lemma: str
    upos: str
    head: int  # 0 = root
    deprel: str


@dataclass(frozen=True)
class DepSentence:
    document_id: str
    sentence_id: str
    tokens: tuple
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def surfaces(self):
        return [t.surface for t in self.tokens]

    @property
    def text(self):
        return self.meta.get("text", " ".join(self.surfaces))

    def sort_key(self):
        sid = self.sentence_id
        return (self.document_id, (0, int(sid)) if sid.isdigit() else (1, sid))


def sentence_sort_key(doc_id, sent_id):
    return (doc_id, (0, int(sent_id)) if sent_id.isdigit() else (1, sent_id))


def _validate_tree(tokens, where):
    n = len(tokens)
    roots = [t for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise ConlluError("%s: expected exactly 1 root, found %d" % (where, len(roots)))
    for t in tokens:
        if not (0 <= t.head <= n):
            raise ConlluError("%s: token %d has head %d out of range" % (where, t.index, t.head))
        if t.head == t.index:
            raise ConlluError("%s: token %d is its own head" % (where, t.index))
    # cycle check: walk to root from every token
    for t in tokens:
        seen = set()
        cur = t.index
        while cur != 0:
            if cur in seen:
                raise ConlluError("%s: cycle through token %d" % (where, t.index))
            seen.add(cur)
            cur = tokens[cur - 1].head


def load_conllu(path, default_doc=None):
    """Parse a CoNLL-U file into validated DepSentence objects."""
    sentences = []
    doc_id = default_doc or "doc1"
    sent_id = None
    meta = {}
    rows = []
    first_line = None
    auto_sent = 0

    def flush(lineno):
        nonlocal sent_id, meta, rows, first_line, auto_sent
        if not rows:
            sent_id, meta, first_line = None, {}, None
            return
        expected = list(range(1, len(rows) + 1))
        if [t.index for t in rows] != expected:
            raise ConlluError(
                "%s:%d: token ids not contiguous from 1" % (path, first_line)
            )
        auto_sent += 1
        sid = sent_id if sent_id is not None else str(auto_sent)
        where = "%s: sentence %s" % (path, sid)
        toks = tuple(rows)
        _validate_tree(toks, where)
        sentences.append(DepSentence(doc_id, sid, toks, dict(meta)))
        sent_id, meta, rows, first_line = None, {}, [], None

    with open(path, encoding="utf-8") as fh:
        lineno = 0
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                flush(lineno)
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    key = key.strip()
                    value = value.strip()
                    if key == "newdoc id":
                        doc_id = value
                    elif key == "sent_id":
                        sent_id = value
                    else:
                        meta[key] = value
                continue
            cols = line.split("\t")
            if len(cols) != 10:
                raise ConlluError(
                    "%s:%d: expected 10 tab-separated columns, got %d"
                    % (path, lineno, len(cols))
                )
            tok_id = cols[0]
            if "-" in tok_id or "." in tok_id:
                continue  # multiword range / empty node
            try:
                index = int(tok_id)
            except ValueError:
                raise ConlluError("%s:%d: bad token id %r" % (path, lineno, tok_id)) from None
            try:
                head = int(cols[6])
            except ValueError:
                raise ConlluError("%s:%d: bad head %r" % (path, lineno, cols[6])) from None
            if first_line is None:
                first_line = lineno
            rows.append(DepToken(index, cols[1], cols[2], cols[3], head, cols[7]))
        flush(lineno + 1 if rows else 0)
    return sentences


def write_conllu(sentences, path):
    """Write DepSentences back out (unused columns filled with _)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        last_doc = None
        for s in sentences:
            if s.document_id != last_doc:
                fh.write("# newdoc id = %s\n" % s.document_id)
                last_doc = s.document_id
            fh.write("# sent_id = %s\n" % s.sentence_id)
            for key in sorted(s.meta):
                if key != "text":
                    fh.write("# %s = %s\n" % (key, s.meta[key]))
            fh.write("# text = %s\n" % s.text)
            for t in s.tokens:
                fh.write(
                    "%d\t%s\t%s\t%s\t_\t_\t%d\t%s\t_\t_\n"
                    % (t.index, t.surface, t.lemma, t.upos, t.head, t.deprel)
                )
            fh.write("\n")
