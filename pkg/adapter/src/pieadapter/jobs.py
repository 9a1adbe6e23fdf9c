"""The four batch jobs: corpus parsing, isolated PIE parsing, in-context
example parsing, and lexicon tagging. All output is deterministic.
"""

import re

WILDCARD = "—"
POSS_WILDCARD = WILDCARD + "'s"

# the PoS-ambiguous stand-in for the em-dash wildcard before parsing
FILLER = "fine"

_TOKEN_RE = re.compile(r"[\w'’—-]+|[^\w\s]", re.UNICODE)
_TRAILING = ".,;:!?"


def tokenize(text):
    return _TOKEN_RE.findall(text)


def _write_block(fh, sent_id, rows, meta=()):
    fh.write("# sent_id = %s\n" % sent_id)
    for line in meta:
        fh.write("# %s\n" % line)
    fh.write("# text = %s\n" % " ".join(r[0] for r in rows))
    for i, (surface, lemma, upos, head, rel) in enumerate(rows, 1):
        fh.write("%d\t%s\t%s\t%s\t_\t_\t%d\t%s\t_\t_\n"
                 % (i, surface, lemma, upos, head, rel))
    fh.write("\n")


def parse_corpus(backend, in_path, out_path, doc_id=None):
    """One sentence per input line -> CoNLL-U with stable sentence ids."""
    count = 0
    with open(in_path, encoding="utf-8") as src, \
            open(out_path, "w", encoding="utf-8", newline="\n") as out:
        if doc_id:
            out.write("# newdoc id = %s\n" % doc_id)
        sent_id = 0
        for line in src:
            line = line.strip()
            if not line:
                continue
            sent_id += 1
            tokens = tokenize(line)
            _write_block(out, str(sent_id), backend.parse(tokens))
            count += 1
        if count == 0:
            out.write("# empty corpus\n")
    return count


def _lexicon_rows(in_path):
    """(entry_id, surface) rows of a lexicon TSV (or bare list)."""
    rows = []
    with open(in_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) == 1:
                rows.append((re.sub(r"[^a-z0-9]+", "_", cols[0].lower()).strip("_"),
                             cols[0].strip(), None))
            else:
                rows.append((cols[0].strip(), cols[1].strip(),
                             cols[2].strip() if len(cols) > 2 else None))
    return rows


def _entry_tokens(surface):
    toks = []
    for raw in surface.split():
        tail = []
        while len(raw) > 1 and raw[-1] in _TRAILING:
            tail.append(raw[-1])
            raw = raw[:-1]
        if raw:
            toks.append(raw)
        toks.extend(reversed(tail))
    return toks


def parse_pies(backend, in_path, out_path):
    """Isolated parses, one per entry; wildcards become tagged fillers."""
    count = 0
    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        rows = _lexicon_rows(in_path)
        for entry_id, surface, _ in rows:
            tokens = _entry_tokens(surface)
            fillers = []
            prepared = []
            for i, tok in enumerate(tokens, 1):
                if tok in (WILDCARD, POSS_WILDCARD):
                    fillers.append(str(len(prepared) + 1))
                    prepared.append(FILLER)
                    if tok == POSS_WILDCARD:
                        prepared.append("'s")
                else:
                    prepared.append(tok)
            meta = ["entry_id = %s" % entry_id]
            if fillers:
                meta.append("pie_fillers = %s" % ",".join(fillers))
            _write_block(out, entry_id, backend.parse(prepared), meta)
            count += 1
        if count == 0:
            out.write("# empty lexicon\n")
    return count


def parse_examples(backend, in_path, out_path):
    """Parse selected example sentences (entry_id, sent_id, text TSV).

    The output keys parses by the example corpus sentence id, which is
    what the extractor's in-context parse source looks up.
    """
    seen = set()
    count = 0
    with open(in_path, encoding="utf-8") as src, \
            open(out_path, "w", encoding="utf-8", newline="\n") as out:
        for lineno, line in enumerate(src, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise RuntimeError(
                    "%s:%d: expected entry_id<TAB>sent_id<TAB>sentence"
                    % (in_path, lineno))
            _, sent_id, text = cols
            if sent_id in seen:
                continue
            seen.add(sent_id)
            _write_block(out, sent_id, backend.parse(tokenize(text)))
            count += 1
        if count == 0:
            out.write("# no examples\n")
    return count


def load_corrections(path):
    """Manual tag corrections: entry_id<TAB>word/POS word/POS ..."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            entry_id, _, tagged = line.partition("\t")
            table[entry_id.strip()] = tagged.strip()
    return table


def tag_lexicon(backend, in_path, out_path, corrections=None):
    """Append the word/POS column to a lexicon TSV; corrections win."""
    corrections = corrections or {}
    count = 0
    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        out.write("# id\tsurface\tsource\ttagged\n")
        for entry_id, surface, source in _lexicon_rows(in_path):
            tagged = corrections.get(entry_id)
            if tagged is None:
                tokens = _entry_tokens(surface)
                pairs = []
                for tok, upos in backend.tag(tokens):
                    if tok.lower() in (WILDCARD, POSS_WILDCARD):
                        upos = "X"
                    pairs.append("%s/%s" % (tok, upos))
                tagged = " ".join(pairs)
            out.write("%s\t%s\t%s\t%s\n" % (entry_id, surface, source or "adapter", tagged))
            count += 1
    return count
