"""Parser-based PIE extraction: subtree matching over dependency parses.

A PIE pattern is the dependency parse of the dictionary form (parsed in
isolation, or inside a retrieved example sentence — "in context"). A
sentence contains the PIE iff the pattern tree embeds injectively into
the sentence tree on lemmas, with:

  * articles (a/an/the) in the pattern skipped entirely,
  * a passivisation rule: a direct-object pattern edge also matches the
    noun realised as passive subject of the verb,
  * placeholder nodes (someone's / one's / someone / something / em dash)
    matching possessives, pronouns, nouns or any word,
  * optional relaxation: NO_LABELS ignores relation labels, NO_DIRECTION
    additionally ignores edge direction.

The span runs from the first to the last matched token, so insertions
("spill all the beans") are covered without any gap bound.
"""

from dataclasses import dataclass
from typing import NamedTuple

from . import _kernels
from .conllu import load_conllu
from .errors import ParseSourceUnavailable, PatternError
from .lexicon import DETERMINERS, POSSESSIVE_PRONOUNS
from .string_match import Extraction
from .tokens import (POSSESSIVE_MARKERS, WILDCARD, ends_with_possessive,
                     inside_quotes, normalize_apostrophes)

FULL = "FULL"
NO_LABELS = "NO_LABELS"
NO_DIRECTION = "NO_DIRECTION"

_RELAX_INT = {
    FULL: _kernels.RELAX_FULL,
    NO_LABELS: _kernels.RELAX_NO_LABELS,
    NO_DIRECTION: _kernels.RELAX_NO_DIRECTION,
}

ISOLATED = "ISOLATED"
IN_CONTEXT = "IN_CONTEXT"
BACKOFF = "BACKOFF"

# node kinds
LEMMA = "LEMMA"
ANY = "ANY"
POSS_ANY = "POSS_ANY"    # someone's / something's: pronoun or marked noun
POSS_PRON = "POSS_PRON"  # one's: possessive pronouns only
OBJ = "OBJ"              # someone / something: non-possessive pronoun or noun

DOBJ_LABELS = frozenset({"dobj", "obj"})
PASSIVE_SUBJECT_LABELS = frozenset({"nsubjpass", "nsubj:pass", "csubjpass", "csubj:pass"})
PLAIN_SUBJECT_LABELS = frozenset({"nsubj"})
PASSIVE_AUX_LABELS = frozenset({"auxpass", "aux:pass"})
PASSIVE_AUX_LEMMAS = frozenset({"be", "get"})

_PLACEHOLDER_NODE_KINDS = {
    "someone's": POSS_ANY,
    "something's": POSS_ANY,
    WILDCARD + "'s": POSS_ANY,
    "one's": POSS_PRON,
    "someone": OBJ,
    "something": OBJ,
    WILDCARD: ANY,
}


class PatternNode(NamedTuple):
    kind: str
    lemma: str
    upos: str
    is_article: bool


@dataclass(frozen=True)
class PiePattern:
    """Dependency-tree pattern of one PIE entry."""

    entry_id: str
    nodes: tuple
    edges: tuple  # (head node index, dependent node index, deprel)
    root: int
    provenance: str = ISOLATED

    def __post_init__(self):
        n = len(self.nodes)
        parents = {d: h for h, d, _ in self.edges}
        if len(self.edges) != n - 1 or self.root in parents:
            raise PatternError("pattern for %r is not a tree" % self.entry_id)
        for d in range(n):
            if d != self.root and d not in parents:
                raise PatternError("pattern for %r is not connected" % self.entry_id)
        if all(nd.is_article for nd in self.nodes):
            raise PatternError("pattern for %r has only article nodes" % self.entry_id)

    def parent_of(self, i):
        for h, d, rel in self.edges:
            if d == i:
                return h, rel
        return None, None


def _norm(text):
    return normalize_apostrophes(text).lower()


def _parse_filler_ids(meta):
    raw = meta.get("pie_fillers", "")
    ids = set()
    for part in raw.replace(",", " ").split():
        ids.add(int(part))
    return ids


def _align(words, tokens, fillers):
    """Map entry words to consecutive token groups from tokens[0] on.

    A group's concatenated surfaces must equal the word (apostrophe- and
    case-insensitive). Wildcard words consume the substituted filler
    token (plus a split possessive marker for the "—'s" form). Returns
    (groups, tokens consumed) or None when alignment is impossible.
    """
    groups = []
    ti = 0
    for wi, w in enumerate(words):
        target = _norm(w.text)
        if ti >= len(tokens):
            return None
        tok = tokens[ti]
        if target == WILDCARD or target == WILDCARD + "'s":
            if not (tok.index in fillers or _norm(tok.surface).startswith(WILDCARD)):
                return None
            group = [tok]
            ti += 1
            if target.endswith("'s") and ti < len(tokens) and \
                    _norm(tokens[ti].surface) in POSSESSIVE_MARKERS:
                group.append(tokens[ti])
                ti += 1
            groups.append((wi, group))
            continue
        acc = ""
        group = []
        while ti < len(tokens) and len(acc) < len(target):
            acc += _norm(tokens[ti].surface)
            group.append(tokens[ti])
            ti += 1
        if acc != target:
            return None
        groups.append((wi, group))
    return groups, ti


def build_pattern(entry, parse, span=None, provenance=ISOLATED):
    """Build the matchable pattern from a parse of the entry.

    `parse` is the isolated parse of the dictionary form, or a sentence
    parse together with `span` = (first, last) token ids covering the
    entry's tokens within it.
    """
    if span is None:
        tokens = list(parse.tokens)
    else:
        tokens = [t for t in parse.tokens if span[0] <= t.index <= span[1]]
    if not tokens:
        raise PatternError("no tokens for entry %r in parse" % entry.id)
    fillers = _parse_filler_ids(parse.meta)
    aligned = _align(entry.words, tokens, fillers)
    if aligned is None or aligned[1] != len(tokens):
        raise PatternError(
            "entry %r tokens not found in parse %s" % (entry.id, parse.sentence_id)
        )
    groups = aligned[0]

    in_span = {t.index for t in tokens}
    keep = {}    # token index -> (node kind, token)
    absorb = {}  # dropped token index -> group head token index
    for wi, group in groups:
        word = entry.words[wi]
        kind = _PLACEHOLDER_NODE_KINDS.get(_norm(word.text), LEMMA)
        if kind == LEMMA or len(group) == 1:
            if kind == LEMMA:
                for tok in group:
                    keep[tok.index] = (kind, tok)
            else:
                keep[group[0].index] = (kind, group[0])
            continue
        # placeholder spanning several tokens: keep the group head
        head_tok = None
        group_ids = {t.index for t in group}
        for tok in group:
            if tok.head not in group_ids:
                head_tok = tok
                break
        head_tok = head_tok or group[0]
        keep[head_tok.index] = (kind, head_tok)
        for tok in group:
            if tok.index != head_tok.index:
                absorb[tok.index] = head_tok.index

    def resolve(head_idx):
        while head_idx in absorb:
            head_idx = absorb[head_idx]
        return head_idx

    order = sorted(keep)
    node_of = {idx: i for i, idx in enumerate(order)}
    nodes = []
    for idx in order:
        kind, tok = keep[idx]
        lemma = tok.lemma
        is_article = kind == LEMMA and _norm(lemma) in DETERMINERS
        nodes.append(PatternNode(kind, lemma, tok.upos, is_article))

    edges = []
    roots = []
    for idx in order:
        _, tok = keep[idx]
        head = resolve(tok.head)
        if head == 0 or head not in in_span or head not in keep:
            roots.append(node_of[idx])
        else:
            edges.append((node_of[head], node_of[idx], tok.deprel))
    if len(roots) != 1:
        raise PatternError(
            "entry %r: pattern has %d roots (not a single tree)" % (entry.id, len(roots))
        )
    return PiePattern(entry.id, tuple(nodes), tuple(edges), roots[0], provenance)


def _has_possessive_marker(sentence, tok):
    if ends_with_possessive(tok.surface):
        return True
    for child in sentence.tokens:
        if child.head == tok.index and _norm(child.surface) in POSSESSIVE_MARKERS:
            return True
    return False


def _node_compat(node, sentence):
    row = []
    for tok in sentence.tokens:
        if node.kind == LEMMA:
            ok = _norm(tok.lemma) == _norm(node.lemma)
        elif node.kind == ANY:
            ok = True
        elif node.kind == POSS_PRON:
            ok = _norm(tok.surface) in POSSESSIVE_PRONOUNS
        elif node.kind == POSS_ANY:
            ok = (
                _norm(tok.surface) in POSSESSIVE_PRONOUNS
                or (
                    tok.upos in ("NOUN", "PROPN", "PRON")
                    and _has_possessive_marker(sentence, tok)
                )
                or ends_with_possessive(tok.surface)
            )
        elif node.kind == OBJ:
            ok = tok.upos in ("PRON", "NOUN", "PROPN") and not (
                _norm(tok.surface) in POSSESSIVE_PRONOUNS
                or _has_possessive_marker(sentence, tok)
            )
        else:
            ok = False
        row.append(ok)
    return row


def _passive_ok(sentence):
    """Per token: does it qualify as the passive realisation of an object?"""
    by_head = {}
    for tok in sentence.tokens:
        by_head.setdefault(tok.head, []).append(tok)
    flags = []
    for tok in sentence.tokens:
        rel = tok.deprel.lower()
        ok = rel in PASSIVE_SUBJECT_LABELS
        if not ok and rel in PLAIN_SUBJECT_LABELS:
            for sib in by_head.get(tok.head, ()):
                if (
                    sib.deprel.lower() in PASSIVE_AUX_LABELS
                    and _norm(sib.lemma) in PASSIVE_AUX_LEMMAS
                ):
                    ok = True
                    break
        flags.append(1 if ok else 0)
    return flags


def _core_arrays(pattern, match_articles):
    """Contract article nodes away; core arrays in parent-first order."""
    n = len(pattern.nodes)
    core = [
        i for i in range(n) if match_articles or not pattern.nodes[i].is_article
    ]
    core_set = set(core)
    parent = {}
    rel_of = {}
    for h, d, rel in pattern.edges:
        parent[d] = h
        rel_of[d] = rel

    def core_parent_of(i):
        j = parent.get(i)
        while j is not None and j not in core_set:
            j = parent.get(j)
        return j

    children = {i: [] for i in core}
    roots = []
    for i in core:
        p = core_parent_of(i)
        if p is None:
            roots.append(i)
        else:
            children[p].append(i)
    if not roots:
        raise PatternError("pattern %r has no core root" % pattern.entry_id)

    # skipping articles can disconnect the pattern (article as head);
    # each component is then embedded independently
    ordered = []
    for root in roots:
        stack = [root]
        while stack:
            i = stack.pop()
            ordered.append(i)
            for c in sorted(children[i], reverse=True):
                stack.append(c)
    return ordered, {i: core_parent_of(i) for i in core}, rel_of


def kernel_args(sentence, pattern, relax=FULL, match_articles=False):
    """Flat arrays for the subtree kernel (also used by the benchmark)."""
    relax_int = _RELAX_INT[relax]
    ordered, core_parent_of, rel_of = _core_arrays(pattern, match_articles)

    labels = {}

    def intern(label):
        label = label.lower()
        if label not in labels:
            labels[label] = len(labels)
        return labels[label]

    heads = [t.head - 1 for t in sentence.tokens]  # -1 = root
    rels = [intern(t.deprel) for t in sentence.tokens]
    passive = _passive_ok(sentence)

    pos_in_order = {i: k for k, i in enumerate(ordered)}
    compat = []
    core_parent = []
    core_rel = []
    core_dobj = []
    for i in ordered:
        compat.append(_node_compat(pattern.nodes[i], sentence))
        p = core_parent_of[i]
        core_parent.append(-1 if p is None else pos_in_order[p])
        rel = rel_of.get(i, "")
        core_rel.append(intern(rel) if rel else -1)
        core_dobj.append(1 if rel.lower() in DOBJ_LABELS else 0)

    return (len(sentence.tokens), heads, rels, passive, compat,
            core_parent, core_rel, core_dobj, relax_int)


def subtree_match(sentence, pattern, relax=FULL, method="parse", match_articles=False):
    """All extractions of `pattern` in `sentence` at one relaxation level."""
    spans = _kernels.find_subtree_matches(
        *kernel_args(sentence, pattern, relax, match_articles)
    )
    out = [
        Extraction(sentence.document_id, sentence.sentence_id,
                   (lo + 1, hi + 1), pattern.entry_id, method)
        for lo, hi in spans
    ]
    return sorted(set(out), key=Extraction.sort_key)


def find_entry_span(entry, parse):
    """(first, last) token ids of the entry's dictionary form in a parse."""
    tokens = list(parse.tokens)
    fillers = _parse_filler_ids(parse.meta)
    for start in range(len(tokens)):
        aligned = _align(entry.words, tokens[start:], fillers)
        if aligned is not None:
            consumed = aligned[1]
            return (tokens[start].index, tokens[start + consumed - 1].index)
    return None


class ConlluParseSource:
    """Parse lookup backed by a CoNLL-U file keyed on sent_id."""

    def __init__(self, path):
        try:
            sentences = load_conllu(path)
        except OSError as err:
            raise ParseSourceUnavailable("cannot read parse source %s: %s" % (path, err))
        self._by_id = {s.sentence_id: s for s in sentences}

    def get(self, sent_id):
        sent = self._by_id.get(str(sent_id))
        if sent is None:
            raise ParseSourceUnavailable(
                "parse source has no parse for sentence %s; "
                "run the adapter on the selection first" % sent_id
            )
        return sent


def select_example(entry, index):
    """Pick the example sentence to parse the entry in context.

    Exact dictionary-form occurrences only; occurrences inside quotation
    marks are excluded (meta-linguistic use); the shortest sentence wins,
    ties broken by smallest sentence id. Returns (sent_id, token_count)
    or None.
    """
    phrase = [w.text for w in entry.words]
    best = None
    for sent_id, first_pos in index.find_occurrences(phrase):
        toks = index.sentence_tokens(sent_id)
        last_pos = first_pos + len(phrase) - 1
        if inside_quotes(toks, first_pos, last_pos):
            continue
        key = (len(toks), sent_id)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return best[1], best[0]


def acquire_in_context(entry, index, parse_source, isolated_parse):
    """Pattern from an in-context parse, falling back to the isolated one.

    No example sentence found -> provenance BACKOFF (isolated parse).
    Example found but parse source missing it -> ParseSourceUnavailable.
    """
    selected = select_example(entry, index)
    if selected is None:
        return build_pattern(entry, isolated_parse, provenance=BACKOFF)
    sent_id, _ = selected
    parse = parse_source.get(sent_id)
    span = find_entry_span(entry, parse)
    if span is None:
        return build_pattern(entry, isolated_parse, provenance=BACKOFF)
    try:
        return build_pattern(entry, parse, span=span, provenance=IN_CONTEXT)
    except PatternError:
        # induced subgraph was not a single tree; isolated parse is safer
        return build_pattern(entry, isolated_parse, provenance=BACKOFF)


def extract_corpus_parse(sentences, patterns, relax=FULL, method="parse",
                         match_articles=False):
    """Run subtree matching for every pattern over a corpus."""
    out = set()
    for sentence in sentences:
        for pattern in patterns:
            out.update(subtree_match(sentence, pattern, relax, method, match_articles))
    return sorted(out, key=Extraction.sort_key)
