"""Exact, fuzzy and inflectional string matching over tokenized sentences.

All three matchers run the same gapped-subsequence engine over a
"match view" of the sentence: tokens with internal hyphens split into
units (so "nuts-and-bolts" matches "nuts and bolts") and possessive
markers flagged. They differ only in the per-word predicate:

  exact    token equals the pattern word
  fuzzy    pattern word plus up to 3 trailing letters (inflection guess)
  inflect  token is one of the word's generated inflections

Case folding applies unless case_sensitive. The em-dash wildcard matches
any one token; the possessive wildcard any possessively marked token.
Determiners and punctuation are exempt from fuzzy suffixing.
"""

from dataclasses import dataclass
from typing import NamedTuple

from . import _kernels
from .errors import UntaggedEntryError
from .lexicon import expand_placeholders, make_entry
from .morphology import NOUN, VERB
from .tokens import (POSSESSIVE_MARKERS, WILDCARD, normalize_apostrophes,
                     split_hyphenated)

EXACT = "EXACT"
FUZZY = "FUZZY"
INFLECT = "INFLECT"

_MODES = (EXACT, FUZZY, INFLECT)

POSS_WILDCARD = WILDCARD + "'s"


@dataclass(frozen=True)
class MatchOptions:
    """Knobs shared by the string matchers."""

    max_intervening: int = 0
    case_sensitive: bool = False
    mode: str = EXACT

    def __post_init__(self):
        if not 0 <= self.max_intervening <= 3:
            raise ValueError("max_intervening must be in [0, 3], got %r" % self.max_intervening)
        if self.mode not in _MODES:
            raise ValueError("unknown mode %r" % self.mode)


@dataclass(frozen=True, order=True)
class Extraction:
    """One extracted PIE instance; span is inclusive 1-based token indices."""

    document_id: str
    sentence_id: str
    span: tuple
    entry_id: str
    method: str

    def __post_init__(self):
        first, last = self.span
        if first > last or first < 1:
            raise ValueError("bad span %r" % (self.span,))
        if not self.method:
            raise ValueError("method must be non-empty")

    def key(self):
        """Type-in-sentence identity used by evaluation and union."""
        return (self.document_id, self.sentence_id, self.entry_id)

    def sort_key(self):
        sid = self.sentence_id
        sid_key = (0, int(sid)) if sid.isdigit() else (1, sid)
        return (self.document_id, sid_key, self.span[0], self.span[1], self.entry_id, self.method)


class TokenSentence(NamedTuple):
    """A plain tokenized sentence (no parse information)."""

    document_id: str
    sentence_id: str
    surfaces: list


class MatchView(NamedTuple):
    texts: list      # unit texts, apostrophes normalized
    folded: list     # lowercased unit texts
    is_marker: list  # 1 when the unit is a split-off possessive marker
    orig: list       # 1-based source token index per unit


def build_view(surfaces):
    texts, folded, is_marker, orig = [], [], [], []
    for i, raw in enumerate(surfaces, 1):
        norm = normalize_apostrophes(raw)
        for part in split_hyphenated(norm):
            texts.append(part)
            folded.append(part.lower())
            is_marker.append(1 if part.lower() in POSSESSIVE_MARKERS else 0)
            orig.append(i)
    return MatchView(texts, folded, is_marker, orig)


def _literal_elements(word, fold):
    """Compile one literal pattern word into kernel elements."""
    text = normalize_apostrophes(word)
    if fold:
        text = text.lower()
    parts = split_hyphenated(text)
    elems = []
    for j, part in enumerate(parts):
        zero_gap = j > 0
        if part.endswith("'s") and len(part) > 2:
            elems.append((_kernels.ELEM_SET_POSS, frozenset({part[:-2]}), zero_gap))
        else:
            elems.append((_kernels.ELEM_SET, frozenset({part}), zero_gap))
    return elems


def compile_pattern(entry, mode, case_sensitive, morphology=None):
    """Kernel element list for one (placeholder-expanded) entry variant."""
    fold = not case_sensitive
    elems = []
    for w in entry.words:
        text = normalize_apostrophes(w.text)
        low = text.lower()
        if low == WILDCARD:
            elems.append((_kernels.ELEM_ANY, None, False))
            continue
        if low == POSS_WILDCARD:
            elems.append((_kernels.ELEM_POSS, None, False))
            continue
        inflectable = (
            mode == INFLECT
            and w.pos in (NOUN, VERB)
            and not w.is_determiner
            and not w.is_punct
            and not low.endswith("'s")
        )
        if inflectable:
            forms = morphology.generate(morphology.analyze(low, w.pos), w.pos).forms | {low}
            if not fold:
                # keep the original casing admissible alongside the forms
                forms = forms | {text}
            payload = frozenset(forms)
            parts = sorted({len(split_hyphenated(f)) for f in payload})
            if parts == [1]:
                elems.append((_kernels.ELEM_SET, payload, False))
            else:
                # hyphenated: only the final part inflects, split the rest
                base_parts = split_hyphenated(text if not fold else low)
                for j, part in enumerate(base_parts[:-1]):
                    elems.append((_kernels.ELEM_SET, frozenset({part}), j > 0))
                finals = frozenset(split_hyphenated(f)[-1] for f in payload)
                elems.append((_kernels.ELEM_SET, finals, True))
        elif mode == FUZZY and not w.is_determiner and not w.is_punct:
            parts = split_hyphenated(text if not fold else low)
            for j, part in enumerate(parts[:-1]):
                elems.append((_kernels.ELEM_SET, frozenset({part}), j > 0))
            elems.append((_kernels.ELEM_FUZZY, parts[-1], len(parts) > 1))
        else:
            elems.extend(_literal_elements(w.text, fold))
    return elems


def _match_units(view, elems, opts):
    texts = view.folded if not opts.case_sensitive else view.texts
    return _kernels.find_token_matches(texts, view.is_marker, elems, opts.max_intervening)


def _spans_to_extractions(spans, view, sentence, entry_id, method):
    out = set()
    for first_u, last_u in spans:
        out.add(
            Extraction(
                sentence.document_id,
                sentence.sentence_id,
                (view.orig[first_u], view.orig[last_u]),
                entry_id,
                method,
            )
        )
    return out


def _surfaces_of(sentence):
    return sentence.surfaces if hasattr(sentence, "surfaces") else list(sentence)


def match_entry(sentence, entry, opts, morphology=None, method=None):
    """All extractions of one lexicon entry in one sentence."""
    method = method or method_tag(opts)
    view = build_view(_surfaces_of(sentence))
    found = set()
    for variant in expand_placeholders(entry):
        elems = compile_pattern(variant, opts.mode, opts.case_sensitive, morphology)
        spans = _match_units(view, elems, opts)
        found |= _spans_to_extractions(spans, view, sentence, entry.type_id, method)
    return sorted(found, key=Extraction.sort_key)


def exact_match(sentence, variants, opts, entry_id="pattern", method=None):
    """Exact dictionary-form matching of pre-expanded variant surfaces."""
    method = method or method_tag(opts)
    view = build_view(_surfaces_of(sentence))
    found = set()
    for i, surface in enumerate(variants):
        entry = make_entry("%s/%d" % (entry_id, i), surface, "variant")
        elems = compile_pattern(entry, EXACT, opts.case_sensitive)
        spans = _match_units(view, elems, opts)
        found |= _spans_to_extractions(spans, view, sentence, entry_id, method)
    return sorted(found, key=Extraction.sort_key)


def fuzzy_match(sentence, variants, opts, entry_id="pattern", method=None):
    """Like exact_match but words admit up to 3 extra trailing letters."""
    method = method or method_tag(opts)
    view = build_view(_surfaces_of(sentence))
    found = set()
    for i, surface in enumerate(variants):
        entry = make_entry("%s/%d" % (entry_id, i), surface, "variant")
        elems = compile_pattern(entry, FUZZY, opts.case_sensitive)
        spans = _match_units(view, elems, opts)
        found |= _spans_to_extractions(spans, view, sentence, entry_id, method)
    return sorted(found, key=Extraction.sort_key)


def inflect_match(sentence, entry, opts, morphology, method=None):
    """Inflectional matching: every combination of word inflections."""
    if not entry.is_tagged:
        raise UntaggedEntryError(
            "entry %r has untagged words; run the tagging adapter first" % entry.id
        )
    inflect_opts = MatchOptions(opts.max_intervening, opts.case_sensitive, INFLECT)
    return match_entry(sentence, entry, inflect_opts, morphology, method)


def method_tag(opts):
    tag = opts.mode.lower()
    if opts.case_sensitive:
        tag += "-cs"
    return "%s-%dw" % (tag, opts.max_intervening)


def compile_lexicon(lexicon, opts, morphology=None):
    """Precompile every entry's placeholder variants for one matcher run."""
    compiled = []
    for entry in lexicon:
        if opts.mode == INFLECT and not entry.is_tagged:
            raise UntaggedEntryError(
                "entry %r has untagged words; run the tagging adapter first" % entry.id
            )
        for variant in expand_placeholders(entry):
            elems = compile_pattern(variant, opts.mode, opts.case_sensitive, morphology)
            compiled.append((entry.type_id, elems))
    return compiled


def extract_corpus(sentences, lexicon, opts, morphology=None, method=None):
    """Run one string matcher over a corpus; deterministic output order."""
    method = method or method_tag(opts)
    compiled = compile_lexicon(lexicon, opts, morphology)
    out = set()
    for sentence in sentences:
        out |= match_compiled(sentence, compiled, opts, method)
    return sorted(out, key=Extraction.sort_key)


def match_compiled(sentence, compiled, opts, method):
    """Match precompiled patterns against one sentence."""
    view = build_view(_surfaces_of(sentence))
    out = set()
    for type_id, elems in compiled:
        spans = _match_units(view, elems, opts)
        out |= _spans_to_extractions(spans, view, sentence, type_id, method)
    return out
