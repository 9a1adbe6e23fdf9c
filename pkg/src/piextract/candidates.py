"""Pre-extraction of annotation candidates.

A sentence is a candidate for an entry when every defining word (all
words except determiners and punctuation) appears in some inflectional
form. Two noise limits apply:

  Restriction 1: entries without a verb require dictionary word order.
  Restriction 2: entries made of prepositions/determiners plus a single
  noun allow at most 3 tokens between consecutive matched words.

Determiners are matched opportunistically (and highlighted) when they
occur in position, but never required.
"""

from dataclasses import dataclass

from .errors import GoldFileError, UntaggedEntryError
from .lexicon import PLACEHOLDER_TOKENS
from .morphology import NOUN, VERB
from .tokens import normalize_apostrophes, split_hyphenated

GAP_LIMIT = 3

R_ORDERED = "ordered"
R_GAP = "gap<=3"


@dataclass(frozen=True)
class Candidate:
    entry_id: str
    document_id: str
    sentence_id: str
    positions: tuple  # 1-based token indices, strictly increasing
    restrictions: tuple

    def __post_init__(self):
        assert all(a < b for a, b in zip(self.positions, self.positions[1:]))


def _fold(text):
    return normalize_apostrophes(text).lower()


@dataclass(frozen=True)
class _EntryPlan:
    entry_id: str
    slots: tuple        # (forms frozenset, required flag) per dictionary word
    ordered: bool       # Restriction 1 applies
    gap_limited: bool   # Restriction 2 applies
    restrictions: tuple


def _entry_plan(entry, morphology):
    if not entry.is_tagged:
        raise UntaggedEntryError(
            "entry %r has untagged words; run the tagging adapter first" % entry.id
        )
    slots = []
    tags = []
    for w in entry.words:
        if w.is_punct:
            continue
        low = _fold(w.text)
        tags.append(w.pos)
        # placeholders generalise over fillers: never require them
        required = not w.is_determiner and low not in PLACEHOLDER_TOKENS
        if w.pos in (NOUN, VERB) and required and not low.endswith("'s"):
            forms = morphology.generate(morphology.analyze(low, w.pos), w.pos).forms | {low}
        elif low.endswith("'s") and len(low) > 2:
            forms = {low, low[:-2]}  # split-off possessive marker tokenization
        else:
            forms = {low}
        slots.append((frozenset(forms), required))
    has_verb = VERB in tags
    ordered = not has_verb
    simple_tags = {t for t in tags if t is not None}
    gap_limited = (
        not has_verb
        and tags.count(NOUN) == 1
        and simple_tags <= {"ADP", "DET", NOUN}
    )
    restrictions = tuple(
        r for r, on in ((R_ORDERED, ordered), (R_GAP, gap_limited)) if on
    )
    return _EntryPlan(entry.type_id, tuple(slots), ordered, gap_limited, restrictions)


def _match_ordered(tokens, slots, gap_limited):
    """Leftmost in-order assignment; optional slots fill opportunistically.

    Backtracks so a missing optional determiner never blocks the required
    words; with gap_limited, at most GAP_LIMIT tokens may intervene
    between consecutive matched positions.
    """
    n = len(tokens)

    def search(si, prev_pos):
        if si == len(slots):
            return []
        forms, required = slots[si]
        start = 0 if prev_pos is None else prev_pos + 1
        end = n
        if gap_limited and prev_pos is not None:
            end = min(n, prev_pos + GAP_LIMIT + 2)
        for pos in range(start, end):
            if tokens[pos] in forms:
                rest = search(si + 1, pos)
                if rest is not None:
                    return [pos] + rest
        if not required:
            return search(si + 1, prev_pos)
        return None

    return search(0, None)


def _match_unordered(tokens, slots):
    """Any-order matching: each slot takes its leftmost unused token."""
    used = set()
    positions = []
    for forms, required in slots:
        found = None
        for pos, tok in enumerate(tokens):
            if pos not in used and tok in forms:
                found = pos
                break
        if found is None:
            if required:
                return None
            continue
        used.add(found)
        positions.append(found)
    return sorted(positions)


def extract_candidates(sentences, lexicon, morphology, apply_restrictions=True):
    """All (entry, sentence) candidate pairs over a tokenized corpus.

    `sentences` yields objects with document_id, sentence_id and
    surfaces. One Candidate per qualifying pair, with matched token
    positions for annotator highlighting. apply_restrictions=False
    disables the two noise limits (the original, noisier heuristic).
    """
    plans = [_entry_plan(e, morphology) for e in lexicon]
    if not apply_restrictions:
        plans = [
            _EntryPlan(p.entry_id, p.slots, False, False, ()) for p in plans
        ]
    out = []
    for sentence in sentences:
        # same view as the string matchers: hyphenated tokens split
        tokens = []
        orig = []
        for i, raw in enumerate(sentence.surfaces, 1):
            for part in split_hyphenated(_fold(raw)):
                tokens.append(part)
                orig.append(i)
        token_set = set(tokens)
        for plan in plans:
            if any(
                required and not (forms & token_set)
                for forms, required in plan.slots
            ):
                continue
            if plan.ordered:
                positions = _match_ordered(tokens, plan.slots, plan.gap_limited)
            else:
                positions = _match_unordered(tokens, plan.slots)
            if positions is None:
                continue
            mapped = []
            for p in positions:
                if not mapped or orig[p] > mapped[-1]:
                    mapped.append(orig[p])
            out.append(
                Candidate(
                    plan.entry_id,
                    sentence.document_id,
                    sentence.sentence_id,
                    tuple(mapped),
                    plan.restrictions,
                )
            )
    out.sort(key=lambda c: (c.document_id, _sent_key(c.sentence_id), c.entry_id))
    return out


def _sent_key(sid):
    return (0, int(sid)) if sid.isdigit() else (1, sid)


def render_annotation_sheet(candidates, sentences, out_path, lexicon=None):
    """Write the annotation sheet: one row per candidate, labels blank.

    Matched tokens are wrapped in ** markers; the pie and sense columns
    are left for the annotators (pie: y/n, sense: i/l/o/?).
    """
    by_id = {(s.document_id, s.sentence_id): s for s in sentences}
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# doc\tsent\tentry_id\tsurface\tmarked_sentence\tpie\tsense\n")
        for cand in candidates:
            sent = by_id.get((cand.document_id, cand.sentence_id))
            if sent is None:
                raise GoldFileError(
                    "candidate references unknown sentence %s/%s"
                    % (cand.document_id, cand.sentence_id)
                )
            marked = []
            wanted = set(cand.positions)
            for i, tok in enumerate(sent.surfaces, 1):
                marked.append("**%s**" % tok if i in wanted else tok)
            surface = ""
            if lexicon is not None:
                entry = lexicon.get(cand.entry_id)
                surface = entry.surface if entry else ""
            fh.write(
                "%s\t%s\t%s\t%s\t%s\t\t\n"
                % (cand.document_id, cand.sentence_id, cand.entry_id, surface, " ".join(marked))
            )
