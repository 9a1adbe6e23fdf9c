"""Pairwise overlap between idiom resources.

Exact overlap is case-insensitive surface identity. On top of that,
three heuristics flag near-duplicate candidate pairs for human review
(scope variation, word-order variation, small edits):

  SUBSTRING_GAPPED  one entry's tokens are a subsequence of the other's
  WORD_SUBSET       one entry's word multiset (minus determiners) is
                    contained in the other's
  LEV_RATIO         Levenshtein ratio > 0.8

Accepted review decisions feed the overlap matrix; without decisions the
matrix reports exact counts and pending candidate counts separately.
"""

from dataclasses import dataclass, field

from .errors import ReviewFileError
from .lexicon import DETERMINERS, tokenize_surface

SUBSTRING_GAPPED = "SUBSTRING_GAPPED"
WORD_SUBSET = "WORD_SUBSET"
LEV_RATIO = "LEV_RATIO"

LEV_THRESHOLD = 0.8


@dataclass(frozen=True)
class CandidatePair:
    a_id: str
    b_id: str
    a_surface: str
    b_surface: str
    heuristics: tuple

    def __post_init__(self):
        assert self.heuristics


@dataclass
class OverlapReport:
    resource_names: tuple
    sizes: tuple
    exact_count: int
    candidate_pairs: list = field(default_factory=list)
    accepted_count: int = 0

    def percentages(self, include_accepted=True):
        matched = self.exact_count + (self.accepted_count if include_accepted else 0)
        out = []
        for size in self.sizes:
            out.append(100.0 * matched / size if size else 0.0)
        return tuple(out)


def levenshtein_ratio(a, b):
    """(|a| + |b| - D) / (|a| + |b|) with substitution cost 2.

    The ratio() definition of the python-Levenshtein package; 1.0 iff
    the strings are equal (two empty strings included).
    """
    total = len(a) + len(b)
    if total == 0:
        return 1.0
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        cur = [i]
        for j in range(1, len(b) + 1):
            sub = prev[j - 1] + (0 if a[i - 1] == b[j - 1] else 2)
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, sub))
        prev = cur
    return (total - prev[len(b)]) / total


def _is_subsequence(shorter, longer):
    it = iter(longer)
    return all(tok in it for tok in shorter)


def _word_multiset(tokens):
    counts = {}
    for tok in tokens:
        if tok in DETERMINERS:
            continue
        counts[tok] = counts.get(tok, 0) + 1
    return counts


def _multiset_subset(small, big):
    return all(big.get(tok, 0) >= n for tok, n in small.items())


def exact_overlap(a, b):
    """Case-insensitive exact matches: (count, % of |a|, % of |b|)."""
    surfaces_a = {e.norm_surface for e in a}
    surfaces_b = {e.norm_surface for e in b}
    count = len(surfaces_a & surfaces_b)
    pct_a = 100.0 * count / len(a) if len(a) else 0.0
    pct_b = 100.0 * count / len(b) if len(b) else 0.0
    return count, pct_a, pct_b


def candidate_pairs(a, b):
    """Non-identical pairs flagged by at least one heuristic.

    Exact matches are excluded (already counted); output is sorted by
    (a.id, b.id) and each pair carries every heuristic that fired.
    """
    out = []
    for ea in a:
        norm_a = ea.norm_surface
        toks_a = tokenize_surface(norm_a)
        set_a = _word_multiset(toks_a)
        for eb in b:
            norm_b = eb.norm_surface
            if norm_a == norm_b:
                continue
            toks_b = tokenize_surface(norm_b)
            fired = []
            if _is_subsequence(toks_a, toks_b) or _is_subsequence(toks_b, toks_a):
                fired.append(SUBSTRING_GAPPED)
            set_b = _word_multiset(toks_b)
            if _multiset_subset(set_a, set_b) or _multiset_subset(set_b, set_a):
                fired.append(WORD_SUBSET)
            if levenshtein_ratio(norm_a, norm_b) > LEV_THRESHOLD:
                fired.append(LEV_RATIO)
            if fired:
                out.append(CandidatePair(ea.id, eb.id, ea.surface, eb.surface, tuple(fired)))
    out.sort(key=lambda p: (p.a_id, p.b_id))
    return out


def load_decisions(path):
    """Review file: pairA_id<TAB>pairB_id<TAB>accept|reject.

    Extra columns (e.g. the heuristics/surfaces of an edited candidate
    file) are ignored, so a candidates-out file with its third column
    rewritten to accept/reject is a valid review file.
    """
    decisions = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) < 3 or cols[2] not in ("accept", "reject"):
                raise ReviewFileError(
                    "line %d: expected pairA<TAB>pairB<TAB>accept|reject" % lineno
                )
            decisions[(cols[0], cols[1])] = cols[2]
    return decisions


def overlap_matrix(resources, decisions=None):
    """Pairwise OverlapReport for every ordered resource pair.

    With review decisions, accepted candidates count toward the overlap
    percentage; a decision naming an unknown pair is an error. Returns
    {(name_i, name_j): OverlapReport} including the 100% diagonal.
    """
    reports = {}
    known_pairs = set()
    for lex_a in resources:
        for lex_b in resources:
            if lex_a.name == lex_b.name:
                reports[(lex_a.name, lex_b.name)] = OverlapReport(
                    (lex_a.name, lex_b.name), (len(lex_a), len(lex_b)), len(lex_a)
                )
                continue
            count, _, _ = exact_overlap(lex_a, lex_b)
            pairs = candidate_pairs(lex_a, lex_b)
            known_pairs.update((p.a_id, p.b_id) for p in pairs)
            accepted = 0
            if decisions:
                # a pair is judged once; the decision covers both orientations
                accepted = sum(
                    1
                    for p in pairs
                    if decisions.get((p.a_id, p.b_id)) == "accept"
                    or decisions.get((p.b_id, p.a_id)) == "accept"
                )
            reports[(lex_a.name, lex_b.name)] = OverlapReport(
                (lex_a.name, lex_b.name), (len(lex_a), len(lex_b)), count, pairs, accepted
            )
    if decisions:
        for pair in decisions:
            if pair not in known_pairs and (pair[1], pair[0]) not in known_pairs:
                raise ReviewFileError("decision for unknown pair %s/%s" % pair)
    return reports
