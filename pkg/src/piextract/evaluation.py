"""Scoring extractions against gold annotations; combination; agreement.

A true positive is the correct PIE type in the correct sentence; spans
are ignored and extractions are deduplicated to (entry, sentence) pairs
before counting. Precision/recall/F1 are percentages, reported to two
decimals with half-up rounding. Gold records labelled "other" still
count as PIEs: the extraction task is sense-agnostic.
"""

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .errors import GoldFileError
from .string_match import Extraction

SENSES = ("i", "l", "o")


@dataclass(frozen=True)
class GoldRecord:
    document_id: str
    sentence_id: str
    entry_id: str
    is_pie: bool
    sense: str | None = None

    def __post_init__(self):
        if self.is_pie:
            if self.sense is not None and self.sense not in SENSES:
                raise GoldFileError("bad sense %r" % self.sense)
        elif self.sense is not None:
            raise GoldFileError("sense label on a non-PIE record")

    def key(self):
        return (self.document_id, self.sentence_id, self.entry_id)


@dataclass
class EvalReport:
    true_positives: int
    false_positives: int
    false_negatives: int
    per_type: dict = field(default_factory=dict)

    @property
    def precision(self):
        denom = self.true_positives + self.false_positives
        return 100.0 * self.true_positives / denom if denom else 0.0

    @property
    def recall(self):
        denom = self.true_positives + self.false_negatives
        return 100.0 * self.true_positives / denom if denom else 0.0

    @property
    def f1(self):
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if (p + r) else 0.0

    def as_dict(self):
        d = {
            "true_positives": self.true_positives,
            "false_positives": self.false_positives,
            "false_negatives": self.false_negatives,
            "precision": fmt_pct(self.precision),
            "recall": fmt_pct(self.recall),
            "f1": fmt_pct(self.f1),
        }
        if self.per_type:
            d["per_type"] = {
                entry_id: rep.as_dict() for entry_id, rep in self.per_type.items()
            }
        return d


def fmt_pct(value):
    """Two decimals, half-up: 59.875 -> '59.88' (table convention)."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _dedup_keys(extractions):
    return {e.key() for e in extractions}


def score(extractions, gold):
    """EvalReport over deduplicated (entry, sentence) pairs."""
    found = _dedup_keys(extractions)
    gold_pie = {g.key() for g in gold if g.is_pie}
    tp = len(found & gold_pie)
    fp = len(found - gold_pie)
    fn = len(gold_pie - found)
    return EvalReport(tp, fp, fn)


def per_type_report(extractions, gold, top_n=None):
    """Per-entry scores, most frequent gold types first.

    Returns [(entry_id, gold_count, EvalReport)]; types absent from both
    extractions and gold are omitted; ties break on entry id.
    """
    found = _dedup_keys(extractions)
    gold_pie = {g.key() for g in gold if g.is_pie}
    types = sorted({k[2] for k in found | gold_pie})
    rows = []
    for entry_id in types:
        f = {k for k in found if k[2] == entry_id}
        g = {k for k in gold_pie if k[2] == entry_id}
        rows.append(
            (entry_id, len(g), EvalReport(len(f & g), len(f - g), len(g - f)))
        )
    rows.sort(key=lambda r: (-r[1], r[0]))
    if top_n is not None:
        rows = rows[:top_n]
    return rows


def combine_union(extraction_sets):
    """Union extractor outputs on (entry, sentence) keys.

    The method field of a combined extraction lists every contributing
    matcher, "+"-joined; the span comes from the first contributor in
    input order (spans are ignored by scoring).
    """
    if len(extraction_sets) < 2:
        raise GoldFileError("union needs at least 2 extraction sets")
    merged = {}
    for extractions in extraction_sets:
        for e in extractions:
            key = e.key()
            if key not in merged:
                merged[key] = e
            else:
                kept = merged[key]
                methods = sorted(set(kept.method.split("+")) | set(e.method.split("+")))
                merged[key] = Extraction(
                    kept.document_id, kept.sentence_id, kept.span,
                    kept.entry_id, "+".join(methods),
                )
    return sorted(merged.values(), key=Extraction.sort_key)


def fleiss_kappa(labels):
    """Fleiss' Kappa over an items x annotators label matrix.

    Standard definition: observed mean per-item agreement against
    chance agreement from category marginals. Perfect observed
    agreement returns 1.0 (also when chance agreement is 1).
    """
    if not labels:
        raise GoldFileError("empty label matrix")
    n_raters = len(labels[0])
    if n_raters < 2:
        raise GoldFileError("Fleiss' kappa needs >= 2 annotators")
    for row in labels:
        if len(row) != n_raters:
            raise GoldFileError("all items must have the same number of annotations")

    categories = sorted({lab for row in labels for lab in row})
    n_items = len(labels)
    total = n_items * n_raters

    p_i_sum = 0.0
    marginals = {c: 0 for c in categories}
    for row in labels:
        counts = {}
        for lab in row:
            counts[lab] = counts.get(lab, 0) + 1
            marginals[lab] += 1
        p_i_sum += sum(c * c for c in counts.values()) - n_raters
    p_bar = p_i_sum / (n_items * n_raters * (n_raters - 1))
    p_e = sum((m / total) ** 2 for m in marginals.values())
    if p_bar == 1.0:
        return 1.0
    return (p_bar - p_e) / (1 - p_e)


def load_gold(path):
    """Gold TSV: doc<TAB>sent<TAB>entry_id<TAB>pie(y/n)<TAB>sense(i/l/o)."""
    records = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) not in (4, 5):
                raise GoldFileError("%s:%d: expected 4 or 5 columns" % (path, lineno))
            doc, sent, entry_id, pie = cols[0], cols[1], cols[2], cols[3]
            if pie not in ("y", "n"):
                raise GoldFileError("%s:%d: pie column must be y or n" % (path, lineno))
            sense = cols[4].strip() if len(cols) == 5 and cols[4].strip() else None
            key = (doc, sent, entry_id)
            if key in seen:
                raise GoldFileError(
                    "%s:%d: duplicate gold record for %s" % (path, lineno, key)
                )
            seen.add(key)
            try:
                records.append(GoldRecord(doc, sent, entry_id, pie == "y", sense))
            except GoldFileError as err:
                raise GoldFileError("%s:%d: %s" % (path, lineno, err)) from None
    return records


def load_extractions(path):
    """Extraction TSV: doc<TAB>sent<TAB>entry_id<TAB>first<TAB>last<TAB>method."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 6:
                raise GoldFileError("%s:%d: expected 6 columns" % (path, lineno))
            try:
                span = (int(cols[3]), int(cols[4]))
            except ValueError:
                raise GoldFileError("%s:%d: bad span" % (path, lineno)) from None
            out.append(Extraction(cols[0], cols[1], span, cols[2], cols[5]))
    return out


def save_extractions(extractions, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# doc\tsent\tentry_id\tfirst\tlast\tmethod\n")
        for e in sorted(set(extractions), key=Extraction.sort_key):
            fh.write(
                "%s\t%s\t%s\t%d\t%d\t%s\n"
                % (e.document_id, e.sentence_id, e.entry_id, e.span[0], e.span[1], e.method)
            )
