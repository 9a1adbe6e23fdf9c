"""Rule-based English inflection for nouns and verbs.

Replaces the external morpha/morphg pair with a self-contained analyser
and generator: regular suffix rules plus shipped irregular-form tables
(data/irregular_verbs.tsv, data/irregular_nouns.tsv). Only nouns and
verbs inflect; that is all PIE variant generation needs.

The analyser works generate-and-test: candidate lemmas are proposed by
suffix stripping and accepted only if generation reproduces the input
form, so analyze("houses") is "house", not "hous".
"""

import itertools
from dataclasses import dataclass
from importlib import resources

from .errors import UntaggedEntryError
from .lexicon import PLACEHOLDER_TOKENS

NOUN = "NOUN"
VERB = "VERB"

_VOWELS = set("aeiou")
_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")

# Verb lemmas whose stressed final syllable doubles despite two vowel
# groups are listed in the irregular table (admit, occur, ...).


@dataclass(frozen=True)
class InflectionSet:
    lemma: str
    pos: str
    forms: frozenset

    def __post_init__(self):
        assert self.lemma in self.forms
        limit = 2 if self.pos == NOUN else 5
        assert len(self.forms) <= limit
        assert all(self.forms)

    def ordered(self):
        """Lemma first, remaining forms sorted: a stable iteration order."""
        return [self.lemma] + sorted(self.forms - {self.lemma})


def _ends_sibilant(word):
    return word.endswith(_SIBILANT_ENDINGS)


def _vowel_groups(word):
    groups = 0
    prev = False
    for ch in word:
        now = ch in _VOWELS or ch == "y"
        if now and not prev:
            groups += 1
        prev = now
    return groups


def _doubles_final(word):
    # consonant-vowel-consonant ending, one vowel group: stop -> stopp-
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    if c in _VOWELS or c in "wxy" or b not in _VOWELS or a in _VOWELS:
        return False
    return _vowel_groups(word) == 1


def _third_singular(verb):
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        return verb[:-1] + "ies"
    if _ends_sibilant(verb) or verb.endswith("o"):
        return verb + "es"
    return verb + "s"


def _past(verb):
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        return verb[:-1] + "ied"
    if _doubles_final(verb):
        return verb + verb[-1] + "ed"
    return verb + "ed"


def _gerund(verb):
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith("ee") and verb != "be":
        return verb[:-1] + "ing"
    if _doubles_final(verb):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def _plural(noun):
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    if _ends_sibilant(noun):
        return noun + "es"
    return noun + "s"


def _load_table(filename):
    table = {}
    data = resources.files("piextract.data").joinpath(filename).read_text("utf-8")
    for line in data.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        lemma, pos, forms = line.split("\t")
        table[lemma] = tuple(f for f in forms.split(",") if f)
    return table


class Morphology:
    """Analyse and generate noun/verb inflections."""

    def __init__(self):
        self._irregular = {
            VERB: _load_table("irregular_verbs.tsv"),
            NOUN: _load_table("irregular_nouns.tsv"),
        }
        self._reverse = {VERB: {}, NOUN: {}}
        for pos, table in self._irregular.items():
            for lemma, forms in table.items():
                for form in forms:
                    self._reverse[pos].setdefault(form, lemma)

    def generate(self, lemma, pos):
        """All inflections of a base form, the base included."""
        lemma = lemma.lower()
        head, sep, core = self._split_hyphenated(lemma)
        irregular = self._irregular[pos].get(core)
        if pos == NOUN:
            if irregular is None:
                forms = {core, _plural(core)}
            else:
                forms = {core, *irregular}
        else:
            if irregular is not None:
                forms = {core, *irregular}
            else:
                past = _past(core)
                forms = {core, _third_singular(core), past, _gerund(core)}
        if sep:
            forms = {head + sep + f for f in forms}
        return InflectionSet(lemma, pos, frozenset(forms))

    def analyze(self, form, pos):
        """Base form of an inflected word; unknown patterns pass through."""
        form = form.lower()
        head, sep, core = self._split_hyphenated(form)
        lemma = self._analyze_core(core, pos)
        return head + sep + lemma

    def _split_hyphenated(self, word):
        # only the final element of hyphenated compounds inflects
        if "-" in word and not word.endswith("-"):
            head, _, core = word.rpartition("-")
            if core and head:
                return head + "", "-", core
        return "", "", word

    def _analyze_core(self, form, pos):
        table = self._irregular[pos]
        if form in table:
            return form  # already a known base (resolves lay-like clashes)
        irregular = self._reverse[pos].get(form)
        if irregular is not None:
            return irregular
        for cand in self._strip_candidates(form, pos):
            if cand and cand != form and form in self.generate(cand, pos).forms:
                return cand
        return form

    def _strip_candidates(self, form, pos):
        cands = []
        if form.endswith("ies"):
            cands.append(form[:-3] + "y")
        if form.endswith(("sses", "shes", "ches", "xes", "zes", "oes")):
            cands.append(form[:-2])
        if form.endswith("s") and not form.endswith("ss"):
            cands.append(form[:-1])
            if form.endswith("es"):
                cands.append(form[:-2])
        if pos == VERB:
            if form.endswith("ied"):
                cands.append(form[:-3] + "y")
            if form.endswith("ed"):
                # undoubling first (stopped -> stop); verbs legitimately end
                # in -ll/-ss/-ff/-zz, so those never undouble (spilled -> spill)
                if len(form) > 4 and form[-3] == form[-4] and form[-3] not in "lsfz":
                    cands.append(form[:-3])
                cands.append(form[:-2])
                cands.append(form[:-1])  # loved -> love
            if form.endswith("ing"):
                if len(form) > 5 and form[-4] == form[-5] and form[-4] not in "lsfz":
                    cands.append(form[:-4])  # stopping -> stop
                cands.append(form[:-3])
                cands.append(form[:-3] + "e")  # making -> make
        return cands

    def variant_forms(self, entry):
        """All inflectional variants of a PIE's dictionary form.

        The cartesian product of per-token form sets; only NOUN/VERB
        tokens inflect, determiners/punctuation/placeholders never do.
        The original dictionary form is always first.
        """
        if not entry.is_tagged:
            raise UntaggedEntryError(
                "entry %r has untagged words; run the tagging adapter first" % entry.id
            )
        per_token = []
        for w in entry.words:
            text = w.text
            low = text.lower()
            if (
                w.pos in (NOUN, VERB)
                and not w.is_determiner
                and not w.is_punct
                and low not in PLACEHOLDER_TOKENS
                and not low.endswith("'s")
            ):
                forms = self.generate(self.analyze(low, w.pos), w.pos).forms | {low}
                rest = sorted(forms - {text})
                per_token.append([text] + rest)
            else:
                per_token.append([text])
        seen = set()
        out = []
        for combo in itertools.product(*per_token):
            surface = " ".join(combo)
            if surface not in seen:
                seen.add(surface)
                out.append(surface)
        return out
