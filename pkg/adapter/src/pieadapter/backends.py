"""Pluggable tagger/parser backends.

A backend turns a token list into rows of (surface, lemma, upos, head,
deprel) with 1-based heads and a single root. The default "rules"
backend is a deterministic heuristic tagger/attacher: no model files,
byte-reproducible output, good enough for short dictionary forms and
plain declarative sentences. A spaCy backend is available when spaCy
and an English model are installed (select with --backend spacy).
"""

import re

DETERMINERS = {"a", "an", "the", "this", "that", "these", "those", "all",
               "every", "each", "no", "some", "any", "both"}
ADPOSITIONS = {"at", "in", "on", "of", "off", "to", "for", "with", "against",
               "behind", "below", "beyond", "by", "down", "over", "under",
               "up", "out", "from", "round", "around", "between", "near",
               "like", "before", "after", "into", "through", "across",
               "upon", "without", "within", "about", "toward", "towards"}
PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
            "us", "them", "my", "your", "his", "its", "our", "their", "one",
            "someone", "something", "anyone", "everyone", "oneself", "who",
            "what", "whose"}
AUXILIARIES = {"is", "are", "was", "were", "be", "been", "being", "am",
               "will", "would", "can", "could", "may", "might", "must",
               "shall", "should", "do", "does", "did", "has", "have", "had"}
CONJUNCTIONS = {"and", "or", "but", "nor"}
ADVERBS = {"too", "very", "well", "never", "always", "again", "once", "now",
           "then", "there", "here", "just", "still", "yet", "not", "also",
           "often", "finally", "completely", "quickly", "away", "back"}
PUNCT_RE = re.compile(r"^\W+$", re.UNICODE)

# tiny irregular lemma map; everything else lowercases
LEMMA_MAP = {
    "is": "be", "are": "be", "was": "be", "were": "be", "been": "be",
    "being": "be", "am": "be", "has": "have", "had": "have", "did": "do",
    "does": "do", "done": "do", "went": "go", "gone": "go", "goes": "go",
    "took": "take", "taken": "take", "men": "man", "women": "woman",
    "feet": "foot", "teeth": "tooth", "children": "child", "mice": "mouse",
}

COMMON_VERBS = {
    "take", "make", "have", "do", "go", "get", "give", "keep", "let", "put",
    "see", "say", "come", "know", "think", "look", "want", "use", "find",
    "tell", "ask", "work", "call", "try", "need", "feel", "leave", "run",
    "jump", "lose", "spill", "kick", "break", "cut", "pull", "raise", "hit",
    "hold", "pass", "rock", "steal", "bend", "bury", "chew", "cook", "draw",
    "fight", "beat", "bite", "carry", "catch", "cross", "drop", "eat",
    "fill", "fly", "grab", "kill", "lead", "lift", "miss", "move", "pave",
    "pay", "play", "press", "push", "read", "ride", "ring", "rule", "seal",
    "set", "shoot", "sing", "sink", "sit", "smell", "speak", "spend",
    "stand", "stay", "stir", "swim", "throw", "tie", "turn", "walk", "wave",
    "wear", "win", "write", "rub", "touch", "laugh", "cast", "sleep", "slip",
}

_VERB_SUFFIXES = ("ed", "ing", "en")


def _lemma(surface, upos):
    low = surface.lower()
    if low in LEMMA_MAP:
        return LEMMA_MAP[low]
    if upos == "VERB":
        for suffix, repl in (("ies", "y"), ("sses", "ss"), ("ches", "ch"),
                             ("shes", "sh"), ("ing", ""), ("ed", ""), ("s", "")):
            if low.endswith(suffix) and len(low) > len(suffix) + 1:
                stem = low[: -len(suffix)] + repl
                if suffix in ("ing", "ed") and len(stem) > 2 \
                        and stem[-1] == stem[-2] and stem[-1] not in "lsfz":
                    stem = stem[:-1]
                return stem
    if upos == "NOUN":
        if low.endswith("ies") and len(low) > 4:
            return low[:-3] + "y"
        if low.endswith("s") and not low.endswith("ss") and len(low) > 3:
            return low[:-1]
    if upos == "PROPN":
        return surface
    return low


class RuleBackend:
    """Deterministic heuristic tagger and tree builder."""

    name = "rules"

    def tag(self, tokens):
        """[(surface, upos)] per token."""
        tags = []
        for i, tok in enumerate(tokens):
            low = tok.lower()
            if PUNCT_RE.match(tok):
                upos = "PUNCT"
            elif low in ("—", "—'s"):
                upos = "X"
            elif low in DETERMINERS:
                upos = "DET"
            elif low in ADPOSITIONS:
                upos = "ADP"
            elif low in CONJUNCTIONS:
                upos = "CCONJ"
            elif low in PRONOUNS or low.endswith("'s") and low[:-2] in PRONOUNS:
                upos = "PRON"
            elif low in AUXILIARIES:
                upos = "AUX"
            elif low in ADVERBS or low.endswith("ly"):
                upos = "ADV"
            elif tok[:1].isupper() and i > 0:
                upos = "PROPN"
            elif low in COMMON_VERBS:
                upos = "VERB"
            elif low.endswith(_VERB_SUFFIXES) and (
                i == 0 or tags[i - 1][1] in ("AUX", "PRON", "NOUN", "PROPN")
            ) and low not in ("everything", "nothing"):
                upos = "VERB"
            else:
                upos = "NOUN"
            tags.append((tok, upos))
        # a bare AUX with no other verb is the main verb
        if not any(u == "VERB" for _, u in tags):
            for i, (tok, upos) in enumerate(tags):
                if upos == "AUX":
                    tags[i] = (tok, "VERB")
                    break
        return tags

    def parse(self, tokens):
        """Rows (surface, lemma, upos, head, deprel), heads 1-based."""
        tagged = self.tag(tokens)
        n = len(tagged)
        upos = [u for _, u in tagged]

        root = None
        for i, u in enumerate(upos):
            if u == "VERB":
                root = i
                break
        if root is None and "ADP" in upos:
            # verbless PP fragment ("in a nutshell"): the adposition heads
            # it, mirroring how the same phrase attaches inside a sentence
            root = upos.index("ADP")
        if root is None:
            for pref in ("NOUN", "PROPN", "ADJ", "ADV"):
                for i in range(n - 1, -1, -1):
                    if upos[i] == pref:
                        root = i
                        break
                if root is not None:
                    break
        if root is None:
            root = 0

        def next_nominal(start):
            for j in range(start, n):
                if upos[j] in ("NOUN", "PROPN", "PRON"):
                    return j
                if upos[j] in ("VERB", "PUNCT"):
                    return None
            return None

        heads = [0] * n
        rels = ["dep"] * n
        for i in range(n):
            if i == root:
                heads[i] = 0
                rels[i] = "root"
                continue
            u = upos[i]
            if u == "DET":
                target = next_nominal(i + 1)
                heads[i] = (target if target is not None else root) + 1
                rels[i] = "det"
            elif u == "ADJ" or (u == "X" and next_nominal(i + 1) is not None):
                target = next_nominal(i + 1)
                heads[i] = (target if target is not None else root) + 1
                rels[i] = "amod"
            elif u == "ADP":
                heads[i] = root + 1
                rels[i] = "prep"
                obj = next_nominal(i + 1)
                if obj is not None:
                    heads[obj] = i + 1
                    rels[obj] = "pobj"
            elif u == "AUX":
                heads[i] = root + 1
                lemma = _lemma(tagged[i][0], "AUX")
                passive = (
                    lemma in ("be", "get")
                    and root > i
                    and tagged[root][0].lower().endswith(("ed", "en"))
                )
                rels[i] = "auxpass" if passive else "aux"
            elif u in ("NOUN", "PROPN", "PRON"):
                if heads[i]:
                    continue  # already attached as pobj
                heads[i] = root + 1
                if i < root:
                    rels[i] = "nsubj"
                else:
                    rels[i] = "pobj" if upos[root] == "ADP" else "dobj"
            elif u == "ADV":
                heads[i] = root + 1
                rels[i] = "advmod"
            elif u == "CCONJ":
                heads[i] = root + 1
                rels[i] = "cc"
            elif u == "PUNCT":
                heads[i] = root + 1
                rels[i] = "punct"
            elif u == "X":
                heads[i] = root + 1
                rels[i] = "dep"
            else:
                heads[i] = root + 1

        # passive subject: nsubj of a verb with an auxpass child
        has_auxpass = any(r == "auxpass" and heads[i] == root + 1
                          for i, r in enumerate(rels))
        if has_auxpass:
            for i in range(n):
                if rels[i] == "nsubj" and heads[i] == root + 1:
                    rels[i] = "nsubjpass"

        rows = []
        for i, (surface, u) in enumerate(tagged):
            rows.append((surface, _lemma(surface, u), u, heads[i], rels[i]))
        return rows


class SpacyBackend:
    """spaCy-based backend (optional)."""

    name = "spacy"

    def __init__(self, model="en_core_web_sm"):
        import spacy

        self._nlp = spacy.load(model)

    def tag(self, tokens):
        doc = self._nlp(" ".join(tokens))
        return [(t.text, t.pos_) for t in doc]

    def parse(self, tokens):
        doc = self._nlp(" ".join(tokens))
        rows = []
        for t in doc:
            head = 0 if t.head is t else t.head.i + 1
            rel = "root" if head == 0 else t.dep_
            rows.append((t.text, t.lemma_, t.pos_, head, rel))
        return rows


def get_backend(name):
    if name in (None, "", "rules"):
        return RuleBackend()
    if name == "spacy":
        try:
            return SpacyBackend()
        except ImportError as err:
            raise RuntimeError(
                "spacy backend requested but spaCy is not installed: %s" % err
            ) from None
    raise RuntimeError("unknown backend %r (available: rules, spacy)" % name)
