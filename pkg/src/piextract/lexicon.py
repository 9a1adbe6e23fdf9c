"""Idiom lexicon loading, normalisation and expansion.

A lexicon holds potentially idiomatic expressions (PIEs) in dictionary
form. Loading collapses case-insensitive duplicates, drops single-word
entries, and expands parenthetical material ("a tough (or hard) nut (to
crack)") into explicit variants. Placeholder expansion (one's, someone's,
something('s), the em-dash wildcard) is a separate step because string
matchers consume the expanded forms while the parse matcher keeps the
placeholders as wildcard nodes.

File format (UTF-8, tab-separated, `#` comments ignored):

    id<TAB>surface<TAB>source[<TAB>word/POS word/POS ...]

A line without tabs is read as a bare surface; id and source are derived.
"""

import re
from dataclasses import dataclass, replace

from .errors import LexiconError
from .tokens import WILDCARD, is_punct_token, normalize_apostrophes

DETERMINERS = frozenset({"a", "an", "the"})

POSSESSIVE_PRONOUNS = ("my", "your", "his", "her", "its", "our", "their")
OBJECTIVE_PRONOUNS = ("me", "you", "him", "her", "it", "us", "them")

POSS_WILDCARD = WILDCARD + "'s"

# Placeholder kinds
POSSESSIVE_ONE = "POSSESSIVE_ONE"
POSSESSIVE_SOMEONE = "POSSESSIVE_SOMEONE"
OBJECT_SOMEONE = "OBJECT_SOMEONE"
OBJECT_SOMETHING = "OBJECT_SOMETHING"
ANY_WORD = "ANY_WORD"

# Bare "one" is never a placeholder: not distinguishable from the numeral.
PLACEHOLDER_TOKENS = {
    "one's": POSSESSIVE_ONE,
    "someone's": POSSESSIVE_SOMEONE,
    "something's": POSSESSIVE_SOMEONE,
    "someone": OBJECT_SOMEONE,
    "something": OBJECT_SOMETHING,
    WILDCARD: ANY_WORD,
    POSS_WILDCARD: POSSESSIVE_SOMEONE,
}

# Tokens expanded by expand_placeholders; the wildcards pass through.
_EXPANDABLE = {"one's", "someone's", "something's", "someone", "something"}

_TRAILING_PUNCT = ".,;:!?"


@dataclass(frozen=True)
class Word:
    text: str
    pos: str | None = None

    @property
    def is_determiner(self):
        return self.text.lower() in DETERMINERS

    @property
    def is_punct(self):
        return is_punct_token(self.text)


@dataclass(frozen=True)
class PieEntry:
    """One dictionary idiom in canonical tokenized form."""

    id: str
    surface: str
    source: str
    words: tuple = ()
    parent_id: str | None = None

    @property
    def placeholders(self):
        """(position, kind) pairs for placeholder tokens in `words`."""
        out = []
        for i, w in enumerate(self.words):
            kind = PLACEHOLDER_TOKENS.get(w.text.lower())
            if kind is not None:
                out.append((i, kind))
        return tuple(out)

    @property
    def norm_surface(self):
        return normalize_surface(self.surface)

    @property
    def type_id(self):
        """Identifier extractions report: the parent for runtime variants."""
        return self.parent_id or self.id

    @property
    def is_tagged(self):
        return all(
            w.pos is not None or w.is_punct or w.text.lower() in PLACEHOLDER_TOKENS
            for w in self.words
        )

    def content_words(self):
        return [w for w in self.words if not w.is_punct]


class Lexicon:
    """An id-keyed, insertion-ordered set of PieEntry objects."""

    def __init__(self, name, entries=()):
        self.name = name
        self._by_id = {}
        for e in entries:
            self.add(e)

    def add(self, entry):
        if entry.id in self._by_id:
            raise LexiconError("duplicate entry id %r in lexicon %r" % (entry.id, self.name))
        self._by_id[entry.id] = entry

    def __iter__(self):
        return iter(self._by_id.values())

    def __len__(self):
        return len(self._by_id)

    def __contains__(self, entry_id):
        return entry_id in self._by_id

    def get(self, entry_id):
        return self._by_id.get(entry_id)

    def size(self):
        return len(self._by_id)

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return list(self) == list(other)

    def __repr__(self):
        return "Lexicon(%r, %d entries)" % (self.name, len(self))


def normalize_surface(surface):
    return " ".join(normalize_apostrophes(surface).lower().split())


def tokenize_surface(surface):
    """Dictionary-form tokenizer: whitespace split + trailing-punct split.

    "day in, day out" -> [day, in, ,, day, out]; "—'s" and "someone's"
    stay whole.
    """
    toks = []
    for raw in normalize_apostrophes(surface).split():
        tail = []
        while len(raw) > 1 and raw[-1] in _TRAILING_PUNCT:
            tail.append(raw[-1])
            raw = raw[:-1]
        if raw:
            toks.append(raw)
        toks.extend(reversed(tail))
    return toks


def slugify(surface):
    slug = re.sub(r"[^a-z0-9]+", "_", normalize_surface(surface)).strip("_")
    return slug or "entry"


def make_entry(entry_id, surface, source, tags=None, parent_id=None):
    """Build a PieEntry from a surface string and optional POS tag list."""
    tokens = tokenize_surface(surface)
    if tags is not None and len(tags) != len(tokens):
        raise LexiconError(
            "tagged form has %d tags for %d tokens in %r" % (len(tags), len(tokens), surface)
        )
    words = tuple(
        Word(tok, tags[i] if tags is not None else None) for i, tok in enumerate(tokens)
    )
    return PieEntry(entry_id, surface, source, words, parent_id)


def expand_parentheticals(raw_form, exceptions=None):
    """All dictionary-form variants encoded by parenthetical material.

    "(or X)" alternates X against the immediately preceding word group of
    the same length (falling back to the single preceding word); any other
    group is optional. Output is deterministic: inclusion (or the original
    wording) first, groups applied left to right. A form without
    parentheses comes back as itself.
    """
    if exceptions:
        hit = exceptions.get(raw_form.strip())
        if hit is not None:
            return list(hit)
    if "(" not in raw_form and ")" not in raw_form:
        return [" ".join(raw_form.split())] if raw_form.strip() else [raw_form]

    segments = []  # (is_group, text)
    depth = 0
    buf = []
    for ch in raw_form:
        if ch == "(":
            depth += 1
            if depth > 1:
                raise LexiconError("nested parentheses in %r" % raw_form)
            segments.append((False, "".join(buf)))
            buf = []
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise LexiconError("unbalanced parentheses in %r" % raw_form)
            segments.append((True, "".join(buf)))
            buf = []
        else:
            buf.append(ch)
    if depth != 0:
        raise LexiconError("unbalanced parentheses in %r" % raw_form)
    segments.append((False, "".join(buf)))

    variants = [[]]
    for is_group, text in segments:
        words = text.split()
        if not is_group:
            for v in variants:
                v.extend(words)
            continue
        if not words:
            continue
        if words[0].lower() == "or":
            alts = [[]]
            for w in words[1:]:
                if w.lower() == "or":
                    alts.append([])
                else:
                    alts[-1].append(w)
            alts = [a for a in alts if a]
            if not alts:
                raise LexiconError("empty alternation in %r" % raw_form)
            expanded = []
            for v in variants:
                expanded.append(list(v))
                for alt in alts:
                    n = len(alt) if len(v) >= len(alt) else 1
                    if n > len(v):
                        raise LexiconError("alternation lacks a target in %r" % raw_form)
                    expanded.append(v[:-n] + alt)
            variants = expanded
        else:
            expanded = []
            for v in variants:
                expanded.append(v + words)
                expanded.append(list(v))
            variants = expanded
    return [" ".join(v) for v in variants]


def expand_placeholders(entry):
    """Expand pronoun placeholders into concrete + wildcard variants.

    someone's/something's -> the seven possessive pronouns plus the
    possessive wildcard ("a thorn in —'s side"); one's -> pronouns only;
    someone/something -> the seven objective pronouns plus the any-word
    wildcard. Entries without placeholders pass through unchanged.
    """
    options = []
    expandable = False
    for w in entry.words:
        low = w.text.lower()
        if low in _EXPANDABLE:
            expandable = True
            kind = PLACEHOLDER_TOKENS[low]
            if kind == POSSESSIVE_ONE:
                options.append([Word(p, "PRON") for p in POSSESSIVE_PRONOUNS])
            elif kind == POSSESSIVE_SOMEONE:
                options.append(
                    [Word(p, "PRON") for p in POSSESSIVE_PRONOUNS] + [Word(POSS_WILDCARD)]
                )
            else:
                options.append(
                    [Word(p, "PRON") for p in OBJECTIVE_PRONOUNS] + [Word(WILDCARD)]
                )
        else:
            options.append([w])
    if not expandable:
        return [entry]

    variants = [[]]
    for opts in options:
        variants = [v + [w] for v in variants for w in opts]
    out = []
    for k, words in enumerate(variants, 1):
        surface = " ".join(w.text for w in words)
        out.append(
            PieEntry(
                "%s~p%d" % (entry.id, k),
                surface,
                entry.source,
                tuple(words),
                parent_id=entry.type_id,
            )
        )
    return out


def _parse_tagged(column, lineno):
    tags = []
    texts = []
    for item in column.split():
        if "/" not in item:
            raise LexiconError("line %d: tagged token %r lacks /POS" % (lineno, item))
        text, pos = item.rsplit("/", 1)
        texts.append(text)
        tags.append(pos)
    return texts, tags


def load_lexicon(path, source_name=None, exceptions=None):
    """Read a lexicon file into a normalized Lexicon.

    Applies parenthetical expansion, the single-word filter, and
    case-insensitive duplicate collapsing. `source_name` labels records
    that do not carry their own source column.
    """
    name = source_name or str(path)
    records = []  # (id or None, raw surface, source, tags or None, lineno)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) == 1:
                records.append((None, cols[0].strip(), name, None, lineno))
            elif len(cols) == 2:
                records.append((cols[0].strip(), cols[1].strip(), name, None, lineno))
            elif len(cols) in (3, 4):
                rec_id = cols[0].strip()
                surface = cols[1].strip()
                source = cols[2].strip() or name
                tags = None
                if len(cols) == 4 and cols[3].strip():
                    if "(" in surface:
                        raise LexiconError(
                            "line %d: tagged column not allowed on unexpanded "
                            "parenthetical form %r" % (lineno, surface)
                        )
                    texts, tags = _parse_tagged(cols[3], lineno)
                    if " ".join(texts) != " ".join(tokenize_surface(surface)):
                        raise LexiconError(
                            "line %d: tagged form does not match surface %r" % (lineno, surface)
                        )
                records.append((rec_id, surface, source, tags, lineno))
            else:
                raise LexiconError("line %d: expected 1-4 tab-separated columns" % lineno)

    lexicon = Lexicon(name)
    seen = {}  # norm surface -> entry id
    used_ids = set()
    for rec_id, raw_surface, source, tags, lineno in records:
        if not raw_surface:
            raise LexiconError("line %d: empty surface" % lineno)
        try:
            variants = expand_parentheticals(raw_surface, exceptions)
        except LexiconError as err:
            raise LexiconError("line %d: %s" % (lineno, err)) from None
        multi = len(variants) > 1
        for vi, surface in enumerate(variants, 1):
            tokens = tokenize_surface(surface)
            if sum(1 for t in tokens if not is_punct_token(t)) < 2:
                continue
            norm = normalize_surface(surface)
            if norm in seen:
                continue
            if rec_id is None:
                base = slugify(surface)
            else:
                base = "%s~v%d" % (rec_id, vi) if multi else rec_id
                if base in used_ids:
                    raise LexiconError("line %d: duplicate entry id %r" % (lineno, base))
            entry_id = base
            n = 1
            while entry_id in used_ids:
                n += 1
                entry_id = "%s-%d" % (base, n)
            # rows of a serialized placeholder expansion keep their parent
            parent_match = re.match(r"(.+)~p\d+$", entry_id)
            entry = make_entry(entry_id, surface, source, tags,
                               parent_id=parent_match.group(1) if parent_match else None)
            lexicon.add(entry)
            used_ids.add(entry_id)
            seen[norm] = entry_id
    return lexicon


def save_lexicon(lexicon, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# id\tsurface\tsource\ttagged\n")
        for e in lexicon:
            tagged = ""
            if e.words and e.is_tagged:
                tagged = " ".join("%s/%s" % (w.text, w.pos or "X") for w in e.words)
            fh.write("%s\t%s\t%s\t%s\n" % (e.id, e.surface, e.source, tagged))


def intersect(lexicons):
    """Entries whose normalized surface occurs in every input lexicon."""
    if len(lexicons) < 2:
        raise LexiconError("intersection needs at least 2 lexicons, got %d" % len(lexicons))
    maps = []
    for lex in lexicons:
        maps.append({e.norm_surface: e for e in lex})
    common = set(maps[0])
    for m in maps[1:]:
        common &= set(m)
    name = "&".join(lex.name for lex in lexicons)
    out = Lexicon(name)
    for e in lexicons[0]:
        if e.norm_surface in common:
            sources = sorted({m[e.norm_surface].source for m in maps})
            out.add(replace(e, source="|".join(sources)))
    return out


def load_parenthetical_exceptions(path):
    """Exceptions file: raw_form<TAB>variant|variant|... (ships empty)."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise LexiconError("line %d: expected raw<TAB>variants" % lineno)
            table[cols[0].strip()] = [v.strip() for v in cols[1].split("|") if v.strip()]
    return table
