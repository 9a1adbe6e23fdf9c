"""Shared token-level helpers: normalisation, hyphen splitting, quotes.

All matching in the toolkit is token based; "word boundary" always means
token boundary. Sentences coming out of CoNLL-U are already tokenized,
plain text goes through simple_tokenize().
"""

import re

# Em dash doubles as the any-word wildcard in dictionary entries.
WILDCARD = "—"

APOSTROPHES = "’ʼ`"

# Tokens that can mark possession when split off by a tokenizer ("Google 's").
POSSESSIVE_MARKERS = frozenset({"'s", "'", "’s", "’"})

_WORD_RE = re.compile(r"[\w'—-]+|[^\w\s]", re.UNICODE)

_DOUBLE_NEUTRAL = {'"'}
_SINGLE_NEUTRAL = {"'"}
_OPEN_TO_CLOSE = {"“": "”", "‘": "’", "``": "''"}
_CLOSERS = set(_OPEN_TO_CLOSE.values())


def normalize_apostrophes(text):
    for ch in APOSTROPHES:
        text = text.replace(ch, "'")
    return text


def is_punct_token(tok):
    """True for tokens with no alphanumeric content (, . ! " ...)."""
    return bool(tok) and not any(ch.isalnum() for ch in tok)


def simple_tokenize(text):
    """Whitespace/punctuation tokenizer for plain (non-CoNLL-U) text.

    Keeps internal apostrophes and hyphens inside the token ("Google's",
    "nuts-and-bolts") and the em-dash wildcard as its own token.
    """
    return _WORD_RE.findall(text)


def ends_with_possessive(tok):
    tok = normalize_apostrophes(tok)
    return len(tok) > 2 and (tok.endswith("'s") or tok.endswith("s'"))


def split_hyphenated(tok):
    """Split a token on internal hyphens: "nuts-and-bolts" -> 3 parts.

    Only splits between alphanumeric material; a lone "-" or leading/
    trailing hyphen stays put. Returns [tok] when there is nothing to do.
    """
    if "-" not in tok or len(tok) < 3:
        return [tok]
    parts = [p for p in tok.split("-") if p]
    if len(parts) < 2:
        return [tok]
    return parts


def quoted_spans(tokens):
    """Pairs of (open, close) token indices for matched quotes.

    Straight quotes pair sequentially within their kind; typographic and
    LaTeX-style quotes pair via a stack. Unmatched quote tokens are
    ignored. Indices are 0-based positions in `tokens`.
    """
    spans = []
    pending_neutral = {}
    stack = []
    for i, tok in enumerate(tokens):
        if tok in _DOUBLE_NEUTRAL or tok in _SINGLE_NEUTRAL:
            if tok in pending_neutral:
                spans.append((pending_neutral.pop(tok), i))
            else:
                pending_neutral[tok] = i
        elif tok in _OPEN_TO_CLOSE:
            stack.append((tok, i))
        elif tok in _CLOSERS:
            for k in range(len(stack) - 1, -1, -1):
                opener, j = stack[k]
                if _OPEN_TO_CLOSE[opener] == tok:
                    spans.append((j, i))
                    del stack[k:]
                    break
    return sorted(spans)


def inside_quotes(tokens, first, last):
    """Is any token position in [first, last] strictly inside a quote pair?"""
    for open_i, close_i in quoted_spans(tokens):
        if first <= close_i - 1 and last >= open_i + 1:
            if any(open_i < i < close_i for i in range(first, last + 1)):
                return True
    return False
