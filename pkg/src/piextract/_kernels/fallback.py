"""Pure-Python matcher kernels (reference implementation).

find_token_matches: gapped-subsequence search of a compiled string
pattern over sentence units. find_subtree_matches: injective embedding
search of a pattern tree into a dependency tree. The Cython module
_native.pyx implements the same contracts; keep the two in lockstep.
"""

_SET = 0
_FUZZY = 1
_ANY = 2
_POSS = 3
_SET_POSS = 4


def _has_possessive_suffix(text):
    return len(text) > 2 and (text.endswith("'s") or text.endswith("s'"))


def _elem_ends(texts, is_marker, n, kind, payload, pos):
    """End positions (inclusive) an element can consume starting at pos."""
    t = texts[pos]
    ends = []
    if kind == _SET:
        if t in payload:
            ends.append(pos)
    elif kind == _FUZZY:
        if t == payload:
            ends.append(pos)
        elif t.startswith(payload):
            extra = t[len(payload):]
            if 1 <= len(extra) <= 3 and extra.isalpha():
                ends.append(pos)
    elif kind == _ANY:
        ends.append(pos)
    elif kind == _POSS:
        if _has_possessive_suffix(t):
            ends.append(pos)
        if not is_marker[pos] and pos + 1 < n and is_marker[pos + 1]:
            ends.append(pos + 1)
    elif kind == _SET_POSS:
        if t.endswith("'s") and t[:-2] in payload:
            ends.append(pos)
        if t in payload and pos + 1 < n and is_marker[pos + 1]:
            ends.append(pos + 1)
    return ends


def find_token_matches(texts, is_marker, elems, max_gap):
    """All (first, last) unit spans where `elems` matches in order.

    elems: [(kind, payload, zero_gap_before), ...]; up to max_gap units
    may intervene between consecutive elements unless zero_gap_before.
    """
    n = len(texts)
    if n == 0 or not elems:
        return []
    spans = set()

    def extend(ei, prev_end, first):
        if ei == len(elems):
            spans.add((first, prev_end))
            return
        kind, payload, zero_gap = elems[ei]
        budget = 0 if zero_gap else max_gap
        limit = min(n, prev_end + 2 + budget)
        for pos in range(prev_end + 1, limit):
            for end in _elem_ends(texts, is_marker, n, kind, payload, pos):
                extend(ei + 1, end, first)

    kind0, payload0, _ = elems[0]
    for start in range(n):
        for end in _elem_ends(texts, is_marker, n, kind0, payload0, start):
            extend(1, end, start)
    return sorted(spans)


def find_subtree_matches(n_tokens, heads, rels, passive_ok, compat,
                         core_parent, core_rel, core_dobj, relax):
    """All (first, last) token spans of injective pattern embeddings.

    Pattern core nodes are given parent-before-child; compat[i][t] says
    core node i may map to token t. relax: 0 full (labels + direction),
    1 labels ignored, 2 undirected. A direct-object pattern edge also
    accepts a token that is a passive subject of its head (passive_ok).
    """
    n_core = len(core_parent)
    spans = set()
    mapping = [0] * n_core
    used = [False] * n_tokens

    def edge_ok(t, h, rel, isdobj):
        if relax == 2:
            return heads[t] == h or heads[h] == t
        if heads[t] != h:
            return False
        if relax == 1:
            return True
        if rels[t] == rel:
            return True
        return bool(isdobj and passive_ok[t])

    def assign(i):
        if i == n_core:
            lo = min(mapping)
            hi = max(mapping)
            spans.add((lo, hi))
            return
        p = core_parent[i]
        row = compat[i]
        for t in range(n_tokens):
            if not row[t] or used[t]:
                continue
            if p >= 0 and not edge_ok(t, mapping[p], core_rel[i], core_dobj[i]):
                continue
            mapping[i] = t
            used[t] = True
            assign(i + 1)
            used[t] = False

    assign(0)
    return sorted(spans)
