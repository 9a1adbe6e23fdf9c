# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled matcher kernels; behavioural twin of fallback.py."""

cimport cython

DEF K_SET = 0
DEF K_FUZZY = 1
DEF K_ANY = 2
DEF K_POSS = 3
DEF K_SET_POSS = 4


cdef bint _has_possessive_suffix(str text):
    return len(text) > 2 and (text.endswith("'s") or text.endswith("s'"))


cdef int _elem_ends(list texts, list is_marker, Py_ssize_t n, int kind,
                    object payload, Py_ssize_t pos, Py_ssize_t* out) except -1:
    cdef str t = <str>texts[pos]
    cdef str extra
    cdef int count = 0
    if kind == K_SET:
        if t in <set>payload:
            out[count] = pos; count += 1
    elif kind == K_FUZZY:
        if t == <str>payload:
            out[count] = pos; count += 1
        elif t.startswith(<str>payload):
            extra = t[len(<str>payload):]
            if 1 <= len(extra) <= 3 and extra.isalpha():
                out[count] = pos; count += 1
    elif kind == K_ANY:
        out[count] = pos; count += 1
    elif kind == K_POSS:
        if _has_possessive_suffix(t):
            out[count] = pos; count += 1
        if not is_marker[pos] and pos + 1 < n and is_marker[pos + 1]:
            out[count] = pos + 1; count += 1
    elif kind == K_SET_POSS:
        if t.endswith("'s") and t[:-2] in <set>payload:
            out[count] = pos; count += 1
        if t in <set>payload and pos + 1 < n and is_marker[pos + 1]:
            out[count] = pos + 1; count += 1
    return count


def find_token_matches(list texts, list is_marker, list elems, int max_gap):
    """All (first, last) unit spans where `elems` matches in order."""
    cdef Py_ssize_t n = len(texts)
    cdef Py_ssize_t n_elems = len(elems)
    if n == 0 or n_elems == 0:
        return []
    spans = set()
    # payloads are sets for K_SET/K_SET_POSS, str for K_FUZZY, None otherwise
    kinds = [e[0] for e in elems]
    payloads = [set(e[1]) if e[0] in (K_SET, K_SET_POSS) else e[1] for e in elems]
    zero_gaps = [e[2] for e in elems]

    cdef Py_ssize_t ends[2]
    cdef Py_ssize_t start, end, pos, limit, prev_end
    cdef int ei, ne, j

    # iterative DFS over (elem index, prev end, first); stack of frames
    cdef list stack
    cdef int kind0 = kinds[0]
    for start in range(n):
        ne = _elem_ends(texts, is_marker, n, kind0, payloads[0], start, ends)
        for j in range(ne):
            end = ends[j]
            if n_elems == 1:
                spans.add((start, end))
            else:
                stack = [(1, end, start)]
                _dfs(texts, is_marker, n, kinds, payloads, zero_gaps,
                     n_elems, max_gap, stack, spans)
    return sorted(spans)


cdef int _dfs(list texts, list is_marker, Py_ssize_t n, list kinds,
              list payloads, list zero_gaps, Py_ssize_t n_elems,
              int max_gap, list stack, set spans) except -1:
    cdef Py_ssize_t ends[2]
    cdef Py_ssize_t pos, end, prev_end, limit, first
    cdef int ei, budget, ne, j
    while stack:
        ei, prev_end, first = stack.pop()
        budget = 0 if zero_gaps[ei] else max_gap
        limit = prev_end + 2 + budget
        if limit > n:
            limit = n
        for pos in range(prev_end + 1, limit):
            ne = _elem_ends(texts, is_marker, n, kinds[ei], payloads[ei], pos, ends)
            for j in range(ne):
                end = ends[j]
                if ei + 1 == n_elems:
                    spans.add((first, end))
                else:
                    stack.append((ei + 1, end, first))
    return 0


def find_subtree_matches(Py_ssize_t n_tokens, list heads, list rels,
                         list passive_ok, list compat, list core_parent,
                         list core_rel, list core_dobj, int relax):
    """All (first, last) token spans of injective pattern embeddings."""
    cdef Py_ssize_t n_core = len(core_parent)
    cdef Py_ssize_t i, t, lo, hi
    spans = set()
    if n_core == 0 or n_tokens == 0:
        return []

    cdef Py_ssize_t[64] mapping
    cdef int[64] parent_arr
    cdef int[64] rel_arr
    cdef char[64] dobj_arr
    if n_core > 64:
        raise ValueError("pattern too large for kernel (max 64 nodes)")
    for i in range(n_core):
        parent_arr[i] = core_parent[i]
        rel_arr[i] = core_rel[i]
        dobj_arr[i] = core_dobj[i]

    cdef list head_l = heads
    cdef list rel_l = rels
    used = [False] * n_tokens

    _assign(0, n_core, n_tokens, head_l, rel_l, passive_ok, compat,
            parent_arr, rel_arr, dobj_arr, relax, mapping, used, spans)
    return sorted(spans)


cdef bint _edge_ok(Py_ssize_t t, Py_ssize_t h, int rel, bint isdobj,
                   list heads, list rels, list passive_ok, int relax):
    if relax == 2:
        return heads[t] == h or heads[h] == t
    if heads[t] != h:
        return False
    if relax == 1:
        return True
    if rels[t] == rel:
        return True
    return isdobj and passive_ok[t]


cdef int _assign(Py_ssize_t i, Py_ssize_t n_core, Py_ssize_t n_tokens,
                 list heads, list rels, list passive_ok, list compat,
                 int* parent_arr, int* rel_arr, char* dobj_arr, int relax,
                 Py_ssize_t* mapping, list used, set spans) except -1:
    cdef Py_ssize_t t, h, j, lo, hi
    cdef list row = compat[i]
    cdef bint has_parent = parent_arr[i] >= 0
    if has_parent:
        h = mapping[parent_arr[i]]
    else:
        h = -1
    for t in range(n_tokens):
        if not row[t] or used[t]:
            continue
        if has_parent and not _edge_ok(t, h, rel_arr[i], dobj_arr[i],
                                       heads, rels, passive_ok, relax):
            continue
        mapping[i] = t
        if i + 1 == n_core:
            lo = mapping[0]
            hi = mapping[0]
            for j in range(1, n_core):
                if mapping[j] < lo:
                    lo = mapping[j]
                if mapping[j] > hi:
                    hi = mapping[j]
            spans.add((lo, hi))
        else:
            used[t] = True
            _assign(i + 1, n_core, n_tokens, heads, rels, passive_ok, compat,
                    parent_arr, rel_arr, dobj_arr, relax, mapping, used, spans)
            used[t] = False
    return 0
