"""Matcher kernels: compiled extension when available, Python otherwise.

The two implementations expose the same two functions and must return
identical results (tests/test_kernels.py enforces parity). Set
PIEXTRACT_PURE=1 to force the Python kernels.
"""

import os

from . import fallback

if os.environ.get("PIEXTRACT_PURE"):
    impl = fallback
else:
    try:
        from . import _native as impl  # type: ignore[attr-defined]
    except ImportError:
        impl = fallback

IMPLEMENTATION = impl.__name__.rsplit(".", 1)[-1].lstrip("_")

find_token_matches = impl.find_token_matches
find_subtree_matches = impl.find_subtree_matches

# element kinds for find_token_matches
ELEM_SET = 0
ELEM_FUZZY = 1
ELEM_ANY = 2
ELEM_POSS = 3
ELEM_SET_POSS = 4

# relaxation levels for find_subtree_matches
RELAX_FULL = 0
RELAX_NO_LABELS = 1
RELAX_NO_DIRECTION = 2
