"""Exception types shared across the toolkit.

Everything user-caused derives from InputError, which the CLI maps to
exit status 1; anything else escaping to the CLI is an internal error
(exit status 2).
"""


class InputError(Exception):
    """A problem with user-supplied data or options."""


class LexiconError(InputError):
    """Malformed lexicon file, record, or expansion input."""


class ConlluError(InputError):
    """Malformed CoNLL-U input (bad columns, bad heads, cycles)."""


class GoldFileError(InputError):
    """Malformed gold-annotation or extraction file."""


class ReviewFileError(InputError):
    """Overlap review decision referencing an unknown candidate pair."""


class PatternError(InputError):
    """A PIE pattern could not be built from the given parse."""


class UntaggedEntryError(InputError):
    """An operation needed part-of-speech tags the entry does not carry."""


class ParseSourceUnavailable(InputError):
    """The external parse source is missing or lacks a required parse.

    Deliberately distinct from the no-example-found condition, which is
    not an error (it triggers back-off to the isolated parse).
    """
