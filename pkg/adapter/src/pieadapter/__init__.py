"""Batch parser/tagger adapter for the PIE extraction toolkit.

Everything the extractor consumes is produced here as files (CoNLL-U,
tagged lexicon TSV); the two packages never call each other in-process.
"""

__version__ = "0.1.0"
