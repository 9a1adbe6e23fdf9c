"""Dictionary-based extraction of potentially idiomatic expressions."""

__version__ = "0.1.0"
