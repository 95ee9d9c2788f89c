"""Audit toolkit for hash-slice pseudonym schemes on synthetic forums."""

__version__ = "0.1.0"
