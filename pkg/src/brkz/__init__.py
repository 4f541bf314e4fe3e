"""Exact workbench for twisted Brauer categories, their Koszul complexes and
the cyclic-operad modules they act on."""

__version__ = "0.1.0"
