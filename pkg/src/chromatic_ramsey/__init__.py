"""Chromatic Ramsey numbers of small graphs and the constructions around them."""

__version__ = "0.1.0"
