"""Surreal numbers as sign sequences: bounding and separating sets of surreals."""

__version__ = "0.1.0"
