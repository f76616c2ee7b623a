"""Exact computer algebra for Steiner determinantal and pfaffian representations."""

__version__ = "0.1.0"
