"""Exact computer algebra for quaternion-origami octics over elliptic curves."""

__version__ = "0.1.0"
