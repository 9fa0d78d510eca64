"""Exact computations with weight modules over the Weyl algebra and bounded sp(2n)-modules."""

__version__ = "0.1.0"
