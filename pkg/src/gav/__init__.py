"""gav: gesture-driven guided-assembly toolkit."""

__version__ = "0.1.0"
