"""glvar - finite-level computations for GL-varieties."""

__version__ = "0.1.0"
