"""Double penalty additive models: interpretable + flexible decompositions."""

__version__ = "0.1.0"
