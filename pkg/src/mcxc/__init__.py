"""Multi-collinear extension of collinear exchange-correlation functionals."""

__version__ = "0.1.0"
