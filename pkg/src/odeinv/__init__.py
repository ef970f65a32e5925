"""Point-invariant classification of y'' = P + 3Q y' + 3R y'^2 + S y'^3."""
__version__ = "0.1.0"
