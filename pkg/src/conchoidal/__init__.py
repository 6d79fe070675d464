"""Rationality, parametrization and double-rational foci of conchoid curves."""

__version__ = "0.1.0"
