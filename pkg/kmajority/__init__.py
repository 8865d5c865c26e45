"""Constructions, oracles and random-model experiments for k-majority tournaments."""

__version__ = '0.1.0'
