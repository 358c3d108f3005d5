"""Tripartite entanglement purification over the genuine basis: simulator, closed forms and CLI."""

__version__ = "0.3.0"
