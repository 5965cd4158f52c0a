"""Stammering tableaux, rook placements in the double staircase, chains of Dyck shapes,
Laguerre histories and the PASEP matrix ansatz."""

__version__ = "0.1.0"
