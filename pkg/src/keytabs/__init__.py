"""Exact combinatorics of key and Young diagrams.

Enumeration of tableau and tabloid families, filling statistics, sparse
polynomial arithmetic with integer q,t-coefficients, expansions into the
fundamental slide / key / Schur bases, weak dual equivalence classes, and
symmetric and nonsymmetric Kostka-Foulkes tables.
"""

from keytabs.shapes import Cell, Composition, Diagram, Partition, WeakComposition
from keytabs.fillings import Filling
from keytabs.polyring import QT, Poly

__all__ = [
    "Cell",
    "Composition",
    "Diagram",
    "Filling",
    "Partition",
    "Poly",
    "QT",
    "WeakComposition",
]
