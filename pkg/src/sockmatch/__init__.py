"""Sock process, exact formulas and enumeration for random ordered r-matchings."""

from .core import (
    DyckTrace,
    GaussWord,
    OrderedMatching,
    Word,
    matching_from_word,
    trace_of,
    word_from_matching,
)
from .sockproc import edge_lengths, largest_bipartite_submatching, sock_number, sockuence

__version__ = "0.1.0"
