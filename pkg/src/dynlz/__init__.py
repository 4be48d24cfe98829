"""Dynamic LZ77 factorization maintenance."""

from .dynstr import DynString, EditKind, EditOp, EditReceipt
from .engine import Engine, Phrase
from .index_common import Cluster
from .index_fast import FastIndex
from .index_naive import NaiveIndex
from .lpf import LpfAnswer, LpfQueries
from .lpftree import LpfTree, NaiveLpfTree, TreeError
from .stats import IndexStats

__all__ = [
    "Cluster", "DynString", "EditKind", "EditOp", "EditReceipt", "Engine",
    "FastIndex", "IndexStats", "LpfAnswer", "LpfQueries", "LpfTree",
    "NaiveIndex", "NaiveLpfTree", "Phrase", "TreeError",
]

__version__ = "0.1.0"
