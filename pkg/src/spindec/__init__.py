"""Decomposition numbers of two-part spin characters of symmetric groups in characteristic 2."""

from .decomp import Column, EntryValue, Tag, classify_columns, double_entry, entry, straight_entry
from .dyadic import d, g, nu2
from .grothendieck import FormalSum, apply_e, apply_f, apply_ops
from .tables import build_table, compare, render

__version__ = "0.1.0"
