"""Sprague-Grundy analysis of partition (CUT) games."""
from .engine import (
    GrundyTable,
    ValueSet,
    brute_grundy,
    compute_table,
    mex,
    nim_sum,
    reachable,
    residue_distinctness,
)
from .kernels import BACKEND
from .ruleset import RulesetSpec, classify, materialize_cuts, parse_ruleset, to_take_and_break

__version__ = "0.1.0"
