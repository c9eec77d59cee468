"""Ribbon tableaux, LLT ribbon functions and domino q-Littlewood-Richardson coefficients."""

from .domino import QLRTable, bad_involution, bender_knuth, find_bad_pair, qlr_bruteforce, qlr_yamanouchi
from .functions import StripSeries, ribbon_function, strip_series
from .polynomials import LaurentQ, SymPoly, schur_expand, schur_polynomial
from .shapes import Partition, SkewShape, core_quotient, parse_partition, parse_skew
from .tableaux import RibbonTableau, enumerate_tableaux, inversions, reading_word, spin
from .words import Word123, local_inversions, reverse_complement

__all__ = [
    "LaurentQ", "Partition", "QLRTable", "RibbonTableau", "SkewShape", "StripSeries", "SymPoly",
    "Word123", "bad_involution", "bender_knuth", "core_quotient", "enumerate_tableaux",
    "find_bad_pair", "inversions", "local_inversions", "parse_partition", "parse_skew",
    "qlr_bruteforce", "qlr_yamanouchi", "reading_word", "reverse_complement", "ribbon_function",
    "schur_expand", "schur_polynomial", "spin", "strip_series",
]
