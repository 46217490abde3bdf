"""Cylindrical lattice paths: legal ±words, downs-first cycles, weight
functions and lap-cycle sequences, with the bijections between them."""

from .bijections import (
    LapSequence,
    laps_to_weights,
    laps_to_word,
    path_to_weights,
    weights_to_laps,
    weights_to_path,
    word_to_laps,
)
from .cylinder import ORIGIN, CylCycle, Vertex, enumerate_lap_cycles, is_downs_first, vertex_valid
from .params import DOWN, UP, LegalityMode, Params
from .weights import WeightFunction, covers, is_balanced, is_origin_connected, out_weight
from .words import Word, cycle_to_word, find_illegal_subwords, is_legal, is_zero_sum, parse_word, word_to_cycle

__version__ = "0.1.0"
