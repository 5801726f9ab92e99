"""Weighted Hurwitz numbers in exact rational arithmetic.

Characters of S_n, the center of its group algebra, weight generating
functions, and the character, path and geometric routes to weighted
double Hurwitz numbers, with their tau-function generating series.
"""

from .characters import CharacterTable, character, table
from .errors import (CapExceeded, HurwitzError, InterpolationError, ParameterError,
                     RouteMismatch, UnsupportedPreset, WeightMismatch)
from .hurwitz import (HurwitzTable, hurwitz_classical, hurwitz_table, hybrid_F,
                      macdonald_decompose, multispecies_F, weighted_F_paths,
                      weighted_H_character, weighted_H_geometric)
from .partitions import all_partitions, partition
from .series import TruncatedSeries
from .tau import TauTable, toda_block
from .weightgen import WeightGenerator, parse_preset

__version__ = "0.1.0"
