"""Carry value transformation (CVT) kernels and the fractal they generate.

The zero cells of the table ``cvt(i, j) = 2 (i & j)`` form a Sierpinski-type
gasket. The subpackages build the same pattern from an L-system, a
two-neighbourhood cellular automaton and a substitution tiling.
"""

from .bitcore import BitWord, LawReport, check_action_law, check_monoid_laws, cvt, cvt_kary, mcvt, mcvt_kary, xor_sum
from .cvtable import CvTable, PatternGrid, SourceSequence, build_table, extract_pattern, scale_sequence
from .dimension import BoxCountSeries, box_count, similarity_dimension

__version__ = "0.1.0"
