"""Exact pattern complexity of the squiral tiling.

Three independent routes to the number of distinct n x n patterns:

* brute force over saturated supertiles (:mod:`squiral.complexity`),
* the recursion systems (:mod:`squiral.sequences`),
* the closed formula (:func:`squiral.sequences.closed_form_A`).
"""
from .complexity import (
    SaturationResult,
    brute_force_triple,
    phase_class_by_position,
    phase_class_via_mu,
    saturated_pattern_set,
    verify_extension,
    verify_partition,
)
from .errors import ResourceLimitError, SquiralError, UnverifiedCountError, WindowBoundsError
from .pattern import (
    PatternKey,
    PatternSet,
    enumerate_phase_windows,
    enumerate_windows,
    set_equals,
    window,
)
from .sequences import (
    TABLE1,
    ClosedFormParams,
    ComplexityTriple,
    closed_form_A,
    closed_form_params,
    ilog3,
    recursion_triple,
    sequence_table,
    simplified_recursion_A,
)
from .substitution import BinaryGrid, SubstitutionRule, complement, inflate, squiral_rule, supertile

__version__ = "0.1.0"
