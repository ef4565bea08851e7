"""Polarization of Koszul cycles and depth of powers of whisker edge ideals."""

from .errors import DimensionMismatchError, LatticeCapacityError, PreconditionError
from .graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    friendly_independent_set,
    path_graph,
    spanning_tree_leaf_order,
    whisker,
    whisker_ideal,
)
from .koszul import (
    CoefficientModule,
    FieldConfig,
    KoszulElement,
    boundary,
    depth,
    homology_class_nonzero,
    homology_dims,
    is_cycle,
    wedge,
)
from .monomials import MonomialIdeal, VariableSpace, ideal_power, parse_ideal, polarize_ideal
from .polar import one_step_polarize_cycle, polarize_element, verify_polarized_basis
from .whisker import certificate, verify_certificate

__version__ = "0.1.0"
