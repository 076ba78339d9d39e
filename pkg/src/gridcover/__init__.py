"""Exact enumeration of monomer-dimer coverings and domino tilings on grids.

The engine sweeps block-recursive bar operators over the rows of a
rectangular region, with exact big-integer (or rational, or polynomial)
arithmetic throughout; an independent oracle layer recomputes small
instances by direct enumeration and classical closed forms.
"""

from .counting import (
    RegionSpec,
    aztec_octagon_count,
    aztec_octagon_holes_count,
    fixed_monomer_count,
    hosoya_index,
    matching_polynomial,
    partition_function,
    partition_value,
    pure_dimer_count,
    single_boundary_monomer_count,
)
from .errors import CrossCheckError, GuardError
from .growth import GrowthTable, fekete_verify, growth_estimate
from .mdpoly import MDPolynomial
from .states import (
    BarState,
    aztec_boundary_index,
    aztec_boundary_word,
    index_of_state,
    state_of_index,
)
from .transfer import (
    Semiring,
    TransferOperator,
    build_bar_operator,
    build_bar_operator_tensor,
    build_row_operator,
    dense_matrix,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BarState",
    "CrossCheckError",
    "GrowthTable",
    "GuardError",
    "MDPolynomial",
    "RegionSpec",
    "Semiring",
    "TransferOperator",
    "aztec_boundary_index",
    "aztec_boundary_word",
    "aztec_octagon_count",
    "aztec_octagon_holes_count",
    "build_bar_operator",
    "build_bar_operator_tensor",
    "build_row_operator",
    "dense_matrix",
    "fekete_verify",
    "fixed_monomer_count",
    "growth_estimate",
    "hosoya_index",
    "index_of_state",
    "matching_polynomial",
    "partition_function",
    "partition_value",
    "pure_dimer_count",
    "single_boundary_monomer_count",
    "state_of_index",
    "sweep",
]
