"""Co-signotopes, their low levels, and level-preserving maps between ground sets.

A co-signotope assigns a sign to every d-subset of [n] so that along each
one-slot replacement series the sign changes at most once.  This package
enumerates and counts the members with few +-signs, decomposes their plus
sets into source-anchored components, re-coordinatizes components as
generalized Ferrers diagrams, and maps whole levels between ground sets of
different sizes, refusing exactly where no such map can exist.
"""

__version__ = "0.1.0"

from .bijection import map_by_components, map_cosignotope, shift_plus_subset
from .components import classify, decompose, merge, p_sequence, plus_components
from .cosignotopes import (
    Alignment,
    CoSignotope,
    Signotope,
    cosignotope_from_signotope,
    cosignotope_is_valid,
    series_alignment,
    signotope_from_cosignotope,
    signotope_is_valid,
    single_step,
)
from .counting import (
    PlusCountTable,
    TightnessCounts,
    build_table,
    closed_form,
    conjecture_check,
    num_distinct_partitions,
    num_partitions,
    plus_count_formula,
    sparse_compositions,
    tightness_counts,
)
from .enumeration import (
    HasseDiagram,
    LevelEnumeration,
    enumerate_level_bfs,
    enumerate_naive,
    hasse_truncated,
)
from .errors import BoundRefusal, InternalCheckError, OracleGuardError
from .ferrers import (
    FerrersDiagram,
    cosignotope_of,
    count_ferrers,
    diagram_of,
    enumerate_ferrers,
    in_region,
    is_ferrers,
    local_coord,
    local_coord_inverse,
    point_to_subset,
    subset_to_point,
    transfer_component,
)
from .subsets import (
    GroundParams,
    all_d_subsets,
    distance_lower_bound,
    neighbors,
    series,
    source_subset,
)

__all__ = [
    "Alignment",
    "BoundRefusal",
    "CoSignotope",
    "FerrersDiagram",
    "GroundParams",
    "HasseDiagram",
    "InternalCheckError",
    "LevelEnumeration",
    "OracleGuardError",
    "PlusCountTable",
    "Signotope",
    "TightnessCounts",
    "all_d_subsets",
    "build_table",
    "classify",
    "closed_form",
    "conjecture_check",
    "cosignotope_from_signotope",
    "cosignotope_is_valid",
    "cosignotope_of",
    "count_ferrers",
    "decompose",
    "diagram_of",
    "distance_lower_bound",
    "enumerate_ferrers",
    "enumerate_level_bfs",
    "enumerate_naive",
    "hasse_truncated",
    "in_region",
    "is_ferrers",
    "local_coord",
    "local_coord_inverse",
    "map_by_components",
    "map_cosignotope",
    "merge",
    "neighbors",
    "num_distinct_partitions",
    "num_partitions",
    "p_sequence",
    "plus_components",
    "plus_count_formula",
    "point_to_subset",
    "series",
    "series_alignment",
    "shift_plus_subset",
    "signotope_from_cosignotope",
    "signotope_is_valid",
    "single_step",
    "source_subset",
    "sparse_compositions",
    "subset_to_point",
    "tightness_counts",
    "transfer_component",
]
