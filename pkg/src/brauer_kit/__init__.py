"""brauer_kit: combinatorics of graded Brauer graphs and gentle algebras."""

from .graph import (
    BrauerGraph,
    BrauerGraphError,
    GradedBrauerGraph,
    Grading,
    enumerate_admissible_cuts,
    homogeneity,
    is_admissible_cut,
    is_homogeneous,
    is_isomorphic,
    surface_invariants,
)
from .mutation import (
    Sector,
    grading_transport,
    maximal_sectors,
    sector_degrees,
    sector_move,
    subset_move,
)
from .algebra import (
    Quiver,
    RelationSet,
    basis_of,
    cut_algebra,
    cut_of_arrows,
    dimension_of,
    quiver_of,
    relations,
    special_cycles,
    trivext_bigrading,
    trivial_extension_graph,
)
from .gentle import (
    AGInvariant,
    GentleError,
    GentlePresentation,
    ag_invariant,
    check_gentle,
    dimension,
    global_dimension,
    presentations_isomorphic,
    threads,
)
from .equivalence import (
    TiltingSummary,
    TriangularSplit,
    shift_equivalence,
    tilting_summary,
    transformed_equivalence,
    triangular_split,
)
from .formats import FormatError, dump_bg, dump_qa, parse_bg, parse_qa

__version__ = "0.1.0"
