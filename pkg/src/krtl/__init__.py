"""krtl: graded crossing complexes, braid diagonals, web evaluation and
stable-homology truncations for positive braids."""

from .braid import (
    BraidParseError,
    ColoredBraid,
    InfiniteBraidSpec,
    StructureReport,
    decompose_noncomplete,
    gamma_sets,
    is_complete,
    negative_shift,
    parse_braid,
    partial_braid,
)
from .bounds import (
    BoundOutcome,
    BoundReport,
    CauchyReport,
    EnumerationCapError,
    ZonePattern,
    b1,
    b2,
    b3,
    bound_F,
    bound_g,
    cauchy_report,
    cone_bound,
    twist_projection_bound,
)
from .census import (
    ConeSplit,
    CrossingTerm,
    ResolutionCensus,
    ResolutionSizeError,
    braid_census,
    census_poincare,
    cone_split,
    crossing_complex,
    resolve_nondiagonals,
)
from .diagonals import DiagonalDecomposition, find_diagonals, zone_census
from .laurent import (
    GradingShift,
    LaurentPoly,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
)
from .shifts import (
    Crossing,
    crossing_min,
    fork_slide_shift,
    fork_twist_shift,
    isotopy_alpha,
    ladder_slide_shift,
    ladder_twist_proof_composition,
    ladder_twist_shift,
    reidemeister_shift,
)
from .stable import (
    Generator,
    HeckeElement,
    LinkEstimateReport,
    StabilityReport,
    TrigradedTable,
    an_generators,
    an_truncated_dims,
    hecke_identity,
    hecke_multiply,
    homfly_polynomial,
    link_estimate_report,
    markov_trace,
    stability_check,
    torus_braid,
)
from .webs import (
    ClosedWeb,
    IrreducibleWebError,
    closure_web,
    eval_closed_web,
    normalize_zero_edges,
    parse_web,
    sl2_bracket,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
