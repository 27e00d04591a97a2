"""Witness graphs for Ramsey lower bounds: construction, search, verification.

The package revolves around two carrier types, ``Graph`` (bit-row adjacency)
and ``MultiColoring`` (an r-edge-coloring of a complete graph), a small
problem algebra (books, wheels, cliques, and few-color clique avoidance),
and four engines on top: exact counting with O(delta) edge-flip updates,
hash-tabu local search, exhaustive bottom-up generation with isomorph
rejection, and polycirculant census enumeration.
"""

from .canon import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_key,
    coloring_canonical_key,
)
from .counting import (
    BinomialTable,
    CodegreeCache,
    book_delta,
    book_toggle_delta,
    clique_toggle_delta,
    count_books,
    count_cliques,
    count_cliques_at_edge,
    count_shape,
    count_wheels,
    gr_delta,
    gr_recolor_delta,
    gr_score,
    shape_toggle_delta,
    wheel_delta,
    wheel_toggle_delta,
)
from .errors import (
    BudgetExceededError,
    CapabilityError,
    InputError,
    MalformedInputError,
    ParseError,
    RamseyKitError,
    WitnessNotFoundError,
)
from .fixtures import (
    FixtureRecord,
    FixtureReport,
    FixtureResult,
    fixture_by_id,
    load_fixtures,
    run_fixture_suite,
)
from .formats import (
    emit_color_matrix,
    graph6_decode,
    graph6_encode,
    parse_color_matrix,
    read_graph6_lines,
)
from .generate import GenerationLevel, GenerationResult, extend_one, generate_levels
from .graphs import (
    Graph,
    MultiColoring,
    coloring_from_graph,
    complement,
    edge_color_hash,
    pair_index,
    state_hash,
)
from .polycirculant import (
    CensusResult,
    PolycirculantSpec,
    build,
    enumerate_census,
    lemma_witness,
    rotation_perm,
)
from .problems import (
    Book,
    Clique,
    GeneralizedProblem,
    Problem,
    Shape,
    TwoColorProblem,
    Wheel,
    parse_problem,
    parse_shape,
)
from .tabu import (
    ParallelOutcome,
    SearchOutcome,
    SearchState,
    SearchStats,
    init_state,
    run_parallel,
    run_search,
    tabu_step,
)
from .verify import (
    Verdict,
    Violation,
    find_gr_violation,
    find_shape,
    has_shape_through,
    is_ramsey_witness,
    verify,
    verify_gr,
    verify_witness,
    violation_holds,
)

__version__ = "0.1.0"

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_key",
    "coloring_canonical_key",
    "BinomialTable",
    "CodegreeCache",
    "book_delta",
    "book_toggle_delta",
    "clique_toggle_delta",
    "count_books",
    "count_cliques",
    "count_cliques_at_edge",
    "count_shape",
    "count_wheels",
    "gr_delta",
    "gr_recolor_delta",
    "gr_score",
    "shape_toggle_delta",
    "wheel_delta",
    "wheel_toggle_delta",
    "BudgetExceededError",
    "CapabilityError",
    "InputError",
    "MalformedInputError",
    "ParseError",
    "RamseyKitError",
    "WitnessNotFoundError",
    "FixtureRecord",
    "FixtureReport",
    "FixtureResult",
    "fixture_by_id",
    "load_fixtures",
    "run_fixture_suite",
    "emit_color_matrix",
    "graph6_decode",
    "graph6_encode",
    "parse_color_matrix",
    "read_graph6_lines",
    "GenerationLevel",
    "GenerationResult",
    "extend_one",
    "generate_levels",
    "Graph",
    "MultiColoring",
    "coloring_from_graph",
    "complement",
    "edge_color_hash",
    "pair_index",
    "state_hash",
    "CensusResult",
    "PolycirculantSpec",
    "build",
    "enumerate_census",
    "lemma_witness",
    "rotation_perm",
    "Book",
    "Clique",
    "GeneralizedProblem",
    "Problem",
    "Shape",
    "TwoColorProblem",
    "Wheel",
    "parse_problem",
    "parse_shape",
    "ParallelOutcome",
    "SearchOutcome",
    "SearchState",
    "SearchStats",
    "init_state",
    "run_parallel",
    "run_search",
    "tabu_step",
    "Verdict",
    "Violation",
    "find_gr_violation",
    "find_shape",
    "has_shape_through",
    "is_ramsey_witness",
    "verify",
    "verify_gr",
    "verify_witness",
    "violation_holds",
]
