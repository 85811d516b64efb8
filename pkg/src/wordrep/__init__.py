"""Word-representability of graphs under split decomposition and recomposition."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    DisconnectedGraphError,
    InputError,
    NotComparabilityError,
    VerificationError,
    WordRepError,
)
from .graph import (
    FamilySpec,
    Graph,
    MarkedGraph,
    add_pendant,
    are_isomorphic,
    family,
    generate_family,
    induced_subgraph,
    join_by_edge,
)
from .words import (
    alternate,
    alternation_graph,
    cyclic_shift_normalize,
    pad_uniform,
    project,
    representation_number,
    represents,
)
from .split import (
    Split,
    SplitTree,
    find_split,
    is_parity,
    minimal_split_decomposition,
    recompose,
    representability_via_decomposition,
    split_once,
)
from .order import (
    Orientation,
    Poset,
    Realizer,
    dimension,
    extend_realizer,
    is_all_adjacent,
    is_prn_irreducible,
    is_source_feasible,
    poset_from_orientation,
    prn,
    transitive_orientation,
)
from .construct import (
    RecompositionCertificate,
    all_adjacent_word,
    bipartition_recomposition,
    classify_recomposition,
    edge_join_word,
    interleaved_word,
    irreducible_recomposition_word,
    marker_extension_words,
    orient_recomposition,
    recomposition_word,
)
