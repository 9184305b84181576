"""gemkit: edge-colored graph encodings of PL manifolds.

Graphs are stored as tuples of perfect matchings; all invariant arithmetic
is exact (integers, half-integers, rationals).
"""

from .bounds import (
    ManifoldParams,
    Rational,
    is_semisimple,
    lens_times_circle_bounds,
    semisimple_type,
    solve_gij_from_gijk,
    surface_product_bounds,
    theorem1_lower_bounds,
    theorem2_equalities,
)
from .catalog import (
    EnumFilter,
    enumerate_graphs,
    necessary_manifold_conditions,
    survey,
)
from .colored_graphs import (
    ColoredGraph,
    IsoCertificate,
    are_isomorphic,
    canonical_code,
    from_compact,
    from_json,
    from_pairs,
    to_compact,
    to_json,
    validate,
)
from .complex_invariants import (
    FaceVector,
    dehn_sommerville_residuals,
    euler_characteristic,
    f1_identity_residual,
    face_vector,
    gem_complexity_of_graph,
    rank_upper_bound,
)
from .errors import GemError
from .fixtures import FIXTURE_KEYS, Fixture, builtin, verify_fixture
from .regular_genus import (
    CyclicPermutation,
    HalfInteger,
    check_genus_relations,
    chi_epsilon,
    cyclic_permutations,
    genus_report,
    regular_genus_of_graph,
    residue_genus,
    rho_epsilon,
)
from .reports import GemInvariants, compute_invariants, invariants_to_json

__all__ = [
    "ColoredGraph",
    "CyclicPermutation",
    "EnumFilter",
    "FIXTURE_KEYS",
    "FaceVector",
    "Fixture",
    "GemError",
    "GemInvariants",
    "HalfInteger",
    "IsoCertificate",
    "ManifoldParams",
    "Rational",
    "are_isomorphic",
    "builtin",
    "canonical_code",
    "check_genus_relations",
    "chi_epsilon",
    "compute_invariants",
    "cyclic_permutations",
    "dehn_sommerville_residuals",
    "enumerate_graphs",
    "euler_characteristic",
    "f1_identity_residual",
    "face_vector",
    "from_compact",
    "from_json",
    "from_pairs",
    "gem_complexity_of_graph",
    "genus_report",
    "invariants_to_json",
    "is_semisimple",
    "lens_times_circle_bounds",
    "necessary_manifold_conditions",
    "rank_upper_bound",
    "regular_genus_of_graph",
    "residue_genus",
    "rho_epsilon",
    "semisimple_type",
    "solve_gij_from_gijk",
    "surface_product_bounds",
    "survey",
    "theorem1_lower_bounds",
    "theorem2_equalities",
    "to_compact",
    "to_json",
    "validate",
    "verify_fixture",
]

__version__ = "0.1.0"
