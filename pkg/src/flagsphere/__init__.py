"""Combinatorics of flag simplicial 2-spheres.

Validated triangulated 2-spheres; flagness and belts; edge contraction
with certified reduction to the octahedron; vertex splitting; canonical
forms; the Hasse graph of the contraction order; and brute-force oracles
backing all of it.
"""

from .canonical import (
    canonical_form,
    canonical_sphere,
    decode_form,
    encode_face_set,
    form_hex,
    isomorphic,
    sphere_from_form,
)
from .contraction import (
    CertificateCheck,
    CertStep,
    ContractionCertificate,
    certificate_from_json,
    certificate_to_json,
    contract,
    contract_mapped,
    is_flag_contractible,
    is_minimal,
    link_condition,
    reduce_to_octahedron,
    square_link_vertices,
    verify_certificate,
)
from .errors import (
    BadSplitSpec,
    BadVertex,
    BudgetTooLarge,
    BudgetTooSmall,
    FlagsphereError,
    FormatError,
    InternalMinimalityViolation,
    LinkConditionViolated,
    NotAnEdge,
    NotASphere,
    NotFlag,
    TooLarge,
)
from .expansion import (
    SplitSpec,
    diagonal_count,
    expansion_bound,
    flag_expansions,
    split_vertex,
)
from .flags import (
    Belt,
    belt_covered_edges,
    belts,
    edge_in_belt,
    is_flag,
    missing_triangles,
)
from .hasse import (
    BoundEntry,
    BoundsReport,
    HasseGraph,
    HasseNode,
    build,
    export_dot,
    export_json,
    export_levels_tsv,
    import_json,
    verify_degree_bounds,
)
from .oracle import (
    brute_belts,
    brute_is_flag,
    brute_isomorphic,
    enumerate_all_spheres,
)
from .sphere import (
    SimplicialSphere,
    dump_corpus,
    dump_tri,
    from_faces,
    octahedron,
    parse_corpus,
    parse_tri,
    tetrahedron,
)

__version__ = "0.1.0"

__all__ = [
    "SimplicialSphere",
    "from_faces",
    "tetrahedron",
    "octahedron",
    "parse_tri",
    "dump_tri",
    "parse_corpus",
    "dump_corpus",
    "Belt",
    "is_flag",
    "missing_triangles",
    "belts",
    "belt_covered_edges",
    "edge_in_belt",
    "canonical_form",
    "canonical_sphere",
    "sphere_from_form",
    "encode_face_set",
    "decode_form",
    "form_hex",
    "isomorphic",
    "link_condition",
    "contract",
    "contract_mapped",
    "is_flag_contractible",
    "is_minimal",
    "square_link_vertices",
    "reduce_to_octahedron",
    "verify_certificate",
    "certificate_to_json",
    "certificate_from_json",
    "ContractionCertificate",
    "CertStep",
    "CertificateCheck",
    "SplitSpec",
    "split_vertex",
    "flag_expansions",
    "expansion_bound",
    "diagonal_count",
    "brute_belts",
    "brute_is_flag",
    "brute_isomorphic",
    "enumerate_all_spheres",
    "HasseGraph",
    "HasseNode",
    "build",
    "verify_degree_bounds",
    "export_dot",
    "export_json",
    "export_levels_tsv",
    "import_json",
    "BoundsReport",
    "BoundEntry",
    "FlagsphereError",
    "NotASphere",
    "BadVertex",
    "NotAnEdge",
    "NotFlag",
    "LinkConditionViolated",
    "BadSplitSpec",
    "BudgetTooSmall",
    "BudgetTooLarge",
    "TooLarge",
    "InternalMinimalityViolation",
    "FormatError",
]
