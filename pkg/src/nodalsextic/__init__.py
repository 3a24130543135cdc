"""Exact verification toolkit for 65-nodal sextic surfaces.

The package pairs a binary-code census (the extended code attached to the node
set, its 26 minimal words, and the Euler-characteristic bookkeeping that powers
the node-count bound) with exact geometry over Q(sqrt 5): the Barth sextic, its
65 certified nodes, the symmetric linear 6x6 determinantal representation, the
26 contact planes, and the matching between the geometric incidence structure
and the code.
"""

from .qsqrt5 import ONE, SQRT5, TAU, TAUBAR, ZERO, QSqrt5
from .poly import (
    ParseError,
    Poly,
    PolyMatrix,
    ShapeError,
    format_poly,
    parse_poly,
    square_root,
)
from .f2code import (
    Bounds,
    Code,
    Codeword,
    LengthError,
    ParityError,
    RankError,
    SplittingType,
    bounds,
    decompose,
    euler_characteristic,
    extended_code,
    resolution_twists,
    table1_words,
    xor_sum,
)
from .surface import (
    CertificationError,
    CountError,
    Node,
    SearchConfig,
    barth_polynomial,
    certify_exact,
    find_nodes,
    nodes_from_json,
    nodes_to_json,
)
from .detrep import (
    EXPECTED_SCALAR,
    NotProportional,
    SymmetryError,
    barth_matrix_A,
    rank_partition,
    verify_determinant,
)
from .incidence import (
    LabelingMatch,
    NoMatch,
    Plane,
    PlaneRecord,
    candidate_planes,
    classify_planes,
    is_contact_plane,
    match_labeling,
)
from .kernels import kappa_kernel_check, kappa_matrix, kappa_prime_matrix
from .report import Report, ReportConfig, Section, run_report

__version__ = "1.0.0"

__all__ = [
    "QSqrt5", "ZERO", "ONE", "SQRT5", "TAU", "TAUBAR",
    "Poly", "PolyMatrix", "ShapeError", "ParseError",
    "parse_poly", "format_poly", "square_root",
    "Codeword", "Code", "LengthError", "RankError", "ParityError",
    "extended_code", "table1_words", "xor_sum", "decompose",
    "euler_characteristic", "Bounds", "bounds", "SplittingType",
    "resolution_twists",
    "Node", "SearchConfig", "CertificationError", "CountError",
    "barth_polynomial", "find_nodes", "certify_exact",
    "nodes_to_json", "nodes_from_json",
    "EXPECTED_SCALAR", "SymmetryError", "NotProportional",
    "barth_matrix_A", "verify_determinant", "rank_partition",
    "Plane", "PlaneRecord", "LabelingMatch", "NoMatch",
    "candidate_planes", "classify_planes", "is_contact_plane",
    "match_labeling",
    "kappa_matrix", "kappa_prime_matrix", "kappa_kernel_check",
    "Report", "ReportConfig", "Section", "run_report",
]
