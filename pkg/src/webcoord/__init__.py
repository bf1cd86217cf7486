"""Tropical coordinates for SL3 non-elliptic webs on punctured surfaces.

Webs in good position with respect to an ideal triangulation are encoded by
one rung-less local web per triangle; :func:`global_coords` maps them into
the Knutson-Tao cone and :func:`reconstruct` inverts the map.
"""

from .cone import (
    RhombusVector,
    decompose_local,
    in_global_cone,
    in_local_cone,
    local_cone_points,
    rhombus_vector,
    tropical_x,
)
from .errors import (
    ContentMismatchError,
    CorrespondenceError,
    EllipticWebError,
    IncompatibleWebError,
    InvariantError,
    NotInConeError,
    NotRepresentableError,
    StaleSquareError,
    TriangulationError,
    WebcoordError,
    WebFormatError,
)
from .glue import (
    Crossing,
    GlobalWeb,
    SquareFace,
    Traveler,
    biangle_crossings,
    check_compatible,
    crossing_count,
    find_square_faces,
    global_coords,
    is_nonelliptic,
    ladder_glue,
    load_web,
    reconstruct,
    remove_squares,
    resolve_square,
    trace_travelers,
)
from .localweb import (
    GENERATORS,
    LocalWebContent,
    TriangleWeb,
    boundary_word,
    canonical_from_counts,
    corner_transpose,
    edge_dot_pair,
    edge_dot_pair_inverse,
    local_coords,
    strand_counts,
)
from .oracle import (
    TravelerCorrespondence,
    confluence_check,
    enumerate_cone,
    explore_square_removal,
    fellow_traveler_check,
    roundtrip_cone,
    roundtrip_web,
    shuffled_representative,
)
from .surface import (
    DotIndexing,
    IdealTriangulation,
    dot_indexing,
    euler_characteristic,
    load_triangulation,
)

__version__ = "0.1.0"

__all__ = [
    "ContentMismatchError",
    "CorrespondenceError",
    "Crossing",
    "DotIndexing",
    "EllipticWebError",
    "GENERATORS",
    "GlobalWeb",
    "IdealTriangulation",
    "IncompatibleWebError",
    "InvariantError",
    "LocalWebContent",
    "NotInConeError",
    "NotRepresentableError",
    "RhombusVector",
    "SquareFace",
    "StaleSquareError",
    "Traveler",
    "TravelerCorrespondence",
    "TriangleWeb",
    "TriangulationError",
    "WebFormatError",
    "WebcoordError",
    "biangle_crossings",
    "boundary_word",
    "canonical_from_counts",
    "check_compatible",
    "confluence_check",
    "corner_transpose",
    "crossing_count",
    "decompose_local",
    "dot_indexing",
    "edge_dot_pair",
    "edge_dot_pair_inverse",
    "enumerate_cone",
    "euler_characteristic",
    "explore_square_removal",
    "fellow_traveler_check",
    "find_square_faces",
    "global_coords",
    "in_global_cone",
    "in_local_cone",
    "is_nonelliptic",
    "ladder_glue",
    "load_triangulation",
    "load_web",
    "local_cone_points",
    "local_coords",
    "reconstruct",
    "remove_squares",
    "resolve_square",
    "rhombus_vector",
    "roundtrip_cone",
    "roundtrip_web",
    "shuffled_representative",
    "strand_counts",
    "trace_travelers",
    "tropical_x",
]
