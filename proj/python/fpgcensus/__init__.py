"""Census of closed 3-manifold triangulations driven by face pairing graphs."""

from ._core import (
    CensusError,
    GraphError,
    H1,
    Perm4,
    Triangulation,
    TriangulationError,
    builtin,
    builtin_names,
    classify_graphs,
    double_edge_class_count,
    edge_orbit_count,
    enumerate_lsts,
    euler_characteristic,
    face_orbit_count,
    face_pairing_graphs,
    first_homology,
    is_closed_3manifold,
    is_orientable,
    iso_signature,
    pachner_23,
    pachner_32,
    run_census,
    verify_triple_edge_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
