"""Grid graph to R^4 minimum-link rectilinear covering tour toolkit."""

from ._linkforge import (  # noqa: F401
    Axis,
    CapacityError,
    GridGraph,
    JunctionRule,
    ParseError,
    Point4,
    RectPolyline,
    build_grid,
    construct_points,
    cyclic_hamming_lower_bound,
    enumerate_connected_grids,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    format_points,
    hamming,
    is_connected,
    min_link_path,
    min_link_tour,
    parse_grid,
    render_svg,
    roundtrip,
    serialize_grid,
    shared_axis,
    synthesize_path,
    synthesize_tour,
    validate_position,
    verify_polyline,
)

__version__ = "0.1.0"
