"""Audits of nonpositive-curvature certificates for regular simplicial complexes.

The submodules mirror the checks: :mod:`~npcaudit.complex` (facets, links,
fullness, flagness), :mod:`~npcaudit.polygons` (empty short loops,
k-largeness, SNPC), :mod:`~npcaudit.metric` (codimension-2 metric links
and the 2π girth test), :mod:`~npcaudit.disks` (disk diagrams and minimal
spanning disks) and :mod:`~npcaudit.generators` (named fixtures).
"""

__version__ = "0.1.0"

from .complex import (  # noqa: E402
    ComplexError,
    SimplicialComplex,
    all_faces,
    combinatorial_distance,
    combinatorial_link,
    contains_simplex,
    enumerate_tight_cycles,
    from_facets,
    induced_subcomplex,
    is_flag,
    is_full_in,
    join,
)
from .disks import (  # noqa: E402
    DiskDiagram,
    DiskError,
    boundary_curvature,
    degree,
    enumerate_disk_types,
    find_minimal_spanning_disks,
    gauss_bonnet_total,
    is_cat0_disk,
    validate_disk,
)
from .metric import (  # noqa: E402
    MetricGraph,
    codim2_link_graph,
    dihedral_angle,
    edge_link_passes,
    girth_threshold,
    metric_girth,
)
from .polygons import candidate_fillings, find_empty_ngons, is_empty_ngon, is_k_large, is_snpc  # noqa: E402
