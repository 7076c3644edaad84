"""Exact combinatorial topology on small simplicial complexes.

Facet-bitset complexes, GF(2) homology, collapsibility certificates,
bistellar moves, combinatorial-sphere certification, and a census of small
weak pseudomanifolds.
"""

__version__ = "0.1.0"

from .complexes import (
    Face,
    SimplicialComplex,
    are_isomorphic,
    cycle,
    from_facets,
    join,
    relabel,
    standard_ball,
    standard_sphere,
)
from .homology import (
    boundary_matrix,
    is_z2_acyclic,
    is_z2_homology_sphere,
    reduced_betti,
)
from .collapse import (
    CollapseCertificate,
    CollapseStep,
    CollapseVerdict,
    collapses_to,
    elementary_collapse,
    free_faces,
    is_collapsible,
    verify_certificate,
)
from .structure import (
    Decomposition,
    boundary_complex,
    decompose,
    is_pseudomanifold,
    is_weak_pm_with_boundary,
    is_weak_pseudomanifold,
    simplicial_complement,
    simplicial_neighbourhood,
)
from .bistellar import (
    FlipSchedule,
    FlipTrace,
    MoveDescriptor,
    apply_generalized_move,
    classify_move,
    core,
    enumerate_moves,
    flip_search,
    random_bistellar_walk,
)
from .recognition import (
    ProperMoveClassification,
    ManifoldVerdict,
    SphereCertificate,
    certify_sphere,
    classify_proper_moves,
    find_induced_ball,
    is_combinatorial_manifold,
)
from .census import (
    CensusResult,
    CensusSpec,
    enumerate_census,
    match_catalog,
    sample_acyclic_collapsibility,
)
from . import catalog
from .facetio import parse_facets, write_facets
